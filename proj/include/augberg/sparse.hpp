#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "augberg/integer.hpp"

namespace augberg {

/// Column of a sparse integer matrix as (row, value) pairs.
using SparseColumn = std::vector<std::pair<int, long long>>;

/// Integer matrix stored by columns.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseColumn> columns;

  IntMatrix to_dense() const;
};

/// Rank and invariant factors of a Smith normal form.
struct SmithInvariants {
  long rank = 0;
  /// Invariant factors greater than one.
  std::vector<Integer> torsion;
};

/// Eliminates unit pivots sparsely, then finishes whatever is left with the
/// dense Smith normal form. Unit pivots only contribute invariant factors 1,
/// so the result is exact.
SmithInvariants smith_invariants(const SparseMatrix& a);

/// Z-basis of the kernel in reduced echelon form, one column per free
/// variable; entries on the free coordinates form an identity. Returns
/// nothing when the elimination would need a non-unit pivot or overflow
/// int64, so the caller can fall back to a dense method.
struct KernelBasis {
  IntMatrix basis;
  std::vector<int> free_columns;
};
std::optional<KernelBasis> sparse_kernel(const SparseMatrix& a);

}  // namespace augberg
