#pragma once

#include <string>
#include <utility>
#include <vector>

#include "augberg/charpoly.hpp"
#include "augberg/complex.hpp"
#include "augberg/integer.hpp"
#include "augberg/sparse.hpp"

namespace augberg {

/// Augmented simplicial chain complex of a complex, empty face included.
///
/// Basis of C_i is the lexicographic list of i-faces; the boundary of
/// [v_0 < ... < v_i] is sum_k (-1)^k [... omit v_k ...].
class ChainComplex {
 public:
  /// Builds all boundary maps and checks that consecutive ones compose to zero
  /// (InvariantViolation otherwise).
  explicit ChainComplex(const SimplicialComplex& k);

  /// Top degree; -1 for {} and -2 for the void complex.
  int top_degree() const { return static_cast<int>(faces_.size()) - 2; }
  /// Number of i-faces, zero outside [-1, top_degree()].
  int chain_rank(int i) const;
  const std::vector<Simplex>& basis(int i) const;
  /// Position of an i-face in basis(i), or -1.
  int face_index(const Simplex& s) const;
  /// Dense matrix of boundary map from C_i to C_{i-1}: chain_rank(i-1) rows and chain_rank(i) columns.
  IntMatrix boundary(int i) const;
  SparseMatrix sparse_boundary(int i) const;
  /// Sparse column `c` of the boundary map in degree i as (row, sign) pairs.
  const std::vector<std::pair<int, int>>& boundary_column(int i, int c) const;

 private:
  std::vector<std::vector<Simplex>> faces_;  // faces_[i + 1]
  std::vector<std::vector<std::vector<std::pair<int, int>>>> columns_;  // columns_[i + 1][c]
};

/// Reduced integral homology, degrees -1 through the top dimension.
struct HomologyProfile {
  std::vector<int> betti;  // betti[i + 1] = rank of the free part in degree i
  std::vector<std::vector<Integer>> torsion;  // torsion[i + 1]: invariant factors > 1

  int rank(int i) const { return i + 1 >= 0 && i + 1 < static_cast<int>(betti.size()) ? betti[i + 1] : 0; }
  bool torsion_free() const;
  bool acyclic() const;
  /// Degrees with nonzero free rank.
  std::vector<int> support() const;
  /// E.g. "H~1 = Z^3" or "0" when acyclic.
  std::string to_string() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_homology(const ChainComplex& c);
HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Explicit basis of a torsion-free reduced homology group.
///
/// `cycles()` has one column per basis class, expressed in the i-face basis;
/// `coordinates()` expresses any i-cycle in that basis modulo boundaries.
/// Throws UnsupportedError when the group has torsion.
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplex& c, int degree);

  int degree() const { return degree_; }
  int rank() const { return static_cast<int>(cycles_.cols()); }
  const IntMatrix& cycles() const { return cycles_; }
  /// Rows give the coordinate functionals on C_i.
  const IntMatrix& projection() const { return projection_; }
  IntVector coordinates(const IntVector& cycle) const { return projection_ * cycle; }
  IntMatrix coordinates(const IntMatrix& cycles) const { return projection_ * cycles; }

 private:
  int degree_;
  IntMatrix cycles_;
  IntMatrix projection_;
};

/// The combinatorial operator boundary_i^T boundary_i on C_i.
IntMatrix down_laplacian(const ChainComplex& c, int i);

struct LaplacianSpectrum {
  IntPolynomial char_poly;
  /// Roots found in [0, max absolute row sum], with multiplicity.
  std::vector<Integer> integer_roots;
  /// All roots are nonnegative integers.
  bool integral = false;
};

LaplacianSpectrum laplacian_spectrum(const ChainComplex& c, int i);

}  // namespace augberg
