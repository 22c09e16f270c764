#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "augberg/errors.hpp"
#include "augberg/integer.hpp"

namespace augberg {

enum SmithOptions {
  /// Diagonal only.
  SmithDiagonalOnly = 0,
  /// Also accumulate U and V with U * A * V = D.
  SmithComputeTransforms = 1,
  /// Also accumulate U^{-1} and V^{-1}; implies SmithComputeTransforms.
  SmithComputeInverses = 3,
};

/// When set, every decomposition accumulates all transforms and checks
/// U*A*V = D, unimodularity and the divisibility chain before returning.
inline bool& smith_self_check() {
  static bool enabled = false;
  return enabled;
}

/// Smith normal form of an integer matrix, U * A * V = D.
///
/// D is diagonal with nonnegative entries d_1 | d_2 | ... | d_k followed by
/// zeros; U and V are unimodular. Pivoting always picks the nonzero entry of
/// smallest absolute value, so entry growth stays small on sparse +-1
/// matrices such as simplicial boundary maps.
///
/// \code
/// IntMatrix a(2, 2);
/// a << 2, 4, 6, 8;
/// SmithNormalForm<IntMatrix> snf(a);
/// snf.invariantFactors();  // {2, 4}
/// \endcode
template <typename MatrixType_>
class SmithNormalForm {
 public:
  using MatrixType = MatrixType_;
  using Scalar = typename MatrixType::Scalar;
  using Index = Eigen::Index;

  SmithNormalForm() = default;
  explicit SmithNormalForm(const MatrixType& a, int options = SmithDiagonalOnly) { compute(a, options); }

  SmithNormalForm& compute(const MatrixType& a, int options = SmithDiagonalOnly);

  const MatrixType& matrixD() const { return d_; }
  const MatrixType& matrixU() const { return u_; }
  const MatrixType& matrixV() const { return v_; }
  const MatrixType& matrixUInverse() const { return u_inv_; }
  const MatrixType& matrixVInverse() const { return v_inv_; }
  Index rank() const { return rank_; }
  /// Nonzero diagonal entries, in divisibility order.
  std::vector<Scalar> invariantFactors() const;
  bool hasTransforms() const { return (options_ & SmithComputeTransforms) != 0; }
  bool hasInverses() const { return (options_ & SmithComputeInverses) == SmithComputeInverses; }

  /// Checks the decomposition against the original matrix. Requires transforms;
  /// unimodularity is checked through the inverses when they were computed.
  bool verify(const MatrixType& a) const;

 private:
  void swap_rows(Index i, Index j);
  void swap_cols(Index i, Index j);
  // row_i += q * row_j
  void add_row(Index i, Index j, const Scalar& q);
  // col_i += q * col_j
  void add_col(Index i, Index j, const Scalar& q);
  void negate_row(Index i);
  bool find_pivot(Index t, Index& pi, Index& pj) const;
  void fix_divisibility();

  MatrixType d_, u_, v_, u_inv_, v_inv_;
  Index rank_ = 0;
  int options_ = SmithDiagonalOnly;
};

template <typename MatrixType>
SmithNormalForm<MatrixType>& SmithNormalForm<MatrixType>::compute(const MatrixType& a, int options) {
  options_ = smith_self_check() ? SmithComputeInverses : options;
  d_ = a;
  const Index rows = a.rows(), cols = a.cols();
  if (hasTransforms()) {
    u_ = MatrixType::Identity(rows, rows);
    v_ = MatrixType::Identity(cols, cols);
  }
  if (hasInverses()) {
    u_inv_ = MatrixType::Identity(rows, rows);
    v_inv_ = MatrixType::Identity(cols, cols);
  }

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    Index pi, pj;
    if (!find_pivot(t, pi, pj)) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d_(i, t) == 0) continue;
        Scalar q = d_(i, t) / d_(t, t);
        add_row(i, t, Scalar(-q));
        if (d_(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d_(t, j) == 0) continue;
        Scalar q = d_(t, j) / d_(t, t);
        add_col(j, t, Scalar(-q));
        if (d_(t, j) != 0) clean = false;
      }
      if (clean) break;
      // A remainder survived: it is smaller than the pivot, so promote it.
      Index best_i = t, best_j = t;
      Scalar best = abs_value(d_(t, t));
      for (Index i = t + 1; i < rows; ++i)
        if (d_(i, t) != 0 && abs_value(d_(i, t)) < best) {
          best = abs_value(d_(i, t));
          best_i = i;
          best_j = t;
        }
      for (Index j = t + 1; j < cols; ++j)
        if (d_(t, j) != 0 && abs_value(d_(t, j)) < best) {
          best = abs_value(d_(t, j));
          best_i = t;
          best_j = j;
        }
      swap_rows(t, best_i);
      swap_cols(t, best_j);
    }
    if (d_(t, t) < 0) negate_row(t);
  }
  rank_ = t;
  fix_divisibility();

  if (smith_self_check() && !verify(a)) throw InvariantViolation("Smith normal form self-check failed");
  return *this;
}

template <typename MatrixType>
bool SmithNormalForm<MatrixType>::find_pivot(Index t, Index& pi, Index& pj) const {
  bool found = false;
  Scalar best = 0;
  for (Index j = t; j < d_.cols(); ++j)
    for (Index i = t; i < d_.rows(); ++i) {
      if (d_(i, j) == 0) continue;
      Scalar mag = abs_value(d_(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
        if (best == 1) return true;
      }
    }
  return found;
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::fix_divisibility() {
  for (Index i = 0; i < rank_; ++i) {
    for (Index j = i + 1; j < rank_; ++j) {
      const Scalar a = d_(i, i), b = d_(j, j);
      if (b % a == 0) continue;
      Scalar s, t;
      const Scalar g = extended_gcd(a, b, s, t);
      const Scalar ag = a / g, bg = b / g;
      // Rows: [s t; -b/g a/g], columns: [1 -t*b/g; 1 s*a/g]; both have determinant 1.
      auto combine_rows = [&](MatrixType& m) {
        for (Index k = 0; k < m.cols(); ++k) {
          Scalar ri = m(i, k), rj = m(j, k);
          m(i, k) = s * ri + t * rj;
          m(j, k) = -bg * ri + ag * rj;
        }
      };
      auto combine_cols = [&](MatrixType& m) {
        for (Index k = 0; k < m.rows(); ++k) {
          Scalar ci = m(k, i), cj = m(k, j);
          m(k, i) = ci + cj;
          m(k, j) = -t * bg * ci + s * ag * cj;
        }
      };
      if (hasTransforms()) {
        combine_rows(u_);
        combine_cols(v_);
      }
      if (hasInverses()) {
        // U2^{-1} = [a/g -t; b/g s] on the right of U^{-1};
        // V2^{-1} = [s*a/g t*b/g; -1 1] on the left of V^{-1}.
        for (Index k = 0; k < u_inv_.rows(); ++k) {
          Scalar ci = u_inv_(k, i), cj = u_inv_(k, j);
          u_inv_(k, i) = ag * ci + bg * cj;
          u_inv_(k, j) = -t * ci + s * cj;
        }
        for (Index k = 0; k < v_inv_.cols(); ++k) {
          Scalar ri = v_inv_(i, k), rj = v_inv_(j, k);
          v_inv_(i, k) = s * ag * ri + t * bg * rj;
          v_inv_(j, k) = -ri + rj;
        }
      }
      d_(i, i) = g;
      d_(j, j) = a / g * b;
    }
  }
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::swap_rows(Index i, Index j) {
  if (i == j) return;
  d_.row(i).swap(d_.row(j));
  if (hasTransforms()) u_.row(i).swap(u_.row(j));
  if (hasInverses()) u_inv_.col(i).swap(u_inv_.col(j));
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::swap_cols(Index i, Index j) {
  if (i == j) return;
  d_.col(i).swap(d_.col(j));
  if (hasTransforms()) v_.col(i).swap(v_.col(j));
  if (hasInverses()) v_inv_.row(i).swap(v_inv_.row(j));
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::add_row(Index i, Index j, const Scalar& q) {
  for (Index k = 0; k < d_.cols(); ++k)
    if (d_(j, k) != 0) d_(i, k) += q * d_(j, k);
  if (hasTransforms())
    for (Index k = 0; k < u_.cols(); ++k)
      if (u_(j, k) != 0) u_(i, k) += q * u_(j, k);
  if (hasInverses())
    for (Index k = 0; k < u_inv_.rows(); ++k)
      if (u_inv_(k, i) != 0) u_inv_(k, j) -= q * u_inv_(k, i);
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::add_col(Index i, Index j, const Scalar& q) {
  for (Index k = 0; k < d_.rows(); ++k)
    if (d_(k, j) != 0) d_(k, i) += q * d_(k, j);
  if (hasTransforms())
    for (Index k = 0; k < v_.rows(); ++k)
      if (v_(k, j) != 0) v_(k, i) += q * v_(k, j);
  if (hasInverses())
    for (Index k = 0; k < v_inv_.cols(); ++k)
      if (v_inv_(i, k) != 0) v_inv_(j, k) -= q * v_inv_(i, k);
}

template <typename MatrixType>
void SmithNormalForm<MatrixType>::negate_row(Index i) {
  d_.row(i) = -d_.row(i);
  if (hasTransforms()) u_.row(i) = -u_.row(i);
  if (hasInverses()) u_inv_.col(i) = -u_inv_.col(i);
}

template <typename MatrixType>
std::vector<typename SmithNormalForm<MatrixType>::Scalar> SmithNormalForm<MatrixType>::invariantFactors() const {
  std::vector<Scalar> out;
  for (Index i = 0; i < rank_; ++i) out.push_back(d_(i, i));
  return out;
}

template <typename MatrixType>
bool SmithNormalForm<MatrixType>::verify(const MatrixType& a) const {
  if (!hasTransforms()) return false;
  for (Index i = 0; i < d_.rows(); ++i)
    for (Index j = 0; j < d_.cols(); ++j) {
      if (i != j && d_(i, j) != 0) return false;
      if (i == j && (d_(i, i) < 0 || (i < rank_) != (d_(i, i) != 0))) return false;
    }
  for (Index i = 0; i + 1 < rank_; ++i)
    if (d_(i + 1, i + 1) % d_(i, i) != 0) return false;
  if (MatrixType(u_ * a * v_) != d_) return false;
  if (hasInverses()) {
    if (MatrixType(u_ * u_inv_) != MatrixType::Identity(u_.rows(), u_.cols())) return false;
    if (MatrixType(v_ * v_inv_) != MatrixType::Identity(v_.rows(), v_.cols())) return false;
  }
  return true;
}

}  // namespace augberg
