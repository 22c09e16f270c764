#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "augberg/integer.hpp"

namespace augberg {

/// Univariate polynomial with coefficient k at index k.
template <typename Scalar>
struct Polynomial {
  std::vector<Scalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Scalar operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

using IntPolynomial = Polynomial<Integer>;

/// Characteristic polynomial det(xI - A) by the division-free Samuelson-Berkowitz
/// recurrence, so it stays exact over any integer scalar.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  // p holds coefficients highest degree first while iterating.
  std::vector<Scalar> p{Scalar(1)};
  for (Eigen::Index k = 0; k < n; ++k) {
    // Leading (k+1)x(k+1) block: M = a[0:k,0:k], R = a[k,0:k], S = a[0:k,k].
    std::vector<Scalar> column{Scalar(1), Scalar(-a(k, k))};
    Vector<Scalar> power(k);  // M^m S
    for (Eigen::Index i = 0; i < k; ++i) power(i) = a(i, k);
    for (Eigen::Index m = 0; m < k; ++m) {
      Scalar rs = 0;
      for (Eigen::Index i = 0; i < k; ++i) rs += a(k, i) * power(i);
      column.push_back(-rs);
      Vector<Scalar> next(k);
      for (Eigen::Index i = 0; i < k; ++i) {
        Scalar acc = 0;
        for (Eigen::Index j = 0; j < k; ++j) acc += a(i, j) * power(j);
        next(i) = acc;
      }
      power = next;
    }
    // Toeplitz product: q = T * p with T lower triangular of size (k+2) x (k+1).
    std::vector<Scalar> q(k + 2, Scalar(0));
    for (std::size_t r = 0; r < q.size(); ++r)
      for (std::size_t c = 0; c < p.size() && c <= r; ++c) q[r] += column[r - c] * p[c];
    p = std::move(q);
  }
  Polynomial<Scalar> out;
  out.coeffs.assign(p.rbegin(), p.rend());
  return out;
}

/// Integer roots of `p` inside [0, bound], with multiplicity, found by repeated
/// synthetic division. `remainder` receives the cofactor left over.
template <typename Scalar>
std::vector<Scalar> nonnegative_integer_roots(Polynomial<Scalar> p, const Scalar& bound,
                                              Polynomial<Scalar>* remainder = nullptr) {
  std::vector<Scalar> roots;
  for (Scalar k = 0; k <= bound && p.degree() > 0; k += 1) {
    while (p.degree() > 0 && p(k) == 0) {
      // Divide by (x - k).
      std::vector<Scalar> quotient(p.coeffs.size() - 1);
      Scalar carry = 0;
      for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeffs[i] + carry * k;
        quotient[i - 1] = carry;
      }
      p.coeffs = std::move(quotient);
      roots.push_back(k);
    }
  }
  if (remainder) *remainder = p;
  return roots;
}

/// Human-readable polynomial, highest degree first: "x^5 - 10x^4 + 25x".
template <typename Scalar>
std::string polynomial_string(const Polynomial<Scalar>& p) {
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Scalar& c = p.coeffs[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mag != 1 || d == 0) {
      std::ostringstream digits;
      digits << mag;
      out += digits.str();
    }
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace augberg
