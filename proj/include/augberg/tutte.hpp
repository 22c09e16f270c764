#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "augberg/matroid.hpp"

namespace augberg {

/// Polynomial in x and y with integer coefficients, keyed by exponent pair (i, j).
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  static BivariatePolynomial monomial(int i, int j, std::int64_t c = 1);

  const std::map<std::pair<int, int>, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int i, int j) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;
  /// Drops every term with a positive power of x (the substitution x = 0).
  BivariatePolynomial at_x_zero() const;
  /// Drops every term with a positive power of y (the substitution y = 0).
  BivariatePolynomial at_y_zero() const;
  /// Readable form, highest x-degree first: "x^2 + x + y".
  std::string to_string() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void add_term(int i, int j, std::int64_t c);
  std::map<std::pair<int, int>, std::int64_t> coeffs_;
};

using TuttePolynomial = BivariatePolynomial;

/// Tutte polynomial by deletion-contraction, pivoting on the smallest element
/// that is neither a loop nor a coloop.
TuttePolynomial tutte(const Matroid& m);

/// Internally and externally active elements of a basis with respect to the
/// matroid's linear order.
struct Activities {
  ElementSet internal;
  ElementSet external;
};

/// Throws InputError when `basis` is not a basis of `m`.
Activities activities(const Matroid& m, ElementSet basis);

/// Sum of x^{|internal|} y^{|external|} over all bases.
TuttePolynomial tutte_from_activities(const Matroid& m);

/// Sum over flats F of T_{M|F}(0, y) * T_{M/F}(x, 0).
BivariatePolynomial convolution_sum(const Matroid& m);
bool convolution_check(const Matroid& m);

}  // namespace augberg
