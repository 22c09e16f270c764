#include <doctest.h>

#include <random>

#include "augberg/charpoly.hpp"
#include "augberg/smith.hpp"

using namespace augberg;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Oracle: determinant by cofactor expansion.
Integer det(const IntMatrix& m) {
  if (m.rows() == 0) return 1;
  Integer acc = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(m.rows() - 1, m.cols() - 1);
    for (Eigen::Index r = 1; r < m.rows(); ++r)
      for (Eigen::Index c = 0, k = 0; c < m.cols(); ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    acc += (j % 2 == 0 ? 1 : -1) * m(0, j) * det(minor);
  }
  return acc;
}

// Oracle: product of invariant factors d_1..d_k equals the gcd of k x k minors.
Integer minors_gcd(const IntMatrix& m, int k) {
  Integer g = 0;
  std::vector<int> rows(k), cols(k);
  auto pick = [&](auto&& self, std::vector<int>& sel, int start, int depth, int limit, auto&& inner) -> void {
    if (depth == k) {
      inner();
      return;
    }
    for (int i = start; i < limit; ++i) {
      sel[depth] = i;
      self(self, sel, i + 1, depth + 1, limit, inner);
    }
  };
  pick(pick, rows, 0, 0, static_cast<int>(m.rows()), [&] {
    pick(pick, cols, 0, 0, static_cast<int>(m.cols()), [&] {
      IntMatrix sub(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
      g = gcd(g, det(sub));
    });
  });
  return g;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SmithNormalForm<IntMatrix> snf(from_rows({{2, 4}, {6, 8}}), SmithComputeInverses);
  CHECK(snf.rank() == 2);
  CHECK(snf.invariantFactors() == std::vector<Integer>{2, 4});

  SmithNormalForm<IntMatrix> torsion(from_rows({{2, 0}, {0, 3}}));
  CHECK(torsion.invariantFactors() == std::vector<Integer>{1, 6});

  SmithNormalForm<IntMatrix> zero(IntMatrix::Zero(3, 2));
  CHECK(zero.rank() == 0);

  SmithNormalForm<IntMatrix> empty(IntMatrix::Zero(0, 4), SmithComputeInverses);
  CHECK(empty.rank() == 0);
  CHECK(empty.matrixV().rows() == 4);
}

TEST_CASE("smith invariant factors agree with determinantal divisors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4), dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    SmithNormalForm<IntMatrix> snf(m, SmithComputeInverses);
    REQUIRE(snf.verify(m));
    const auto factors = snf.invariantFactors();
    Integer product = 1;
    for (int k = 1; k <= std::min<int>(m.rows(), m.cols()); ++k) {
      const Integer g = minors_gcd(m, k);
      if (k <= static_cast<int>(factors.size())) {
        product *= factors[k - 1];
        CHECK(product == g);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("characteristic polynomial and integer roots") {
  // Path-graph style matrix with eigenvalues 0, 1, 3.
  const IntMatrix l = from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  const auto p = characteristic_polynomial(l);
  CHECK(p.coeffs == std::vector<Integer>{0, 3, -4, 1});
  IntPolynomial rest;
  CHECK(nonnegative_integer_roots(p, Integer(4), &rest) == std::vector<Integer>{0, 1, 3});
  CHECK(rest.degree() == 0);
  CHECK(polynomial_string(p) == "x^3 - 4x^2 + 3x");

  // x^2 - 2 has no integer roots.
  const IntMatrix r = from_rows({{0, 2}, {1, 0}});
  IntPolynomial rest2;
  CHECK(nonnegative_integer_roots(characteristic_polynomial(r), Integer(2), &rest2).empty());
  CHECK(rest2.degree() == 2);
}

TEST_CASE("characteristic polynomial matches det(xI - A) at sample points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int n = 1; n <= 5; ++n) {
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    const auto p = characteristic_polynomial(a);
    CHECK(p.degree() == n);
    for (int x = -2; x <= 2; ++x) {
      IntMatrix shifted = IntMatrix::Identity(n, n) * Integer(x) - a;
      CHECK(p(Integer(x)) == det(shifted));
    }
  }
}
