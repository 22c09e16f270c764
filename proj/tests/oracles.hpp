#pragma once

// Reference computations used only by the tests. They deliberately take the
// slow, definition-level route so they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "augberg/complex.hpp"
#include "augberg/element_set.hpp"
#include "augberg/tutte.hpp"

namespace oracle {

using augberg::ElementSet;

/// Rank of A as the largest intersection with a basis.
inline int rank(const std::vector<ElementSet>& bases, ElementSet a) {
  int r = 0;
  for (ElementSet b : bases) r = std::max(r, (a & b).size());
  return r;
}

/// Bases of a graphic matroid: edge sets of maximal forests, found by union-find over all subsets.
inline std::vector<ElementSet> forest_bases(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<ElementSet> forests;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    bool acyclic = true;
    for (int k = 0; k < m && acyclic; ++k) {
      if (!((mask >> k) & 1u)) continue;
      const int a = find(edges[k].first), b = find(edges[k].second);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (!acyclic) continue;
    const int size = std::popcount(mask);
    if (size > best) {
      best = size;
      forests.clear();
    }
    if (size == best) forests.emplace_back(mask);
  }
  return forests;
}

/// Flats: sets whose rank grows when any outside element is added.
inline std::vector<ElementSet> flats(const std::vector<ElementSet>& bases, int n) {
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const ElementSet a(mask);
    const int r = rank(bases, a);
    bool flat = true;
    for (int e = 0; e < n && flat; ++e)
      if (!a.contains(e) && rank(bases, a.with(e)) == r) flat = false;
    if (flat) out.push_back(a);
  }
  return out;
}

/// Tutte polynomial as the rank-generating sum over all subsets.
inline augberg::TuttePolynomial tutte(const std::vector<ElementSet>& bases, int n) {
  const int r = rank(bases, ElementSet::full(n));
  // Expand (x-1)^a (y-1)^b binomially.
  auto binomial = [](int m, int k) {
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
    return c;
  };
  augberg::TuttePolynomial t;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const ElementSet a(mask);
    const int ra = rank(bases, a);
    const int p = r - ra, q = a.size() - ra;
    for (int i = 0; i <= p; ++i)
      for (int j = 0; j <= q; ++j) {
        const long long sign = ((p - i) + (q - j)) % 2 == 0 ? 1 : -1;
        t += augberg::BivariatePolynomial::monomial(i, j, sign * binomial(p, i) * binomial(q, j));
      }
  }
  return t;
}

/// Rank of an integer matrix modulo a large prime by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<long long>> a) {
  constexpr long long p = 1000000007;
  auto power = [&](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const long long inv = power(a[rank][c], p - 2);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long factor = a[r][c] * inv % p;
      for (int k = c; k < cols; ++k) a[r][k] = ((a[r][k] - factor * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers over GF(p) from scratch: faces by subset enumeration,
/// boundary matrices with alternating signs. Index k holds degree k - 1.
inline std::vector<int> betti_mod_p(const augberg::SimplicialComplex& k) {
  if (k.is_void()) return {};
  std::vector<std::vector<augberg::Simplex>> faces(k.dimension() + 2);
  std::map<augberg::Simplex, int> seen;
  for (const auto& f : k.facets())
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.size()); ++mask) {
      augberg::Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i) & 1u) s.push_back(f[i]);
      if (seen.emplace(s, 0).second) faces[s.size()].push_back(s);
    }
  std::vector<int> ranks(faces.size() + 1, 0);  // ranks[d] = rank of boundary from faces[d] to faces[d-1]
  for (std::size_t d = 1; d < faces.size(); ++d) {
    std::map<augberg::Simplex, int> row_of;
    for (std::size_t r = 0; r < faces[d - 1].size(); ++r) row_of[faces[d - 1][r]] = static_cast<int>(r);
    std::vector<std::vector<long long>> m(faces[d - 1].size(), std::vector<long long>(faces[d].size(), 0));
    for (std::size_t c = 0; c < faces[d].size(); ++c)
      for (std::size_t drop = 0; drop < faces[d][c].size(); ++drop) {
        auto t = faces[d][c];
        t.erase(t.begin() + drop);
        m[row_of[t]][c] = drop % 2 == 0 ? 1 : -1;
      }
    ranks[d] = rank_mod_p(m);
  }
  std::vector<int> betti;
  for (std::size_t d = 0; d < faces.size(); ++d)
    betti.push_back(static_cast<int>(faces[d].size()) - ranks[d] - ranks[d + 1]);
  return betti;
}

}  // namespace oracle
