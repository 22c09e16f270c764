#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "augberg/bergman.hpp"
#include "augberg/shelling.hpp"
#include "augberg/symmetry.hpp"
#include "corpus.hpp"

using namespace augberg;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long trace(const IntMatrix& m) {
  long t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i).get_si();
  return t;
}

// Number of permutations mapping independent sets to independent sets, by
// checking rank of every subset image.
long count_rank_preserving(const Matroid& m) {
  const int n = m.ground().size();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  long count = 0;
  do {
    Permutation g(image);
    bool ok = true;
    for (std::uint32_t bits = 0; ok && bits < (1u << n); ++bits)
      ok = m.rank(ElementSet(bits)) == m.rank(g.apply(ElementSet(bits)));
    count += ok;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism groups") {
  CHECK(aut_matroid(Matroid::uniform(2, 3)).order() == 6);
  for (int n = 1; n <= 4; ++n) CHECK(aut_matroid(Matroid::boolean(n)).order() == factorial(n));
  for (const auto& named : corpus::matroids()) {
    CAPTURE(named.name);
    const auto g = aut_matroid(named.matroid);
    CHECK(g.contains(Permutation::identity(named.matroid.ground().size())));
    CHECK(g.order() == count_rank_preserving(named.matroid));
    CHECK(aut_group(ClosureOperator::from_matroid(named.matroid)).elements == g.elements);
    long total = 0;
    for (const auto& cls : conjugacy_classes(g)) total += static_cast<long>(cls.size());
    CHECK(total == g.order());
  }
  CHECK(conjugacy_classes(aut_matroid(Matroid::boolean(4))).size() == 5);
  CHECK_THROWS_AS(aut_matroid(Matroid::uniform(2, 9)), ResourceError);
  Limits wide;
  wide.automorphism = 9;
  wide.ground = 10;
  CHECK_NOTHROW(aut_matroid(Matroid::uniform(1, 2), wide));
}

TEST_CASE("action of a transposition on AugBerg(U23)") {
  const Matroid m = Matroid::uniform(2, 3);
  const auto k = augmented_bergman(m);
  const Permutation g({2, 1, 0});
  const auto action = induced_vertex_action(g, k, m.ground());
  auto image = [&](const std::string& v) { return k.label(action[k.index_of(v)]); };
  CHECK(image("y:1") == "y:3");
  CHECK(image("y:3") == "y:1");
  CHECK(image("x:1") == "x:3");
  CHECK(image("x:") == "x:");
  CHECK(image("y:2") == "y:2");
  CHECK(image("x:2") == "x:2");

  // g[y1,y3] = -[y1,y3], g[y1,y2] = -[y2,y3], g[y2,y3] = -[y1,y2].
  const ChainComplex c(k);
  const auto map = chain_map(c, action, 1);
  auto edge = [&](const std::string& a, const std::string& b) { return c.face_index(k.simplex_of({a, b})); };
  CHECK(map.target[edge("y:1", "y:3")] == edge("y:1", "y:3"));
  CHECK(map.sign[edge("y:1", "y:3")] == -1);
  CHECK(map.target[edge("y:1", "y:2")] == edge("y:2", "y:3"));
  CHECK(map.sign[edge("y:1", "y:2")] == -1);
  CHECK(map.target[edge("y:2", "y:3")] == edge("y:1", "y:2"));
  CHECK(map.sign[edge("y:2", "y:3")] == -1);

  const IntMatrix h = homology_matrix(g, k, m.ground(), 1);
  CHECK(h.rows() == 3);
  CHECK(trace(h) == -1);
  CHECK(signed_perm_character(g, m) == -1);
  const IntMatrix id = homology_matrix(Permutation::identity(3), k, m.ground(), 1);
  CHECK(id == IntMatrix::Identity(3, 3));
  CHECK(signed_perm_character(Permutation::identity(3), m) == 3);
}

TEST_CASE("Boolean matroids act by the sign character") {
  for (int n = 1; n <= 4; ++n) {
    const Matroid m = Matroid::boolean(n);
    const HomologyAction action(augmented_bergman(m), m.ground());
    for (const auto& g : aut_matroid(m).elements) {
      const IntMatrix h = action.matrix(g, n - 1);
      REQUIRE(h.rows() == 1);
      CHECK(h(0, 0) == g.sign());
      CHECK(signed_perm_character(g, m) == g.sign());
    }
    const auto report = verify_homology_rep(m);
    CHECK(report.ok());
    for (const auto& row : report.rows) CHECK(row.traces == std::vector<long>{row.representative.sign()});
  }
}

TEST_CASE("homology action is functorial") {
  std::mt19937_64 rng(7);
  for (const auto& named : corpus::matroids()) {
    const Matroid& m = named.matroid;
    if (m.ground().size() > 5) continue;
    CAPTURE(named.name);
    const auto group = aut_matroid(m);
    const HomologyAction action(augmented_bergman(m), m.ground());
    const int top = m.rank() - 1;
    std::uniform_int_distribution<int> pick(0, group.order() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const Permutation& g = group.elements[pick(rng)];
      const Permutation& h = group.elements[pick(rng)];
      CHECK(action.matrix(g * h, top) == IntMatrix(action.matrix(g, top) * action.matrix(h, top)));
      const auto bg = signed_basis_action(m.bases(), g), bh = signed_basis_action(m.bases(), h);
      const auto bgh = signed_basis_action(m.bases(), g * h);
      for (std::size_t b = 0; b < m.bases().size(); ++b) {
        CHECK(bgh.image[b] == bg.image[bh.image[b]]);
        CHECK(bgh.sign[b] == bg.sign[bh.image[b]] * bh.sign[b]);
      }
    }
  }
}

TEST_CASE("corpus representations") {
  for (const auto& named : corpus::matroids()) {
    CAPTURE(named.name);
    const Matroid& m = named.matroid;
    const auto report = verify_homology_rep(m);
    CHECK(report.ok());
    for (const auto& failure : report.failures) MESSAGE(failure);
    CHECK(report.degrees == std::vector<int>{m.rank() - 1});
    for (const auto& row : report.rows)
      if (row.representative.is_identity()) CHECK(row.traces.front() == static_cast<long>(m.bases().size()));

    // Automorphisms permute the homology facets of the flag-to-basis shelling.
    const auto k = augmented_bergman(m);
    const auto facets = homology_facets(k, flag_to_basis_order(m));
    const std::set<Simplex> set(facets.begin(), facets.end());
    for (const auto& g : aut_matroid(m).elements) {
      const auto action = induced_vertex_action(g, k, m.ground());
      for (const auto& f : facets) {
        Simplex image;
        for (int v : f) image.push_back(action[v]);
        std::sort(image.begin(), image.end());
        CHECK(set.count(image) == 1);
      }
    }
  }
}

TEST_CASE("closure representations") {
  const auto f = corpus::worked_example();
  const auto report = verify_homology_rep(f);
  CHECK(report.ok());
  CHECK(report.degrees == std::vector<int>{1, 2});
  CHECK(report.group_order == 6);
  for (const auto& row : report.rows) CHECK(row.traces == row.expected);

  for (const auto& g : corpus::random_closures(20, 11)) {
    const auto r = verify_homology_rep(g);
    CHECK(r.ok());
    for (const auto& failure : r.failures) MESSAGE(failure);
  }
}

TEST_CASE("character table text") {
  const auto report = verify_homology_rep(Matroid::uniform(2, 3));
  CHECK(report.rows.size() == 3);
  CHECK(report.table() == "class\tsize\tH~1\n()\t1\t3\n(2 3)\t3\t-1\n(1 2 3)\t2\t0\n");
}
