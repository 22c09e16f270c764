#include <doctest.h>

#include <random>

#include "augberg/matroid.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace augberg;

namespace {

ElementSet set_of(const Matroid& m, std::vector<std::string> labels) { return m.ground().subset(labels); }

}  // namespace

TEST_CASE("uniform matroid U23") {
  const Matroid m = Matroid::uniform(2, 3);
  CHECK(m.rank() == 2);
  CHECK(m.bases().size() == 3);
  CHECK(m.bases().front() == set_of(m, {"1", "2"}));
  CHECK(m.is_independent(set_of(m, {"1", "3"})));
  CHECK_FALSE(m.is_independent(m.ground().all()));
  CHECK(m.closure(set_of(m, {"1"})) == set_of(m, {"1"}));
  CHECK(m.closure(set_of(m, {"1", "2"})) == m.ground().all());
  CHECK(flats_lattice(m).size() == 5);
}

TEST_CASE("axiom validation reports the violated axiom") {
  GroundSet e({"a", "b", "c"});
  auto fam = [&](std::vector<std::vector<std::string>> sets) {
    std::vector<ElementSet> out;
    for (auto& s : sets) out.push_back(e.subset(s));
    return out;
  };
  CHECK(validate_matroid(e, fam({{}, {"a"}, {"b"}, {"a", "b"}})).ok);
  CHECK(validate_matroid(e, fam({{"a"}})).axiom == "I1");
  const auto i2 = validate_matroid(e, fam({{}, {"a", "b"}, {"a"}}));
  CHECK(i2.axiom == "I2");
  CHECK(i2.witness.size() == 2);
  // {c} cannot be augmented from {a, b}.
  const auto i3 = validate_matroid(e, fam({{}, {"a"}, {"b"}, {"c"}, {"a", "b"}}));
  CHECK_FALSE(i3.ok);
  CHECK(i3.axiom == "I3");
  CHECK(i3.witness.size() == 2);

  CHECK(validate_bases(e, {}).axiom == "basis-nonempty");
  CHECK(validate_bases(e, fam({{"a"}, {"a", "b"}})).axiom == "basis-cardinality");
  CHECK(validate_bases(e, fam({{"a", "b"}, {"b", "c"}})).ok);
  CHECK(validate_bases(GroundSet({"a", "b", "c", "d"}), {ElementSet(3), ElementSet(12)}).axiom == "basis-exchange");
  CHECK_THROWS_AS(Matroid::from_bases(GroundSet({"a", "b", "c", "d"}), {ElementSet(3), ElementSet(12)}), InputError);
}

TEST_CASE("input errors and caps") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(GroundSet({"a,b"}), InputError);
  CHECK_THROWS_AS(Matroid::uniform(4, 3), InputError);
  CHECK_THROWS_AS(Matroid::uniform(2, 11), ResourceError);
  Limits wide;
  wide.ground = 12;
  CHECK(Matroid::uniform(1, 11, wide).size() == 11);
  const Matroid m = Matroid::uniform(2, 3);
  CHECK_THROWS_AS(m.rank(ElementSet(8)), InputError);
  CHECK_THROWS_AS(m.ground().index_of("9"), InputError);
}

TEST_CASE("graphic matroids agree with the forest oracle") {
  for (const auto& g : corpus::graphic_matroids(5)) {
    const auto expected = oracle::forest_bases(g.vertices, g.edges);
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    CHECK_MESSAGE(g.matroid.bases() == sorted, g.name);
  }
  // A loop and a parallel pair.
  const Matroid m = Matroid::graphic(2, {{0, 0}, {0, 1}, {0, 1}});
  CHECK(m.is_loop(0));
  CHECK(m.bases().size() == 2);
  CHECK_FALSE(m.is_coloop(1));
}

TEST_CASE("rank, closure and flats agree with definition-level oracles") {
  for (const auto& item : corpus::matroids()) {
    const Matroid& m = item.matroid;
    const int n = m.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      const ElementSet a(mask);
      const int r = oracle::rank(m.bases(), a);
      REQUIRE(m.rank(a) == r);
      const ElementSet cl = m.closure(a);
      CHECK(a.subset_of(cl));
      CHECK(m.rank(cl) == r);
      CHECK(m.closure(cl) == cl);
      for (int e = 0; e < n; ++e)
        if (!a.contains(e)) CHECK(m.closure(a).subset_of(m.closure(a.with(e))));
      CHECK(m.is_independent(a) == (r == a.size()));
    }
    auto expected = oracle::flats(m.bases(), n);
    std::sort(expected.begin(), expected.end(), graded_less);
    const FlatsLattice lattice = flats_lattice(m);
    CHECK_MESSAGE(lattice.flats() == expected, item.name);
    for (ElementSet f : lattice.flats()) CHECK(lattice.rank_of(f) == m.rank(f));
  }
}

TEST_CASE("minors") {
  const Matroid m = Matroid::uniform(2, 3);
  const Matroid c = contraction(m, set_of(m, {"1"}));
  CHECK(c.ground().labels() == std::vector<std::string>{"2", "3"});
  CHECK(c.rank() == 1);
  CHECK(c.bases().size() == 2);
  CHECK(flats_lattice(c).size() == 2);
  CHECK(contraction(m, ElementSet{}) == m);
  CHECK(restriction(m, m.ground().all()) == m);

  for (const auto& item : corpus::graphic_matroids(4)) {
    const Matroid& g = item.matroid;
    const ElementSet all = g.ground().all();
    for (std::uint32_t a = 0; a <= all.bits(); ++a)
      for (std::uint32_t b = 0; b <= all.bits(); ++b) {
        if ((b & ~a) != 0) continue;
        const Matroid ra = restriction(g, ElementSet(a));
        CHECK(restriction(ra, compress(ElementSet(b), ElementSet(a))) == restriction(g, ElementSet(b)));
      }
    // Flats of M/F correspond to the interval [F, E].
    const FlatsLattice lattice = flats_lattice(g);
    for (ElementSet f : lattice.flats()) {
      const Matroid mf = contraction(g, f);
      std::vector<ElementSet> interval;
      for (ElementSet h : lattice.flats())
        if (f.subset_of(h)) interval.push_back(compress(h - f, all - f));
      std::sort(interval.begin(), interval.end(), graded_less);
      CHECK(flats_lattice(mf).flats() == interval);
      for (ElementSet s : mf.bases()) CHECK(g.rank(expand(s, all - f) | f) == g.rank());
    }
  }
}

TEST_CASE("reordering and permuting") {
  const Matroid m = Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}, {0, 2}});
  const Matroid r = m.reordered({3, 2, 1, 0});
  CHECK(r.ground().labels() == std::vector<std::string>{"4", "3", "2", "1"});
  CHECK(r.bases().size() == m.bases().size());
  const Permutation swap({1, 0, 2, 3});
  CHECK(m.permuted(swap) == m);
  const Permutation parallel({0, 1, 3, 2});
  CHECK(m.permuted(parallel) == m);
}
