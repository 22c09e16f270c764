#include <doctest.h>

#include <set>

#include "augberg/homology.hpp"
#include "augberg/shelling.hpp"
#include "augberg/tutte.hpp"
#include "corpus.hpp"

using namespace augberg;

namespace {

SimplicialComplex labeled(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& facets) {
  return SimplicialComplex::from_labeled_facets(std::move(vertices), facets);
}

FacetOrder as_given(const SimplicialComplex& k, const std::vector<std::vector<std::string>>& facets) {
  FacetOrder order;
  for (const auto& f : facets) order.facets.push_back(k.simplex_of(f));
  return order;
}

long total_betti(const HomologyProfile& h) {
  long sum = 0;
  for (auto b : h.betti) sum += b;
  return sum;
}

SimplicialComplex without(const SimplicialComplex& k, const std::vector<Simplex>& drop) {
  std::set<Simplex> gone(drop.begin(), drop.end());
  std::vector<Simplex> kept;
  for (const auto& f : k.facets())
    if (!gone.count(f)) kept.push_back(f);
  // Keep the boundaries of the removed facets.
  for (const auto& f : drop)
    for (std::size_t x = 0; x < f.size(); ++x) {
      Simplex ridge = f;
      ridge.erase(ridge.begin() + x);
      kept.push_back(ridge);
    }
  return SimplicialComplex::from_facets(k.vertices(), kept);
}

}  // namespace

TEST_CASE("shelling verification on small complexes") {
  SUBCASE("solid triangle shells with no homology facet") {
    auto k = labeled({"a", "b", "c"}, {{"a", "b", "c"}});
    auto result = verify_shelling(k, as_given(k, {{"a", "b", "c"}}));
    REQUIRE(result.ok());
    CHECK(result.certificate->homology_facets.empty());
    CHECK(result.certificate->restriction_faces[0].empty());
  }
  SUBCASE("pentagon in cyclic order has one homology facet") {
    auto k = labeled({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
    auto order = as_given(k, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
    auto result = verify_shelling(k, order);
    REQUIRE(result.ok());
    CHECK(result.certificate->homology_facets == std::vector<int>{4});
    CHECK(homology_facets(k, order).size() == 1);
    // The second edge is attached along vertex 2, so its restriction is the new vertex 3.
    CHECK(k.labels_of(result.certificate->restriction_faces[1]) == std::vector<std::string>{"3"});
  }
  SUBCASE("pentagon out of order fails") {
    auto k = labeled({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
    auto order = as_given(k, {{"1", "2"}, {"3", "4"}, {"2", "3"}, {"4", "5"}, {"1", "5"}});
    auto result = verify_shelling(k, order);
    REQUIRE_FALSE(result.ok());
    CHECK(result.failure->earlier == 0);
    CHECK(result.failure->later == 1);
    CHECK_THROWS_AS(homology_facets(k, order), PreconditionError);
    CHECK(homology_facets(k, order, true).size() == 2);
  }
  SUBCASE("two disjoint edges do not shell") {
    auto k = labeled({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(verify_shelling(k, as_given(k, {{"a", "b"}, {"c", "d"}})).ok());
  }
  SUBCASE("bad inputs") {
    auto k = labeled({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_THROWS_AS(verify_shelling(k, as_given(k, {{"a", "b"}})), InputError);
    auto mixed = labeled({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
    CHECK_THROWS_AS(verify_shelling(mixed, as_given(mixed, {{"a", "b", "c"}, {"c", "d"}})), PreconditionError);
  }
}

TEST_CASE("chain labels") {
  GroundSet e({"1", "2", "3"});
  std::vector<ElementSet> chain{ElementSet{}, e.subset({"2"}), e.all()};
  CHECK(chain_labels(chain) == std::vector<int>{1, 0});
}

TEST_CASE("U23 shellings") {
  const Matroid m = Matroid::uniform(2, 3);
  const auto t = tutte(m);
  const auto lex = lex_basis_shelling(m);
  CHECK(homology_facets(independence_complex(m), lex).size() == static_cast<std::size_t>(t.evaluate(0, 1)));
  const auto el = el_chain_shelling(m);
  CHECK(homology_facets(bergman_complex(m), el).size() == static_cast<std::size_t>(t.evaluate(1, 0)));

  const auto k = augmented_bergman(m);
  const auto ftb = flag_to_basis_order(m);
  const auto btf = basis_to_flag_order(m);
  CHECK(ftb.facets.size() == 9);
  CHECK(btf.facets.size() == 9);
  // Flag-to-basis puts the cone facets first and ends with the bases.
  for (std::size_t j = 0; j < 9; ++j) {
    const auto labels = k.labels_of(ftb.facets[j]);
    const bool basis = labels[0][0] == 'y' && labels[1][0] == 'y';
    CHECK(basis == (j >= 6));
  }
  CHECK(homology_facets(k, ftb).size() == 3);
  CHECK(homology_facets(k, btf).size() == 3);
}

TEST_CASE("corpus shellings") {
  for (const auto& named : corpus::matroids()) {
    CAPTURE(named.name);
    const Matroid& m = named.matroid;
    const auto k = augmented_bergman(m);
    const auto h = reduced_homology(k);
    const long bases = static_cast<long>(m.bases().size());
    const auto t = tutte(m);

    const auto lex = lex_basis_shelling(m);
    CHECK(static_cast<long>(homology_facets(independence_complex(m), lex).size()) == t.evaluate(0, 1));
    const auto el = el_chain_shelling(m);
    // T(1, 0) vanishes with loops while the lattice of flats ignores them.
    const bool loopless = m.closure(ElementSet{}).empty();
    if (loopless) CHECK(static_cast<long>(homology_facets(bergman_complex(m), el).size()) == t.evaluate(1, 0));

    const auto ftb = flag_to_basis_order(m);
    const auto ftb_h = homology_facets(k, ftb);
    CHECK(static_cast<long>(ftb_h.size()) == bases);
    // Its homology facets are exactly the basis facets y_B.
    for (const auto& f : ftb_h)
      for (const auto& label : k.labels_of(f)) CHECK(label[0] == 'y');

    const auto btf = basis_to_flag_order(m);
    const auto btf_h = homology_facets(k, btf);
    CHECK(static_cast<long>(btf_h.size()) == bases);
    CHECK(convolution_sum(m).evaluate(1, 1) == bases);
    CHECK(total_betti(h) == bases);
    CHECK(static_cast<long>(homology_facet_triples(m).size()) == bases);
    CHECK(basis_to_flag_mismatches(m).empty());

    // Removing the homology facets leaves a collapsible remainder.
    if (k.facet_count() <= 400) {
      CHECK(reduced_homology(without(k, btf_h)).acyclic());
      CHECK(reduced_homology(without(k, ftb_h)).acyclic());
    }

    const auto w1 = check_flag_to_basis_witnesses(m, 20000);
    const auto w2 = check_basis_to_flag_witnesses(m, 20000);
    CHECK(w1.failures == 0);
    CHECK(w2.failures == 0);

    // Orders are deterministic.
    CHECK(flag_to_basis_order(m).facets == ftb.facets);
    CHECK(basis_to_flag_order(m).facets == btf.facets);
  }
}
