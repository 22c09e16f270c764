#include <doctest.h>

#include "augberg/bergman.hpp"
#include "augberg/io.hpp"
#include "corpus.hpp"

using namespace augberg;
using io::Json;

TEST_CASE("matroid documents") {
  SUBCASE("three input forms give the same matroid") {
    const auto a = io::read_input(io::parse(R"({"elements": ["1","2","3"], "uniform": {"r": 2, "n": 3}})"));
    const auto b = io::read_input(io::parse(R"({"elements": ["1","2","3"], "bases": [["2","3"],["1","2"],["1","3"]]})"));
    const auto c = io::read_input(
        io::parse(R"({"elements": ["1","2","3"], "graph": {"vertices": 3, "edges": [[0,1],[1,2],[0,2]]}})"));
    CHECK(a.matroid == b.matroid);
    CHECK(a.matroid == c.matroid);
    CHECK(a.is_matroid());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(io::parse("{\"elements\": [1"), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1"]})")), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1"], "bases": [["1"]], "uniform": {"r":1,"n":1}})")),
                    InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1"], "bases": [["2"]]})")), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1","2"], "bases": [["1","2"],["1"]]})")), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"schema": "other@1", "elements": [], "bases": [[]]})")), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": "12", "bases": []})")), InputError);
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1","2"], "uniform": {"r": 1, "n": 3}})")), InputError);
    Limits small;
    small.ground = 2;
    CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1","2","3"], "uniform": {"r": 1, "n": 3}})"), small),
                    ResourceError);
  }
  SUBCASE("canonical round trip over the corpus") {
    for (const auto& named : corpus::matroids()) {
      CAPTURE(named.name);
      const Json doc = io::matroid_document(named.matroid);
      const auto parsed = io::read_input(io::parse(doc.dump()));
      CHECK(parsed.matroid == named.matroid);
      CHECK(io::canonical_document(parsed).dump(2) == doc.dump(2));
    }
  }
}

TEST_CASE("closure documents") {
  const auto f = corpus::worked_example();
  const Json doc = io::closure_document(f);
  const auto parsed = io::read_input(io::parse(doc.dump()));
  CHECK_FALSE(parsed.is_matroid());
  CHECK(parsed.closure == f);
  CHECK(io::canonical_document(parsed) == doc);
  for (const auto& g : corpus::random_closures(20, 3)) {
    const auto back = io::read_input(io::parse(io::closure_document(g).dump()));
    CHECK(back.closure == g);
  }
  CHECK_THROWS_AS(io::read_input(io::parse(R"({"elements": ["1","2"], "closed_sets": [["1"],["2"]]})")), InputError);
}

TEST_CASE("linear order changes") {
  const auto in = io::read_input(io::parse(R"({"elements": ["a","b","c"], "bases": [["a","b"],["a","c"]]})"));
  const auto reordered = io::with_order(in, {"c", "b", "a"});
  CHECK(reordered.ground().labels() == std::vector<std::string>{"c", "b", "a"});
  CHECK(reordered.matroid.bases().size() == 2);
  CHECK_THROWS_AS(io::with_order(in, {"a", "a", "b"}), InputError);
  CHECK_THROWS_AS(io::with_order(in, {"a", "b"}), InputError);

  const auto closure = io::read_input(io::closure_document(corpus::worked_example()));
  const auto turned = io::with_order(closure, {"5", "4", "3", "2", "1"});
  CHECK(turned.closure.closed_sets().size() == closure.closure.closed_sets().size());
  CHECK(bases(turned.closure).size() == bases(closure.closure).size());
}

TEST_CASE("certificates and digests") {
  const Matroid m = Matroid::uniform(2, 3);
  const auto k = augmented_bergman(m);
  const auto order = flag_to_basis_order(m);
  const Json cert = io::certificate_document(k, verify_shelling(k, order), order);
  CHECK(cert["shelling"] == true);
  CHECK(cert["homology_facets"] == 3);
  CHECK(cert["facets"].size() == 9);
  const FacetOrder back = io::read_order(cert, k);
  CHECK(back.facets == order.facets);
  CHECK_THROWS_AS(io::read_order(io::parse(R"([["y:9"]])"), k), InputError);

  CHECK(io::digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const Json complex = io::complex_document(k, "augmented");
  CHECK(complex["vertices"].size() == 7);
  CHECK(complex["f_vector"] == Json::array({1, 7, 9}));
}
