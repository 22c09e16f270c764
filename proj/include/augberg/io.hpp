#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augberg/closure.hpp"
#include "augberg/complex.hpp"
#include "augberg/homology.hpp"
#include "augberg/matroid.hpp"
#include "augberg/shelling.hpp"
#include "augberg/symmetry.hpp"
#include "augberg/tutte.hpp"

namespace augberg::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kMatroidSchema = "augberg/matroid@1";
inline constexpr const char* kClosureSchema = "augberg/closure@1";
inline constexpr const char* kComplexSchema = "augberg/complex@1";
inline constexpr const char* kCertificateSchema = "augberg/certificate@1";
inline constexpr const char* kReportSchema = "augberg/report@1";

/// Throws InputError with the parser's byte position on malformed text.
Json parse(const std::string& text);

/// Input document before any axiom check: ground set plus either bases or closed sets.
struct RawInput {
  enum class Kind { Matroid, Closure };
  Kind kind = Kind::Matroid;
  GroundSet ground;
  std::vector<ElementSet> sets;  // bases or closed sets
};

/// Reads `elements` and exactly one of `bases`, `uniform {r, n}`, `graph {vertices, edges}`,
/// `closed_sets`. A present `schema` must be one of the two input schemas.
RawInput read_raw(const Json& doc, const Limits& limits = {});

/// Validated input; `closure` is filled for both kinds (flats for a matroid).
struct Input {
  RawInput::Kind kind = RawInput::Kind::Matroid;
  Matroid matroid;
  ClosureOperator closure;
  bool is_matroid() const { return kind == RawInput::Kind::Matroid; }
  const GroundSet& ground() const { return closure.ground(); }
};

/// Throws InputError on an axiom failure, ResourceError over the ground cap.
Input read_input(const Json& doc, const Limits& limits = {});
/// Reorders the linear order to the given labels (a permutation of E).
Input with_order(const Input& in, const std::vector<std::string>& omega);

Json matroid_document(const Matroid& m);
Json closure_document(const ClosureOperator& f);
/// Canonical form of an input: bases in lexicographic order, or closed sets in graded order.
Json canonical_document(const Input& in);

std::vector<std::string> labels(const GroundSet& ground, ElementSet s);
Json complex_document(const SimplicialComplex& k, const std::string& kind);
Json profile_document(const HomologyProfile& h);
Json certificate_document(const SimplicialComplex& k, const ShellingResult& result, const FacetOrder& order);
/// Facet order from a list of label lists or from a certificate document.
FacetOrder read_order(const Json& doc, const SimplicialComplex& k);
Json polynomial_document(const BivariatePolynomial& p);
Json representation_document(const RepresentationReport& report);

/// Hex SHA-256 of the bytes, prefixed "sha256:".
std::string digest(const std::string& bytes);

}  // namespace augberg::io
