#include "augberg/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace augberg::io {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

template <typename T>
T get(const Json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const Json::exception&) {
    throw InputError("field '" + what + "' has the wrong type");
  }
}

std::vector<ElementSet> read_sets(const GroundSet& ground, const Json& list, const std::string& what) {
  if (!list.is_array()) throw InputError("field '" + what + "' must be a list of lists");
  std::vector<ElementSet> out;
  for (const auto& item : list) out.push_back(ground.subset(get<std::vector<std::string>>(item, what)));
  return out;
}

}  // namespace

RawInput read_raw(const Json& doc, const Limits& limits) {
  if (!doc.is_object()) throw InputError("document must be an object");
  if (doc.contains("schema")) {
    const auto schema = get<std::string>(doc["schema"], "schema");
    if (schema != kMatroidSchema && schema != kClosureSchema) throw InputError("unknown schema '" + schema + "'");
  }
  const auto elements = get<std::vector<std::string>>(field(doc, "elements"), "elements");
  if (static_cast<int>(elements.size()) > limits.ground)
    throw ResourceError("ground set has " + std::to_string(elements.size()) + " elements, cap is " +
                        std::to_string(limits.ground));
  RawInput raw;
  raw.ground = GroundSet(elements);
  int given = 0;
  for (const char* key : {"bases", "uniform", "graph", "closed_sets"}) given += doc.contains(key);
  if (given != 1) throw InputError("exactly one of bases, uniform, graph, closed_sets is required");

  if (doc.contains("closed_sets")) {
    raw.kind = RawInput::Kind::Closure;
    raw.sets = read_sets(raw.ground, doc["closed_sets"], "closed_sets");
  } else if (doc.contains("bases")) {
    raw.sets = read_sets(raw.ground, doc["bases"], "bases");
  } else if (doc.contains("uniform")) {
    const Json& u = doc["uniform"];
    const int r = get<int>(field(u, "r"), "uniform.r"), n = get<int>(field(u, "n"), "uniform.n");
    if (n != raw.ground.size()) throw InputError("uniform.n differs from the number of elements");
    if (r < 0 || r > n) throw InputError("uniform.r must lie in [0, n]");
    raw.sets = Matroid::uniform(r, raw.ground, limits).bases();
  } else {
    const Json& g = doc["graph"];
    const int vertices = get<int>(field(g, "vertices"), "graph.vertices");
    const auto edges = get<std::vector<std::pair<int, int>>>(field(g, "edges"), "graph.edges");
    if (static_cast<int>(edges.size()) != raw.ground.size())
      throw InputError("graph.edges must have one edge per element");
    for (auto [a, b] : edges)
      if (a < 0 || b < 0 || a >= vertices || b >= vertices) throw InputError("graph edge endpoint out of range");
    raw.sets = Matroid::graphic(vertices, edges, raw.ground, limits).bases();
  }
  return raw;
}

Input read_input(const Json& doc, const Limits& limits) {
  const RawInput raw = read_raw(doc, limits);
  Input in;
  in.kind = raw.kind;
  if (raw.kind == RawInput::Kind::Closure) {
    in.closure = ClosureOperator::from_closed_sets(raw.ground, raw.sets, limits);
  } else {
    in.matroid = Matroid::from_bases(raw.ground, raw.sets, limits);
    in.closure = ClosureOperator::from_matroid(in.matroid);
  }
  return in;
}

Input with_order(const Input& in, const std::vector<std::string>& omega) {
  const GroundSet& ground = in.ground();
  if (static_cast<int>(omega.size()) != ground.size()) throw InputError("--omega must list every element once");
  std::vector<int> order;
  for (const auto& label : omega) order.push_back(ground.index_of(label));
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("--omega must list every element once");
  Input out;
  out.kind = in.kind;
  if (in.is_matroid()) {
    out.matroid = in.matroid.reordered(order);
    out.closure = ClosureOperator::from_matroid(out.matroid);
  } else {
    out.closure = reordered(in.closure, order);
  }
  return out;
}

std::vector<std::string> labels(const GroundSet& ground, ElementSet s) { return ground.labels_of(s); }

Json matroid_document(const Matroid& m) {
  Json doc;
  doc["schema"] = kMatroidSchema;
  doc["elements"] = m.ground().labels();
  auto bases = m.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  Json list = Json::array();
  for (ElementSet b : bases) list.push_back(labels(m.ground(), b));
  doc["bases"] = std::move(list);
  return doc;
}

Json closure_document(const ClosureOperator& f) {
  Json doc;
  doc["schema"] = kClosureSchema;
  doc["elements"] = f.ground().labels();
  Json list = Json::array();
  for (ElementSet c : f.closed_sets()) list.push_back(labels(f.ground(), c));
  doc["closed_sets"] = std::move(list);
  return doc;
}

Json canonical_document(const Input& in) {
  return in.is_matroid() ? matroid_document(in.matroid) : closure_document(in.closure);
}

Json complex_document(const SimplicialComplex& k, const std::string& kind) {
  Json doc;
  doc["schema"] = kComplexSchema;
  doc["complex"] = kind;
  doc["vertices"] = k.vertices();
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(k.labels_of(f));
  doc["facets"] = std::move(facets);
  doc["dimension"] = k.dimension();
  doc["pure"] = k.is_pure();
  doc["f_vector"] = k.f_vector();
  return doc;
}

Json profile_document(const HomologyProfile& h) {
  Json doc;
  doc["summary"] = h.to_string();
  doc["betti"] = h.betti;
  Json torsion = Json::array();
  for (const auto& degree : h.torsion) {
    Json factors = Json::array();
    for (const auto& t : degree) factors.push_back(t.get_str());
    torsion.push_back(std::move(factors));
  }
  doc["torsion"] = std::move(torsion);
  doc["first_degree"] = -1;
  return doc;
}

Json certificate_document(const SimplicialComplex& k, const ShellingResult& result, const FacetOrder& order) {
  Json doc;
  doc["schema"] = kCertificateSchema;
  doc["order"] = to_string(order.source);
  doc["shelling"] = result.ok();
  if (!result.ok()) {
    doc["failure"] = {{"earlier", k.labels_of(order.facets[result.failure->earlier])},
                      {"later", k.labels_of(order.facets[result.failure->later])}};
    return doc;
  }
  const auto& cert = *result.certificate;
  std::vector<bool> homology(order.facets.size(), false);
  for (int j : cert.homology_facets) homology[j] = true;
  Json facets = Json::array();
  for (std::size_t j = 0; j < order.facets.size(); ++j) {
    Simplex f = order.facets[j];
    std::sort(f.begin(), f.end());
    facets.push_back({{"facet", k.labels_of(f)},
                      {"restriction", k.labels_of(cert.restriction_faces[j])},
                      {"homology", static_cast<bool>(homology[j])}});
  }
  doc["facets"] = std::move(facets);
  doc["homology_facets"] = cert.homology_facets.size();
  return doc;
}

FacetOrder read_order(const Json& doc, const SimplicialComplex& k) {
  const Json& list = doc.is_object() ? field(doc, "facets") : doc;
  if (!list.is_array()) throw InputError("facet order must be a list");
  FacetOrder order{{}, OrderSource::User};
  for (const auto& item : list) {
    const Json& labels = item.is_object() ? field(item, "facet") : item;
    const auto names = get<std::vector<std::string>>(labels, "facets");
    for (const auto& name : names)
      if (!k.has_vertex(name)) throw InputError("unknown vertex '" + name + "' in facet order");
    order.facets.push_back(k.simplex_of(names));
  }
  return order;
}

Json polynomial_document(const BivariatePolynomial& p) {
  Json doc;
  doc["text"] = p.to_string();
  Json terms = Json::array();
  for (const auto& [exp, c] : p.coefficients()) terms.push_back({{"x", exp.first}, {"y", exp.second}, {"c", c}});
  doc["terms"] = std::move(terms);
  return doc;
}

Json representation_document(const RepresentationReport& report) {
  Json doc;
  doc["group_order"] = report.group_order;
  doc["degrees"] = report.degrees;
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"class", row.cycles},
                    {"size", row.class_size},
                    {"traces", row.traces},
                    {"fixed_basis_sums", row.expected}});
  doc["character_table"] = std::move(rows);
  doc["character_ok"] = report.character_ok;
  doc["coordinate_ok"] = report.coordinate_ok;
  doc["failures"] = report.failures;
  return doc;
}

std::string digest(const std::string& bytes) {
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), hash, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  out << "sha256:";
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(hash[i]);
  return out.str();
}

}  // namespace augberg::io
