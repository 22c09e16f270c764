#include "augberg/bergman.hpp"

#include <algorithm>
#include <map>

namespace augberg {

namespace {

// Positions of AugBerg vertices inside the list built by augmented_vertices.
class VertexIndex {
 public:
  VertexIndex(const GroundSet& ground, const SetLattice& closed) {
    int next = 0;
    for (int e = 0; e < ground.size(); ++e)
      if (!closed.bottom().contains(e)) y_[e] = next++;
    for (ElementSet f : closed.members())
      if (f != closed.top()) x_[f] = next++;
  }
  int y(int e) const { return y_.at(e); }
  int x(ElementSet f) const { return x_.at(f); }

 private:
  std::map<int, int> y_;
  std::map<ElementSet, int> x_;
};

std::string x_label(const GroundSet& ground, ElementSet f) {
  return AugVertex{AugVertex::Kind::X, f}.label(ground);
}

std::string y_label(const GroundSet& ground, ElementSet s) {
  return AugVertex{AugVertex::Kind::Y, s}.label(ground);
}

bool chain_less(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), graded_less);
}

// Order complex of the listed closed sets under inclusion.
SimplicialComplex closed_set_order_complex(const GroundSet& ground, const std::vector<ElementSet>& sets) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(sets.size(), std::vector<bool>(sets.size(), false));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    labels.push_back(x_label(ground, sets[i]));
    for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = sets[i].subset_of(sets[j]);
  }
  return order_complex(labels, leq);
}

void check_facet_cap(std::size_t count, const Limits& limits) {
  if (static_cast<long long>(count) > limits.facets)
    throw ResourceError("complex has " + std::to_string(count) + " facets, cap is " + std::to_string(limits.facets));
}

}  // namespace

std::string AugVertex::label(const GroundSet& ground) const {
  return (kind == Kind::Y ? "y:" : "x:") + ground.join(set);
}

AugVertex AugVertex::parse(const GroundSet& ground, const std::string& label) {
  if (label.size() < 2 || label[1] != ':' || (label[0] != 'x' && label[0] != 'y'))
    throw InputError("malformed vertex label '" + label + "'");
  AugVertex v;
  v.kind = label[0] == 'y' ? Kind::Y : Kind::X;
  std::vector<std::string> parts;
  const std::string body = label.substr(2);
  if (!body.empty()) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = body.find(',', start);
      parts.push_back(body.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  v.set = ground.subset(parts);
  if (v.kind == Kind::Y && v.set.empty()) throw InputError("y-vertex without elements: '" + label + "'");
  return v;
}

std::vector<std::string> augmented_vertices(const GroundSet& ground, const SetLattice& closed) {
  std::vector<std::string> out;
  for (int e = 0; e < ground.size(); ++e)
    if (!closed.bottom().contains(e)) out.push_back(y_label(ground, ElementSet::singleton(e)));
  for (ElementSet f : closed.members())
    if (f != closed.top()) out.push_back(x_label(ground, f));
  return out;
}

namespace {

std::vector<std::string> y_vertices(const GroundSet& ground, ElementSet loops) {
  std::vector<std::string> out;
  for (int e = 0; e < ground.size(); ++e)
    if (!loops.contains(e)) out.push_back(y_label(ground, ElementSet::singleton(e)));
  return out;
}

SimplicialComplex y_complex(const GroundSet& ground, ElementSet loops, const std::vector<ElementSet>& sets) {
  std::map<int, int> position;
  int next = 0;
  for (int e = 0; e < ground.size(); ++e)
    if (!loops.contains(e)) position[e] = next++;
  std::vector<Simplex> facets;
  for (ElementSet s : sets) {
    Simplex f;
    for (int e : s.elements()) f.push_back(position.at(e));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(y_vertices(ground, loops), std::move(facets));
}

}  // namespace

SimplicialComplex independence_complex(const Matroid& m) {
  return y_complex(m.ground(), m.closure(ElementSet{}), m.bases());
}

SimplicialComplex independence_complex(const ClosureOperator& f) {
  return y_complex(f.ground(), f.close(ElementSet{}), independents(f));
}

SimplicialComplex bergman_complex(const ClosureOperator& f) {
  std::vector<ElementSet> proper;
  const SetLattice& l = f.lattice();
  for (ElementSet s : l.members())
    if (s != l.bottom() && s != l.top()) proper.push_back(s);
  return closed_set_order_complex(f.ground(), proper);
}

SimplicialComplex bergman_complex(const Matroid& m) { return bergman_complex(ClosureOperator::from_matroid(m)); }

SimplicialComplex cone_bergman(const ClosureOperator& f) {
  std::vector<ElementSet> sets;
  for (ElementSet s : f.closed_sets())
    if (s != f.lattice().top()) sets.push_back(s);
  return closed_set_order_complex(f.ground(), sets);
}

SimplicialComplex cone_bergman(const Matroid& m) { return cone_bergman(ClosureOperator::from_matroid(m)); }

std::vector<FlagFacet> facets_as_flags(const Matroid& m) {
  const FlatsLattice flats = flats_lattice(m);
  const SetLattice& l = flats.lattice;
  const int top = l.size() - 1;
  std::vector<FlagFacet> out;
  for (ElementSet i : m.independents()) {
    const ElementSet f1 = m.closure(i);
    if (f1 == l.top()) {
      out.push_back({i, {}});
      continue;
    }
    for (const auto& chain : l.maximal_chains(l.index_of(f1), top)) {
      FlagFacet flag{i, {}};
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) flag.chain.push_back(l.member(chain[k]));
      out.push_back(std::move(flag));
    }
  }
  for (const auto& flag : out) {
    const bool closure_ok = flag.chain.empty() ? m.closure(flag.independent) == l.top()
                                               : m.closure(flag.independent) == flag.chain.front();
    if (!closure_ok || flag.independent.size() + static_cast<int>(flag.chain.size()) != m.rank())
      throw InvariantViolation("generated flag facet violates the facet conditions");
  }
  std::sort(out.begin(), out.end(), [](const FlagFacet& a, const FlagFacet& b) {
    if (a.independent != b.independent) return graded_less(a.independent, b.independent);
    return chain_less(a.chain, b.chain);
  });
  return out;
}

SimplicialComplex complex_from_flags(const GroundSet& ground, const SetLattice& closed,
                                     const std::vector<FlagFacet>& flags) {
  const VertexIndex index(ground, closed);
  std::vector<Simplex> facets;
  facets.reserve(flags.size());
  for (const auto& flag : flags) {
    Simplex s;
    for (int e : flag.independent.elements()) s.push_back(index.y(e));
    for (ElementSet f : flag.chain) s.push_back(index.x(f));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(augmented_vertices(ground, closed), std::move(facets));
}

Simplex flag_simplex(const SimplicialComplex& k, const GroundSet& ground, const FlagFacet& flag) {
  Simplex s;
  for (int e : flag.independent.elements()) s.push_back(k.index_of(y_label(ground, ElementSet::singleton(e))));
  for (ElementSet f : flag.chain) s.push_back(k.index_of(x_label(ground, f)));
  std::sort(s.begin(), s.end());
  return s;
}

FlagFacet simplex_flag(const SimplicialComplex& k, const GroundSet& ground, const Simplex& s) {
  FlagFacet flag;
  for (int v : s) {
    const AugVertex vertex = AugVertex::parse(ground, k.label(v));
    if (vertex.kind == AugVertex::Kind::Y) flag.independent = flag.independent | vertex.set;
    else flag.chain.push_back(vertex.set);
  }
  std::sort(flag.chain.begin(), flag.chain.end(), graded_less);
  return flag;
}

SimplicialComplex augmented_bergman(const Matroid& m, const Limits& limits) {
  auto flags = facets_as_flags(m);
  check_facet_cap(flags.size(), limits);
  return complex_from_flags(m.ground(), flats_lattice(m).lattice, flags);
}

SimplicialComplex augmented_bergman(const ClosureOperator& f, const Limits& limits) {
  const SetLattice& l = f.lattice();
  const int top = l.size() - 1;
  std::vector<FlagFacet> candidates;
  for (ElementSet i : independents(f)) {
    const ElementSet fi = f.close(i);
    if (fi == l.top()) {
      candidates.push_back({i, {}});
      continue;
    }
    for (const auto& chain : l.maximal_chains(l.index_of(fi), top)) {
      FlagFacet flag{i, {}};
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) flag.chain.push_back(l.member(chain[k]));
      candidates.push_back(std::move(flag));
    }
    check_facet_cap(candidates.size(), limits);
  }
  return complex_from_flags(f.ground(), l, candidates);
}

SimplicialComplex delta_prime(const ClosureOperator& f, bool decone) {
  const SimplicialComplex k = augmented_bergman(f);
  std::vector<Simplex> facets;
  for (const auto& facet : k.facets()) {
    const FlagFacet flag = simplex_flag(k, f.ground(), facet);
    const bool basis = flag.chain.empty() && f.close(flag.independent) == f.ground().all();
    if (!basis) {
      facets.push_back(facet);
      continue;
    }
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      Simplex ridge = facet;
      ridge.erase(ridge.begin() + drop);
      facets.push_back(std::move(ridge));
    }
  }
  SimplicialComplex out = SimplicialComplex::from_facets(k.vertices(), std::move(facets));
  const std::string cone_point = x_label(f.ground(), f.close(ElementSet{}));
  if (decone && out.has_vertex(cone_point)) out = out.deleted(out.index_of(cone_point));
  return out;
}

SimplicialComplex delta_double_prime(const ClosureOperator& f, bool decone) {
  const ElementSet all = f.ground().all();
  const ElementSet bottom = f.close(ElementSet{});
  std::vector<AugVertex> elements;
  for (ElementSet i : independents(f))
    if (!i.empty() && f.close(i) != all) elements.push_back({AugVertex::Kind::Y, i});
  for (ElementSet c : f.closed_sets())
    if (c != all && !(decone && c == bottom)) elements.push_back({AugVertex::Kind::X, c});
  const std::size_t n = elements.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(elements[a].label(f.ground()));
    for (std::size_t b = 0; b < n; ++b) {
      const AugVertex &u = elements[a], &v = elements[b];
      if (u.kind == AugVertex::Kind::X && v.kind == AugVertex::Kind::Y) continue;
      leq[a][b] = u.set.subset_of(v.set);
    }
  }
  return order_complex(labels, leq);
}

bool PiReport::fibers_acyclic() const {
  return std::all_of(fibers.begin(), fibers.end(), [](const FiberReport& r) { return r.homology.acyclic(); });
}

PiMap pi_map(const ClosureOperator& f, bool decone) {
  PiMap pi{delta_double_prime(f, decone), decone ? bergman_complex(f) : cone_bergman(f), {}};
  for (const auto& label : pi.source.vertices()) {
    const AugVertex v = AugVertex::parse(f.ground(), label);
    const ElementSet image = v.kind == AugVertex::Kind::Y ? f.close(v.set) : v.set;
    pi.vertex_image.push_back(pi.target.index_of(x_label(f.ground(), image)));
  }
  return pi;
}

PiReport check_pi_map(const ClosureOperator& f, const PiMap& pi) {
  PiReport report;
  for (const auto& facet : pi.source.facets()) {
    Simplex image;
    for (int v : facet) image.push_back(pi.vertex_image.at(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (!pi.target.contains(image)) {
      report.simplicial = false;
      throw InvariantViolation("retraction sends a simplex outside the target complex");
    }
  }
  for (int t = 0; t < pi.target.vertex_count(); ++t) {
    const ElementSet top = AugVertex::parse(f.ground(), pi.target.label(t)).set;
    std::vector<bool> keep(pi.source.vertex_count());
    for (int v = 0; v < pi.source.vertex_count(); ++v) {
      const ElementSet image = AugVertex::parse(f.ground(), pi.target.label(pi.vertex_image[v])).set;
      keep[v] = image.subset_of(top);
    }
    report.fibers.push_back({top, reduced_homology(pi.source.induced(keep))});
  }
  return report;
}

bool ClosureCheck::ok() const {
  return homology_matches_bases && (decone || delta_prime.acyclic()) && euler_prime == euler_double_prime &&
         delta_prime == delta_double_prime && pi_simplicial && fibers_acyclic;
}

ClosureCheck closure_check(const ClosureOperator& f, bool decone, const Limits& limits) {
  ClosureCheck out;
  out.decone = decone;
  out.augmented = reduced_homology(augmented_bergman(f, limits));
  const auto prime = delta_prime(f, decone);
  const auto double_prime = delta_double_prime(f, decone);
  out.delta_prime = reduced_homology(prime);
  out.delta_double_prime = reduced_homology(double_prime);
  out.euler_prime = prime.reduced_euler_characteristic();
  out.euler_double_prime = double_prime.reduced_euler_characteristic();

  out.bases_by_size.assign(f.size() + 1, 0);
  for (ElementSet b : bases(f)) ++out.bases_by_size[b.size()];
  out.homology_matches_bases = out.augmented.torsion_free();
  for (int i = -1; i < f.size(); ++i)
    if (out.augmented.rank(i) != out.bases_by_size[i + 1]) out.homology_matches_bases = false;
  for (int i = f.size(); i + 1 < static_cast<int>(out.augmented.betti.size()); ++i)
    if (out.augmented.rank(i) != 0) out.homology_matches_bases = false;

  try {
    const auto report = check_pi_map(f, pi_map(f, decone));
    out.pi_simplicial = report.simplicial;
    out.fibers = static_cast<int>(report.fibers.size());
    out.fibers_acyclic = report.fibers_acyclic();
  } catch (const InvariantViolation&) {
    out.pi_simplicial = false;
  }
  return out;
}

}  // namespace augberg
