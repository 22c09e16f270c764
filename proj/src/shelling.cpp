#include "augberg/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "augberg/tutte.hpp"

namespace augberg {

std::string to_string(OrderSource source) {
  switch (source) {
    case OrderSource::FlagToBasis: return "flag-to-basis";
    case OrderSource::BasisToFlag: return "basis-to-flag";
    case OrderSource::LexBasis: return "lex-basis";
    case OrderSource::ElChain: return "el-chain";
    case OrderSource::User: return "user";
  }
  return "user";
}

ShellingResult verify_shelling(const SimplicialComplex& k, const FacetOrder& order) {
  if (!k.is_pure()) throw PreconditionError("shelling verification needs a pure complex");
  const auto& facets = order.facets;
  {
    auto sorted = facets;
    for (auto& f : sorted) std::sort(f.begin(), f.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != k.facets()) throw InputError("facet order is not a permutation of the facets");
  }
  ShellingCertificate cert;
  cert.order = order;
  const int m = static_cast<int>(facets.size());
  cert.restriction_faces.resize(m);
  cert.witnesses.resize(m);
  for (int j = 0; j < m; ++j) {
    Simplex phi = facets[j];
    std::sort(phi.begin(), phi.end());
    // R(phi_j) collects the vertex missed by each earlier facet meeting phi_j in a ridge.
    std::map<int, int> witness;
    std::vector<Simplex> earlier(j);
    for (int i = 0; i < j; ++i) {
      earlier[i] = facets[i];
      std::sort(earlier[i].begin(), earlier[i].end());
      const Simplex common = intersection(phi, earlier[i]);
      if (common.size() + 1 != phi.size()) continue;
      Simplex missing;
      std::set_difference(phi.begin(), phi.end(), common.begin(), common.end(), std::back_inserter(missing));
      witness.emplace(missing.front(), i);
    }
    Simplex r;
    for (auto [x, i] : witness) {
      r.push_back(x);
      cert.witnesses[j].emplace_back(x, i);
    }
    // phi_i before phi_j needs a witness avoiding phi_i: some x in R(phi_j) outside phi_i.
    for (int i = 0; i < j; ++i)
      if (is_subset(r, earlier[i])) return {std::nullopt, ShellingFailure{i, j}};
    if (r == phi) cert.homology_facets.push_back(j);
    cert.restriction_faces[j] = std::move(r);
  }
  return {std::move(cert), std::nullopt};
}

namespace {

ShellingCertificate verified(const SimplicialComplex& k, const FacetOrder& order, bool skip) {
  if (!skip) {
    auto result = verify_shelling(k, order);
    if (!result.ok()) throw PreconditionError("facet order is not a shelling");
    return std::move(*result.certificate);
  }
  // Restriction faces are defined for any order; reuse the verifier without the failure check.
  ShellingCertificate cert;
  cert.order = order;
  for (std::size_t j = 0; j < order.facets.size(); ++j) {
    Simplex phi = order.facets[j];
    std::sort(phi.begin(), phi.end());
    std::set<int> r;
    for (std::size_t i = 0; i < j; ++i) {
      Simplex other = order.facets[i];
      std::sort(other.begin(), other.end());
      const Simplex common = intersection(phi, other);
      if (common.size() + 1 != phi.size()) continue;
      for (int x : phi)
        if (!std::binary_search(common.begin(), common.end(), x)) r.insert(x);
    }
    cert.restriction_faces.emplace_back(r.begin(), r.end());
    if (cert.restriction_faces.back() == phi) cert.homology_facets.push_back(static_cast<int>(j));
  }
  return cert;
}

}  // namespace

std::vector<Simplex> restriction_faces(const SimplicialComplex& k, const FacetOrder& order, bool skip_verification) {
  return verified(k, order, skip_verification).restriction_faces;
}

std::vector<Simplex> homology_facets(const SimplicialComplex& k, const FacetOrder& order, bool skip_verification) {
  const auto cert = verified(k, order, skip_verification);
  std::vector<Simplex> out;
  for (int j : cert.homology_facets) {
    Simplex f = order.facets[j];
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> chain_labels(const std::vector<ElementSet>& chain) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) out.push_back((chain[k + 1] - chain[k]).min());
  return out;
}

namespace {

void require_shelling(const SimplicialComplex& k, const FacetOrder& order, const char* what) {
  if (!verify_shelling(k, order).ok()) throw InvariantViolation(std::string(what) + " order failed to shell");
}

Simplex x_simplex(const SimplicialComplex& k, const GroundSet& ground, const std::vector<ElementSet>& sets) {
  std::vector<std::string> labels;
  for (ElementSet s : sets) labels.push_back(AugVertex{AugVertex::Kind::X, s}.label(ground));
  return k.simplex_of(labels);
}

// Labels of the full maximal chain F_1 < ... < F_l < E.
std::vector<int> flag_labels(const FlagFacet& flag, ElementSet all) {
  auto chain = flag.chain;
  chain.push_back(all);
  return chain_labels(chain);
}

ElementSet first_flat(const FlagFacet& flag, ElementSet all) { return flag.chain.empty() ? all : flag.chain.front(); }

FacetOrder to_order(const Matroid& m, const std::vector<FlagFacet>& flags, OrderSource source,
                    const SimplicialComplex& k) {
  FacetOrder order{{}, source};
  for (const auto& flag : flags) order.facets.push_back(flag_simplex(k, m.ground(), flag));
  return order;
}

}  // namespace

FacetOrder lex_basis_shelling(const Matroid& m) {
  const SimplicialComplex k = independence_complex(m);
  FacetOrder order{{}, OrderSource::LexBasis};
  for (ElementSet b : m.bases()) {
    std::vector<std::string> labels;
    for (int e : b.elements()) labels.push_back("y:" + m.ground().label(e));
    order.facets.push_back(k.simplex_of(labels));
  }
  require_shelling(k, order, "lex-basis");
  return order;
}

FacetOrder el_chain_shelling(const Matroid& m) {
  const SimplicialComplex k = bergman_complex(m);
  const FlatsLattice flats = flats_lattice(m);
  const SetLattice& l = flats.lattice;
  auto chains = l.maximal_chains(0, l.size() - 1);
  std::vector<std::pair<std::vector<int>, std::vector<ElementSet>>> keyed;
  for (const auto& chain : chains) {
    std::vector<ElementSet> sets;
    for (int idx : chain) sets.push_back(l.member(idx));
    keyed.emplace_back(chain_labels(sets), sets);
  }
  std::sort(keyed.begin(), keyed.end());
  FacetOrder order{{}, OrderSource::ElChain};
  for (auto& [labels, sets] : keyed) {
    // Drop the bottom and the top to get the Bergman facet.
    std::vector<ElementSet> proper;
    if (sets.size() >= 2) proper.assign(sets.begin() + 1, sets.end() - 1);
    order.facets.push_back(x_simplex(k, m.ground(), proper));
  }
  if (l.size() == 1) order.facets = {Simplex{}};
  require_shelling(k, order, "el-chain");
  return order;
}

std::vector<FlagFacet> flag_to_basis_flags(const Matroid& m) {
  auto flags = facets_as_flags(m);
  const ElementSet all = m.ground().all();
  std::stable_sort(flags.begin(), flags.end(), [&](const FlagFacet& a, const FlagFacet& b) {
    if (a.independent.size() != b.independent.size()) return a.independent.size() < b.independent.size();
    if (a.independent != b.independent) return lex_less(a.independent, b.independent);
    return flag_labels(a, all) < flag_labels(b, all);
  });
  return flags;
}

std::vector<FlagFacet> basis_to_flag_flags(const Matroid& m) {
  auto flags = facets_as_flags(m);
  const ElementSet all = m.ground().all();
  std::stable_sort(flags.begin(), flags.end(), [&](const FlagFacet& a, const FlagFacet& b) {
    if (a.independent.size() != b.independent.size()) return a.independent.size() > b.independent.size();
    const ElementSet fa = first_flat(a, all), fb = first_flat(b, all);
    if (fa != fb) return lex_less(fa, fb);
    const auto la = flag_labels(a, all), lb = flag_labels(b, all);
    if (la != lb) return la < lb;
    return lex_less(a.independent, b.independent);
  });
  return flags;
}

FacetOrder flag_to_basis_order(const Matroid& m) {
  const SimplicialComplex k = augmented_bergman(m);
  FacetOrder order = to_order(m, flag_to_basis_flags(m), OrderSource::FlagToBasis, k);
  require_shelling(k, order, "flag-to-basis");
  return order;
}

FacetOrder basis_to_flag_order(const Matroid& m) {
  const SimplicialComplex k = augmented_bergman(m);
  FacetOrder order = to_order(m, basis_to_flag_flags(m), OrderSource::BasisToFlag, k);
  require_shelling(k, order, "basis-to-flag");
  return order;
}

std::vector<HomologyTriple> homology_facet_triples(const Matroid& m) {
  std::vector<HomologyTriple> out;
  const FlatsLattice flats = flats_lattice(m);
  const ElementSet all = m.ground().all();
  for (ElementSet f : flats.flats()) {
    const Matroid restricted = restriction(m, f);
    const Matroid contracted = contraction(m, f);
    std::vector<ElementSet> inner, outer;
    for (ElementSet b : restricted.bases())
      if (activities(restricted, b).internal.empty()) inner.push_back(expand(b, f));
    for (ElementSet b : contracted.bases())
      if (activities(contracted, b).external.empty()) outer.push_back(b);
    for (ElementSet i : inner)
      for (ElementSet j : outer) out.push_back({f, i, j});
  }
  (void)all;
  return out;
}

std::vector<FlagFacet> basis_to_flag_mismatches(const Matroid& m) {
  const SimplicialComplex k = augmented_bergman(m);
  const auto flags = basis_to_flag_flags(m);
  const FacetOrder order = to_order(m, flags, OrderSource::BasisToFlag, k);
  const auto cert = verify_shelling(k, order);
  if (!cert.ok()) throw InvariantViolation("basis-to-flag order failed to shell");
  std::set<int> global(cert.certificate->homology_facets.begin(), cert.certificate->homology_facets.end());

  const ElementSet all = m.ground().all();
  // Per flat F_1: homology facets of the chosen shellings of Berg(M/F_1) and I(M|F_1).
  std::map<ElementSet, std::set<std::vector<ElementSet>>> chain_homology;
  std::map<ElementSet, std::set<ElementSet>> basis_homology;
  std::vector<FlagFacet> out;
  for (std::size_t j = 0; j < flags.size(); ++j) {
    const FlagFacet& flag = flags[j];
    const ElementSet f1 = first_flat(flag, all);
    if (!chain_homology.count(f1)) {
      const Matroid contracted = contraction(m, f1);
      const SimplicialComplex berg = bergman_complex(contracted);
      const ElementSet rest = all - f1;
      auto& chains = chain_homology[f1];
      for (const auto& facet : homology_facets(berg, el_chain_shelling(contracted))) {
        std::vector<ElementSet> chain{f1};
        for (int v : facet)
          chain.push_back(expand(AugVertex::parse(contracted.ground(), berg.label(v)).set, rest) | f1);
        std::sort(chain.begin(), chain.end(), graded_less);
        chains.insert(chain);
      }
      const Matroid restricted = restriction(m, f1);
      const SimplicialComplex ind = independence_complex(restricted);
      auto& bases = basis_homology[f1];
      for (const auto& facet : homology_facets(ind, lex_basis_shelling(restricted))) {
        ElementSet b;
        for (int v : facet) b = b | AugVertex::parse(restricted.ground(), ind.label(v)).set;
        bases.insert(expand(b, f1));
      }
    }
    std::vector<ElementSet> chain = flag.chain.empty() ? std::vector<ElementSet>{all} : flag.chain;
    if (flag.chain.empty()) chain = {all};
    const bool chain_ok = chain_homology[f1].count(chain) > 0;
    const bool basis_ok = basis_homology[f1].count(flag.independent) > 0;
    if ((chain_ok && basis_ok) != (global.count(static_cast<int>(j)) > 0)) out.push_back(flag);
  }
  return out;
}

namespace {

struct IndexedFlags {
  const Matroid& m;
  SimplicialComplex k;
  std::vector<FlagFacet> flags;
  std::vector<Simplex> simplices;
  std::map<Simplex, int> position;

  IndexedFlags(const Matroid& matroid, std::vector<FlagFacet> ordered)
      : m(matroid), k(augmented_bergman(matroid)), flags(std::move(ordered)) {
    for (std::size_t j = 0; j < flags.size(); ++j) {
      simplices.push_back(flag_simplex(k, m.ground(), flags[j]));
      position.emplace(simplices.back(), static_cast<int>(j));
    }
  }

  // Whether the flag built by a proof is a valid witness for the pair (i, j).
  bool valid_witness(const FlagFacet& candidate, int i, int j) const {
    Simplex s;
    try {
      s = flag_simplex(k, m.ground(), candidate);
    } catch (const InputError&) {
      return false;
    }
    auto it = position.find(s);
    if (it == position.end() || it->second >= j) return false;
    const Simplex& later = simplices[j];
    const Simplex common = intersection(simplices[i], later);
    const Simplex with_witness = intersection(s, later);
    return is_subset(common, with_witness) && with_witness.size() + 1 == later.size();
  }
};

}  // namespace

WitnessCheck check_flag_to_basis_witnesses(const Matroid& m, long max_pairs) {
  const IndexedFlags data(m, flag_to_basis_flags(m));
  WitnessCheck out;
  const int n = static_cast<int>(data.flags.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const FlagFacet &phi = data.flags[i], &later = data.flags[j];
      if (phi.independent == later.independent) continue;
      if (max_pairs > 0 && out.pairs >= max_pairs) return out;
      // I'' = I' minus an element outside I; F'' = {closure(I'')} + F'.
      const int drop = (later.independent - phi.independent).min();
      FlagFacet candidate{later.independent.without(drop), {}};
      candidate.chain.push_back(m.closure(candidate.independent));
      candidate.chain.insert(candidate.chain.end(), later.chain.begin(), later.chain.end());
      ++out.pairs;
      if (!data.valid_witness(candidate, i, j)) ++out.failures;
    }
  return out;
}

WitnessCheck check_basis_to_flag_witnesses(const Matroid& m, long max_pairs) {
  const IndexedFlags data(m, basis_to_flag_flags(m));
  const ElementSet all = m.ground().all();
  WitnessCheck out;
  const int n = static_cast<int>(data.flags.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const FlagFacet &phi = data.flags[i], &later = data.flags[j];
      if (first_flat(phi, all) == first_flat(later, all)) continue;
      if (max_pairs > 0 && out.pairs >= max_pairs) return out;
      // i0 in F'_2 - F'_1 (F'_2 = E for a one-step chain); I'' = I' + i0, F'' = F' - F'_1.
      const ElementSet f2 = later.chain.size() >= 2 ? later.chain[1] : all;
      const int i0 = (f2 - later.chain.front()).min();
      FlagFacet candidate{later.independent.with(i0), {later.chain.begin() + 1, later.chain.end()}};
      ++out.pairs;
      if (!data.valid_witness(candidate, i, j)) ++out.failures;
    }
  return out;
}

}  // namespace augberg
