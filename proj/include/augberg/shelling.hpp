#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augberg/bergman.hpp"
#include "augberg/complex.hpp"
#include "augberg/matroid.hpp"

namespace augberg {

enum class OrderSource { FlagToBasis, BasisToFlag, LexBasis, ElChain, User };

std::string to_string(OrderSource source);

/// A facet order on a pure complex, with where it came from.
struct FacetOrder {
  std::vector<Simplex> facets;
  OrderSource source = OrderSource::User;
};

/// Proof that an order is a shelling. Positions index into `order.facets`.
struct ShellingCertificate {
  FacetOrder order;
  /// R(phi_j): vertices x with phi_j - x inside an earlier facet.
  std::vector<Simplex> restriction_faces;
  /// For each position j, the pairs (x, i): earliest i < j with phi_j - x inside phi_i.
  std::vector<std::vector<std::pair<int, int>>> witnesses;
  /// Positions j with R(phi_j) = phi_j.
  std::vector<int> homology_facets;
};

/// Earlier facet `earlier` and later facet `later` (positions) admit no witness.
struct ShellingFailure {
  int earlier = -1;
  int later = -1;
};

struct ShellingResult {
  std::optional<ShellingCertificate> certificate;
  std::optional<ShellingFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

/// Checks the shelling condition for every ordered pair of facets in
/// O(m^2 d). Throws PreconditionError on a non-pure complex and InputError when
/// the order is not a permutation of the facets.
ShellingResult verify_shelling(const SimplicialComplex& k, const FacetOrder& order);

/// Restriction faces and homology facets of an order. Unless `skip_verification`
/// is set, the order must verify as a shelling (PreconditionError otherwise).
std::vector<Simplex> restriction_faces(const SimplicialComplex& k, const FacetOrder& order,
                                       bool skip_verification = false);
std::vector<Simplex> homology_facets(const SimplicialComplex& k, const FacetOrder& order,
                                     bool skip_verification = false);

/// Min-labels of the covers G < H along a chain: min(H - G) for consecutive members.
std::vector<int> chain_labels(const std::vector<ElementSet>& chain);

/// Bases of M in lexicographic order, as facets of independence_complex(M).
/// Verified; a failure throws InvariantViolation.
FacetOrder lex_basis_shelling(const Matroid& m);
/// Maximal chains of the proper part of the lattice of flats, ordered
/// lexicographically by min-labels of the full chain from closure(empty) to E.
/// Facets of bergman_complex(M); verified.
FacetOrder el_chain_shelling(const Matroid& m);

/// AugBerg facets as flags, sorted by (#I, I lexicographic, chain labels).
std::vector<FlagFacet> flag_to_basis_flags(const Matroid& m);
/// AugBerg facets as flags, sorted by (-#I, F_1 lexicographic, chain labels, I lexicographic).
std::vector<FlagFacet> basis_to_flag_flags(const Matroid& m);
/// The same orders as facets of augmented_bergman(M); verified.
FacetOrder flag_to_basis_order(const Matroid& m);
FacetOrder basis_to_flag_order(const Matroid& m);

/// (F, I, I'): F a flat, I a basis of M|F with no internally active elements,
/// I' a basis of M/F with no externally active elements (I' in M/F positions).
struct HomologyTriple {
  ElementSet flat;
  ElementSet independent;
  ElementSet contracted_basis;
};
std::vector<HomologyTriple> homology_facet_triples(const Matroid& m);

/// Basis-to-flag homology facets versus the factorwise conditions: the chain
/// is a homology facet of el_chain_shelling(M/F_1) and I one of
/// lex_basis_shelling(M|F_1). Returns the flags where the two disagree.
std::vector<FlagFacet> basis_to_flag_mismatches(const Matroid& m);

/// Constructive witnesses from the shelling proofs, checked pair by pair.
/// `max_pairs` bounds the pairs examined (0 = all). Returns the number of
/// pairs where the constructed facet failed to be a witness.
struct WitnessCheck {
  long pairs = 0;
  long failures = 0;
};
WitnessCheck check_flag_to_basis_witnesses(const Matroid& m, long max_pairs = 0);
WitnessCheck check_basis_to_flag_witnesses(const Matroid& m, long max_pairs = 0);

}  // namespace augberg
