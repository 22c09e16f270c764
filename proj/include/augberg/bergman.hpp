#pragma once

#include <string>
#include <vector>

#include "augberg/closure.hpp"
#include "augberg/complex.hpp"
#include "augberg/homology.hpp"
#include "augberg/matroid.hpp"

namespace augberg {

/// Vertex of an augmented Bergman complex or of its subdivision.
///
/// Y carries a nonempty independent set (a singleton for AugBerg itself), X a
/// closed set other than E. Wire format: "y:<labels>" and "x:<labels>", labels
/// comma-joined in ground-set order; "x:" is the empty flat.
struct AugVertex {
  enum class Kind { Y, X };
  Kind kind = Kind::Y;
  ElementSet set;

  std::string label(const GroundSet& ground) const;
  /// Throws InputError on a malformed label or unknown element.
  static AugVertex parse(const GroundSet& ground, const std::string& label);
  friend bool operator==(const AugVertex&, const AugVertex&) = default;
};

/// Facet data y_I together with a chain F_1 < ... < F_l of proper flats.
struct FlagFacet {
  ElementSet independent;
  std::vector<ElementSet> chain;

  friend bool operator==(const FlagFacet&, const FlagFacet&) = default;
};

/// Vertex labels of AugBerg: y_e for every e outside the closure of the empty
/// set (in ground order), then x_F for every closed F other than E (graded order).
std::vector<std::string> augmented_vertices(const GroundSet& ground, const SetLattice& closed);

SimplicialComplex independence_complex(const Matroid& m);
/// Facets are the inclusion-maximal independent sets of f.
SimplicialComplex independence_complex(const ClosureOperator& f);

/// Order complex of the closed sets strictly between f(empty) and E.
SimplicialComplex bergman_complex(const ClosureOperator& f);
SimplicialComplex bergman_complex(const Matroid& m);
/// Order complex of the closed sets other than E; the cone point is x_{f(empty)}.
SimplicialComplex cone_bergman(const ClosureOperator& f);
SimplicialComplex cone_bergman(const Matroid& m);

/// AugBerg facets in matroid form: closure(I) = F_1 and #I + l = r(M).
/// Sorted by (#I, I lexicographic, chain). Throws InvariantViolation when a
/// generated flag breaks either condition.
std::vector<FlagFacet> facets_as_flags(const Matroid& m);
/// Builds the complex on `augmented_vertices` from flag data.
SimplicialComplex complex_from_flags(const GroundSet& ground, const SetLattice& closed,
                                     const std::vector<FlagFacet>& flags);
Simplex flag_simplex(const SimplicialComplex& k, const GroundSet& ground, const FlagFacet& flag);
/// Reads a simplex of an AugBerg complex back as (I, chain).
FlagFacet simplex_flag(const SimplicialComplex& k, const GroundSet& ground, const Simplex& s);

SimplicialComplex augmented_bergman(const Matroid& m, const Limits& limits = {});
/// Closure case: candidates y_I + (maximal chain of [f(I), E) ) filtered for maximality.
SimplicialComplex augmented_bergman(const ClosureOperator& f, const Limits& limits = {});

/// AugBerg(f) with the facets y_B, B a basis of f, removed and their boundaries kept.
/// `decone` also deletes the vertex x_{f(empty)}.
SimplicialComplex delta_prime(const ClosureOperator& f, bool decone = false);
/// Order complex of {y_I : I nonempty independent, not a basis} and {x_F : F closed, F != E}
/// with y_I < y_J for I < J, y_I < x_F for I inside F, x_F < x_G for F < G.
SimplicialComplex delta_double_prime(const ClosureOperator& f, bool decone = false);

/// The vertex map x_F -> x_F, y_I -> x_{f(I)} from delta_double_prime to cone_bergman.
struct PiMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> vertex_image;  // source vertex -> target vertex
};

struct FiberReport {
  ElementSet closed_set;
  HomologyProfile homology;
};

struct PiReport {
  bool simplicial = true;
  std::vector<FiberReport> fibers;
  bool fibers_acyclic() const;
};

PiMap pi_map(const ClosureOperator& f, bool decone = false);
/// Image of every source facet must be a face of the target (InvariantViolation
/// otherwise); for every closed F in the target, the preimage of the principal
/// order ideal below x_F gets its reduced homology computed.
PiReport check_pi_map(const ClosureOperator& f, const PiMap& pi);

/// Everything the closure pipeline checks for one closure operator.
struct ClosureCheck {
  /// Deconing removes the cone point, so Delta' is then not required to be acyclic.
  bool decone = false;
  HomologyProfile augmented;
  HomologyProfile delta_prime;
  HomologyProfile delta_double_prime;
  std::vector<int> bases_by_size;  // index = #B
  long long euler_prime = 0;
  long long euler_double_prime = 0;
  bool homology_matches_bases = false;
  bool pi_simplicial = false;
  int fibers = 0;
  bool fibers_acyclic = false;

  bool ok() const;
};

ClosureCheck closure_check(const ClosureOperator& f, bool decone = false, const Limits& limits = {});

}  // namespace augberg
