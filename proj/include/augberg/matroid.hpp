#pragma once

#include <string>
#include <utility>
#include <vector>

#include "augberg/element_set.hpp"
#include "augberg/errors.hpp"
#include "augberg/lattice.hpp"
#include "augberg/permutation.hpp"

namespace augberg {

/// Outcome of an axiom check. On failure `axiom` names the violated axiom
/// (e.g. "I2", "basis-exchange") and `witness` holds the offending sets.
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  std::string detail;
  std::vector<ElementSet> witness;

  explicit operator bool() const { return ok; }
  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string axiom, std::string detail, std::vector<ElementSet> witness) {
    return {false, std::move(axiom), std::move(detail), std::move(witness)};
  }
};

/// Checks the independence axioms I1 (empty set), I2 (downward closure) and
/// I3 (augmentation) on an explicit family.
ValidationReport validate_matroid(const GroundSet& ground, const std::vector<ElementSet>& independents);

/// Checks that a basis list is nonempty, equicardinal and satisfies basis exchange.
ValidationReport validate_bases(const GroundSet& ground, const std::vector<ElementSet>& bases);

/// A finite matroid, stored by its bases. Element i of the ground set is the
/// i-th element of the canonical linear order.
class Matroid {
 public:
  Matroid() = default;

  /// Validates the bases and the ground-set cap; throws InputError / ResourceError.
  static Matroid from_bases(GroundSet ground, std::vector<ElementSet> bases, const Limits& limits = {});
  /// U_{r,n} on labels "1".."n".
  static Matroid uniform(int r, int n, const Limits& limits = {});
  static Matroid uniform(int r, GroundSet ground, const Limits& limits = {});
  /// Boolean matroid U_{n,n}.
  static Matroid boolean(int n, const Limits& limits = {});
  /// Cycle matroid of a multigraph; edge k becomes element k (labels default to "1".."m").
  static Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                         const Limits& limits = {});
  static Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                         GroundSet ground, const Limits& limits = {});

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  /// Bases in lexicographic order.
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_independent(ElementSet s) const;
  bool is_basis(ElementSet s) const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;
  int rank(ElementSet a) const;
  ElementSet closure(ElementSet a) const;
  bool is_flat(ElementSet a) const { return closure(a) == a; }
  /// Every independent set, in graded order.
  std::vector<ElementSet> independents() const;

  /// The same matroid with the linear order changed: new position i holds old element order[i].
  Matroid reordered(const std::vector<int>& order) const;
  /// Image of the matroid under a relabelling of positions.
  Matroid permuted(const Permutation& g) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;
  friend Matroid restriction(const Matroid& m, ElementSet a);
  friend Matroid contraction(const Matroid& m, ElementSet a);

 private:
  Matroid(GroundSet ground, std::vector<ElementSet> bases);

  GroundSet ground_;
  std::vector<ElementSet> bases_;
  int rank_ = 0;
};

/// The lattice of flats with cover relations; `height` is the matroid rank.
struct FlatsLattice {
  SetLattice lattice;

  int size() const { return lattice.size(); }
  const std::vector<ElementSet>& flats() const { return lattice.members(); }
  int rank_of(ElementSet f) const { return lattice.height(lattice.index_of(f)); }
};

/// Enumerates flats by cover generation from closure(empty set) and checks F1-F3
/// plus the rank grading; throws InvariantViolation on any inconsistency.
FlatsLattice flats_lattice(const Matroid& m);

/// M|A on the ground set A (order inherited).
Matroid restriction(const Matroid& m, ElementSet a);
/// M/A on the ground set E - A (order inherited).
Matroid contraction(const Matroid& m, ElementSet a);

}  // namespace augberg
