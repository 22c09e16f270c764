#pragma once

#include <random>
#include <vector>

#include "augberg/element_set.hpp"
#include "augberg/errors.hpp"
#include "augberg/lattice.hpp"
#include "augberg/matroid.hpp"
#include "augberg/permutation.hpp"

namespace augberg {

/// Closure operator f: 2^E -> 2^E, represented by its family of closed sets.
class ClosureOperator {
 public:
  ClosureOperator() = default;

  /// Validates and stores a closed-set family; throws InputError when the
  /// family lacks E or is not intersection-closed, ResourceError over the cap.
  static ClosureOperator from_closed_sets(GroundSet ground, std::vector<ElementSet> closed_sets,
                                          const Limits& limits = {});
  /// Full table: table[A.bits()] = f(A) for every A. Axioms are checked exhaustively.
  static ClosureOperator from_table(GroundSet ground, const std::vector<ElementSet>& table,
                                    const Limits& limits = {});
  /// Matroid closure: the closed sets are the flats.
  static ClosureOperator from_matroid(const Matroid& m);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  /// Closed sets in graded order.
  const std::vector<ElementSet>& closed_sets() const { return lattice_.members(); }
  const SetLattice& lattice() const { return lattice_; }
  bool is_closed(ElementSet a) const { return lattice_.contains(a); }

  /// Smallest closed superset of `a`.
  ElementSet close(ElementSet a) const;

  friend bool operator==(const ClosureOperator& a, const ClosureOperator& b) {
    return a.ground_ == b.ground_ && a.closed_sets() == b.closed_sets();
  }

 private:
  ClosureOperator(GroundSet ground, SetLattice lattice) : ground_(std::move(ground)), lattice_(std::move(lattice)) {}

  GroundSet ground_;
  SetLattice lattice_;
};

/// Family check: E present and closed under pairwise intersection.
ValidationReport validate_closure(const GroundSet& ground, const std::vector<ElementSet>& closed_sets);
/// Map check over all 2^n subsets: C1 extensive, C2 monotone, C3 idempotent.
/// Throws InputError when an image leaves E or the table has the wrong length.
ValidationReport validate_closure_table(const GroundSet& ground, const std::vector<ElementSet>& table);

/// All I with f(I - i) strictly inside f(I) for every i in I, in graded order.
std::vector<ElementSet> independents(const ClosureOperator& f);
/// Independent sets whose closure is E; not necessarily equicardinal.
std::vector<ElementSet> bases(const ClosureOperator& f);

/// Permutations of E commuting with f, found by brute force. Throws
/// ResourceError when |E| exceeds `limits.automorphism`.
std::vector<Permutation> aut_closure(const ClosureOperator& f, const Limits& limits = {});

/// The same closure with the linear order changed: new position i holds old element order[i].
ClosureOperator reordered(const ClosureOperator& f, const std::vector<int>& order);

/// Random closure operator on labels "1".."n": the intersection closure of
/// `generators` random subsets, plus E.
ClosureOperator random_closure(int n, int generators, std::mt19937_64& rng);

}  // namespace augberg
