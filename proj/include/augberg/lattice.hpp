#pragma once

#include <map>
#include <utility>
#include <vector>

#include "augberg/element_set.hpp"

namespace augberg {

/// A finite lattice of subsets ordered by inclusion, with its cover relation.
///
/// Members are kept in graded order (by cardinality, then lexicographic), so
/// the bottom is member 0 and the top is the last member.
class SetLattice {
 public:
  SetLattice() = default;
  /// `members` must be intersection-closed with a unique maximum.
  explicit SetLattice(std::vector<ElementSet> members);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<ElementSet>& members() const { return members_; }
  ElementSet member(int i) const { return members_.at(i); }
  ElementSet bottom() const { return members_.front(); }
  ElementSet top() const { return members_.back(); }
  /// Index of `s`, or -1 when `s` is not a member.
  int index_of(ElementSet s) const;
  bool contains(ElementSet s) const { return index_of(s) >= 0; }

  const std::vector<int>& upper_covers(int i) const { return upper_covers_.at(i); }
  std::vector<std::pair<int, int>> cover_pairs() const;
  /// Length of the longest chain from the bottom; equals matroid rank for flats.
  int height(int i) const { return height_.at(i); }

  /// Smallest member containing `s` (the meet of all members above it).
  ElementSet close(ElementSet s) const;

  /// All saturated chains from member `from` up to member `to`, endpoints
  /// included, in lexicographic order of cover indices.
  std::vector<std::vector<int>> maximal_chains(int from, int to) const;

 private:
  std::vector<ElementSet> members_;
  std::map<ElementSet, int> index_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> height_;
};

}  // namespace augberg
