#include "augberg/lattice.hpp"

#include <algorithm>
#include <functional>

namespace augberg {

SetLattice::SetLattice(std::vector<ElementSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), graded_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int i = 0; i < size(); ++i) index_[members_[i]] = i;

  // Every member above m contains close(m + e) for some e outside m, so the
  // upper covers of m are the minimal sets among those closures.
  upper_covers_.assign(size(), {});
  for (int i = 0; i < size(); ++i) {
    std::vector<ElementSet> candidates;
    for (int e : (top() - members_[i]).elements()) candidates.push_back(close(members_[i].with(e)));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (ElementSet c : candidates) {
      bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                  [&](ElementSet d) { return d.proper_subset_of(c); });
      if (!minimal) continue;
      const int j = index_of(c);
      if (j < 0) throw InputError("set family is not closed under intersection");
      upper_covers_[i].push_back(j);
    }
    std::sort(upper_covers_[i].begin(), upper_covers_[i].end());
  }

  // Graded order is a linear extension of inclusion, so one forward pass suffices.
  height_.assign(size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j : upper_covers_[i]) height_[j] = std::max(height_[j], height_[i] + 1);
}

int SetLattice::index_of(ElementSet s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> SetLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : upper_covers_[i]) out.emplace_back(i, j);
  return out;
}

ElementSet SetLattice::close(ElementSet s) const {
  ElementSet out = top();
  for (ElementSet m : members_)
    if (s.subset_of(m)) out = out & m;
  return out;
}

std::vector<std::vector<int>> SetLattice::maximal_chains(int from, int to) const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain{from};
  std::function<void(int)> walk = [&](int at) {
    if (at == to) {
      out.push_back(chain);
      return;
    }
    for (int next : upper_covers_[at]) {
      if (!members_[next].subset_of(members_[to])) continue;
      chain.push_back(next);
      walk(next);
      chain.pop_back();
    }
  };
  if (members_.at(from).subset_of(members_.at(to))) walk(from);
  return out;
}

}  // namespace augberg
