#include "augberg/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace augberg {
namespace {

void sort_unique_lex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void check_cap(const GroundSet& ground, const Limits& limits) {
  if (ground.size() > limits.ground)
    throw ResourceError("ground set has " + std::to_string(ground.size()) +
                        " elements, cap is " + std::to_string(limits.ground));
}

// Union-find rank test for edge sets of a multigraph.
bool acyclic(int num_vertices, const std::vector<std::pair<int, int>>& edges, ElementSet s) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int k : s.elements()) {
    int a = find(edges[k].first), b = find(edges[k].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

ValidationReport validate_matroid(const GroundSet& ground, const std::vector<ElementSet>& independents) {
  std::set<ElementSet> family;
  for (ElementSet s : independents) {
    ground.check_subset(s);
    family.insert(s);
  }
  if (!family.count(ElementSet{}))
    return ValidationReport::fail("I1", "the empty set is not independent", {});
  for (ElementSet j : family) {
    for (int e : j.elements()) {
      if (!family.count(j.without(e)))
        return ValidationReport::fail("I2", "a subset of an independent set is missing",
                                      {j.without(e), j});
    }
  }
  for (ElementSet i : family) {
    for (ElementSet j : family) {
      if (i.size() >= j.size()) continue;
      bool augmented = false;
      for (int e : (j - i).elements())
        if (family.count(i.with(e))) {
          augmented = true;
          break;
        }
      if (!augmented)
        return ValidationReport::fail("I3", "the smaller set cannot be augmented from the larger", {i, j});
    }
  }
  return ValidationReport::pass();
}

ValidationReport validate_bases(const GroundSet& ground, const std::vector<ElementSet>& bases) {
  if (bases.empty()) return ValidationReport::fail("basis-nonempty", "no bases given", {});
  for (ElementSet b : bases) ground.check_subset(b);
  for (ElementSet b : bases)
    if (b.size() != bases.front().size())
      return ValidationReport::fail("basis-cardinality", "bases have different cardinalities",
                                    {bases.front(), b});
  std::set<ElementSet> family(bases.begin(), bases.end());
  for (ElementSet b : family) {
    for (ElementSet c : family) {
      for (int x : (b - c).elements()) {
        bool exchanged = false;
        for (int y : (c - b).elements())
          if (family.count(b.without(x).with(y))) {
            exchanged = true;
            break;
          }
        if (!exchanged)
          return ValidationReport::fail("basis-exchange", "no exchange partner exists", {b, c});
      }
    }
  }
  return ValidationReport::pass();
}

Matroid::Matroid(GroundSet ground, std::vector<ElementSet> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  sort_unique_lex(bases_);
  rank_ = bases_.empty() ? 0 : bases_.front().size();
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<ElementSet> bases, const Limits& limits) {
  check_cap(ground, limits);
  auto report = validate_bases(ground, bases);
  if (!report) throw InputError("invalid bases (" + report.axiom + "): " + report.detail);
  return Matroid(std::move(ground), std::move(bases));
}

Matroid Matroid::uniform(int r, int n, const Limits& limits) {
  return uniform(r, GroundSet(numeric_labels(n)), limits);
}

Matroid Matroid::uniform(int r, GroundSet ground, const Limits& limits) {
  check_cap(ground, limits);
  const int n = ground.size();
  if (r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
  std::vector<ElementSet> bases;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
    if (ElementSet(bits).size() == r) bases.emplace_back(bits);
  return Matroid(std::move(ground), std::move(bases));
}

Matroid Matroid::boolean(int n, const Limits& limits) { return uniform(n, n, limits); }

Matroid Matroid::graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                         const Limits& limits) {
  return graphic(num_vertices, edges, GroundSet(numeric_labels(static_cast<int>(edges.size()))), limits);
}

Matroid Matroid::graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges, GroundSet ground,
                         const Limits& limits) {
  check_cap(ground, limits);
  if (ground.size() != static_cast<int>(edges.size()))
    throw InputError("graphic matroid needs one element label per edge");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw InputError("edge endpoint outside the vertex range");
  const int m = ground.size();
  std::vector<ElementSet> forests;
  int best = 0;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    ElementSet s(bits);
    if (s.size() < best || !acyclic(num_vertices, edges, s)) continue;
    if (s.size() > best) {
      best = s.size();
      forests.clear();
    }
    forests.push_back(s);
  }
  return Matroid(std::move(ground), std::move(forests));
}

bool Matroid::is_independent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return s.subset_of(b); });
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s, lex_less);
}

bool Matroid::is_loop(int e) const {
  return std::none_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return b.contains(e); });
}

bool Matroid::is_coloop(int e) const {
  return std::all_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return b.contains(e); });
}

int Matroid::rank(ElementSet a) const {
  ground_.check_subset(a);
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (a & b).size());
  return best;
}

ElementSet Matroid::closure(ElementSet a) const {
  const int r = rank(a);
  ElementSet out = a;
  for (int e : (ground_.all() - a).elements())
    if (rank(a.with(e)) == r) out = out.with(e);
  return out;
}

std::vector<ElementSet> Matroid::independents() const {
  std::vector<ElementSet> out;
  for (std::uint32_t bits = 0; bits <= ground_.all().bits(); ++bits)
    if (is_independent(ElementSet(bits))) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

Matroid Matroid::reordered(const std::vector<int>& order) const {
  // order[i] = old position of the element now at position i.
  Permutation to_new = Permutation(order).inverse();
  std::vector<std::string> labels(size());
  for (int i = 0; i < size(); ++i) labels[i] = ground_.label(order[i]);
  std::vector<ElementSet> bases;
  for (ElementSet b : bases_) bases.push_back(to_new.apply(b));
  return Matroid(GroundSet(std::move(labels)), std::move(bases));
}

Matroid Matroid::permuted(const Permutation& g) const {
  std::vector<ElementSet> bases;
  for (ElementSet b : bases_) bases.push_back(g.apply(b));
  return Matroid(ground_, std::move(bases));
}

FlatsLattice flats_lattice(const Matroid& m) {
  const ElementSet all = m.ground().all();
  std::set<ElementSet> seen;
  std::set<std::pair<ElementSet, ElementSet>> bfs_covers;
  std::deque<ElementSet> queue;
  const ElementSet bottom = m.closure(ElementSet{});
  seen.insert(bottom);
  queue.push_back(bottom);
  while (!queue.empty()) {
    ElementSet f = queue.front();
    queue.pop_front();
    for (int e : (all - f).elements()) {
      ElementSet g = m.closure(f.with(e));
      bfs_covers.emplace(f, g);
      if (seen.insert(g).second) queue.push_back(g);
    }
  }

  FlatsLattice out{SetLattice(std::vector<ElementSet>(seen.begin(), seen.end()))};
  const SetLattice& lat = out.lattice;

  if (lat.top() != all) throw InvariantViolation("F1 fails: E is not a flat");
  for (ElementSet f : lat.members())
    for (ElementSet g : lat.members())
      if (!lat.contains(f & g)) throw InvariantViolation("F2 fails: flats not closed under intersection");

  std::set<std::pair<ElementSet, ElementSet>> lattice_covers;
  for (auto [i, j] : lat.cover_pairs()) lattice_covers.emplace(lat.member(i), lat.member(j));
  if (lattice_covers != bfs_covers) throw InvariantViolation("closure(F + e) does not enumerate the covers");

  for (int i = 0; i < lat.size(); ++i) {
    ElementSet f = lat.member(i);
    if (lat.height(i) != m.rank(f)) throw InvariantViolation("lattice grading disagrees with rank");
    for (int e : (all - f).elements()) {
      int holders = 0;
      for (int j : lat.upper_covers(i))
        if (lat.member(j).contains(e)) ++holders;
      if (holders != 1) throw InvariantViolation("F3 fails: cover containing e is not unique");
    }
  }
  return out;
}

Matroid restriction(const Matroid& m, ElementSet a) {
  m.ground().check_subset(a);
  const int r = m.rank(a);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases())
    if ((b & a).size() == r) bases.push_back(compress(b & a, a));
  return Matroid(m.ground().restricted(a), std::move(bases));
}

Matroid contraction(const Matroid& m, ElementSet a) {
  m.ground().check_subset(a);
  const int r = m.rank(a);
  const ElementSet rest = m.ground().all() - a;
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases())
    if ((b & a).size() == r) bases.push_back(compress(b - a, rest));
  return Matroid(m.ground().restricted(rest), std::move(bases));
}

}  // namespace augberg
