#include "augberg/closure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace augberg {

ValidationReport validate_closure(const GroundSet& ground, const std::vector<ElementSet>& closed_sets) {
  std::set<ElementSet> family;
  for (ElementSet s : closed_sets) {
    ground.check_subset(s);
    family.insert(s);
  }
  if (!family.count(ground.all()))
    return ValidationReport::fail("C-family", "the ground set is not closed", {});
  for (ElementSet a : family)
    for (ElementSet b : family)
      if (!family.count(a & b))
        return ValidationReport::fail("C-family", "closed sets not closed under intersection", {a, b});
  return ValidationReport::pass();
}

ValidationReport validate_closure_table(const GroundSet& ground, const std::vector<ElementSet>& table) {
  const std::size_t expected = std::size_t{1} << ground.size();
  if (table.size() != expected) throw InputError("closure table must list every subset of E");
  for (ElementSet image : table) ground.check_subset(image);
  for (std::uint32_t a = 0; a < expected; ++a) {
    const ElementSet sa(a), fa = table[a];
    if (!sa.subset_of(fa)) return ValidationReport::fail("C1", "A is not contained in f(A)", {sa, fa});
    if (table[fa.bits()] != fa) return ValidationReport::fail("C3", "f(f(A)) differs from f(A)", {sa, fa});
  }
  // Monotonicity only needs single-element steps.
  for (std::uint32_t a = 0; a < expected; ++a)
    for (int e = 0; e < ground.size(); ++e) {
      const ElementSet sa(a);
      if (sa.contains(e)) continue;
      if (!table[a].subset_of(table[sa.with(e).bits()]))
        return ValidationReport::fail("C2", "f is not monotone", {sa, sa.with(e)});
    }
  return ValidationReport::pass();
}

ClosureOperator ClosureOperator::from_closed_sets(GroundSet ground, std::vector<ElementSet> closed_sets,
                                                  const Limits& limits) {
  if (ground.size() > limits.ground)
    throw ResourceError("ground set has " + std::to_string(ground.size()) + " elements, cap is " +
                        std::to_string(limits.ground));
  auto report = validate_closure(ground, closed_sets);
  if (!report) throw InputError("invalid closed-set family: " + report.detail);
  SetLattice lattice(std::move(closed_sets));
  return ClosureOperator(std::move(ground), std::move(lattice));
}

ClosureOperator ClosureOperator::from_table(GroundSet ground, const std::vector<ElementSet>& table,
                                            const Limits& limits) {
  if (ground.size() > limits.ground) throw ResourceError("ground set exceeds the cap");
  auto report = validate_closure_table(ground, table);
  if (!report) throw InputError("closure map violates " + report.axiom + ": " + report.detail);
  std::vector<ElementSet> closed;
  for (std::uint32_t a = 0; a < table.size(); ++a)
    if (table[a] == ElementSet(a)) closed.emplace_back(a);
  return from_closed_sets(std::move(ground), std::move(closed), limits);
}

ClosureOperator ClosureOperator::from_matroid(const Matroid& m) {
  return ClosureOperator(m.ground(), flats_lattice(m).lattice);
}

ElementSet ClosureOperator::close(ElementSet a) const {
  ground_.check_subset(a);
  return lattice_.close(a);
}

std::vector<ElementSet> independents(const ClosureOperator& f) {
  std::vector<ElementSet> out;
  const std::uint32_t limit = f.ground().all().bits();
  for (std::uint32_t bits = 0; bits <= limit; ++bits) {
    const ElementSet s(bits);
    const ElementSet fs = f.close(s);
    bool independent = true;
    for (int i : s.elements())
      if (f.close(s.without(i)) == fs) {
        independent = false;
        break;
      }
    if (independent) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<ElementSet> bases(const ClosureOperator& f) {
  std::vector<ElementSet> out;
  for (ElementSet s : independents(f))
    if (f.close(s) == f.ground().all()) out.push_back(s);
  return out;
}

std::vector<Permutation> aut_closure(const ClosureOperator& f, const Limits& limits) {
  if (f.size() > limits.automorphism)
    throw ResourceError("automorphism search needs |E| <= " + std::to_string(limits.automorphism));
  std::vector<int> image(f.size());
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation g(image);
    bool preserves = std::all_of(f.closed_sets().begin(), f.closed_sets().end(),
                                 [&](ElementSet c) { return f.is_closed(g.apply(c)); });
    if (preserves) out.push_back(std::move(g));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

ClosureOperator reordered(const ClosureOperator& f, const std::vector<int>& order) {
  const Permutation relabel = Permutation(order).inverse();
  std::vector<std::string> labels;
  for (int old : order) labels.push_back(f.ground().label(old));
  std::vector<ElementSet> closed;
  for (ElementSet c : f.closed_sets()) closed.push_back(relabel.apply(c));
  Limits limits;
  limits.ground = std::max(limits.ground, f.size());
  return ClosureOperator::from_closed_sets(GroundSet(std::move(labels)), std::move(closed), limits);
}

ClosureOperator random_closure(int n, int generators, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (int e = 1; e <= n; ++e) labels.push_back(std::to_string(e));
  GroundSet ground(std::move(labels));
  std::uniform_int_distribution<std::uint32_t> pick(0, ground.all().bits());
  std::set<ElementSet> family{ground.all()};
  for (int g = 0; g < generators; ++g) {
    const ElementSet s(pick(rng));
    std::vector<ElementSet> added;
    for (ElementSet c : family) added.push_back(c & s);
    family.insert(added.begin(), added.end());
  }
  return ClosureOperator::from_closed_sets(std::move(ground), {family.begin(), family.end()});
}

}  // namespace augberg
