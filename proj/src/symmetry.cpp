#include "augberg/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "augberg/bergman.hpp"
#include "augberg/smith.hpp"

namespace augberg {

bool AutomorphismGroup::contains(const Permutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

template <typename Family>
bool preserves(const Permutation& g, const Family& family) {
  return std::all_of(family.begin(), family.end(), [&](ElementSet s) { return family.count(g.apply(s)) > 0; });
}

}  // namespace

AutomorphismGroup aut_matroid(const Matroid& m, const Limits& limits) {
  const int n = m.ground().size();
  if (n > limits.automorphism)
    throw ResourceError("automorphism search needs |E| <= " + std::to_string(limits.automorphism));
  const std::set<ElementSet> bases(m.bases().begin(), m.bases().end());
  const FlatsLattice lattice = flats_lattice(m);
  const std::set<ElementSet> flats(lattice.flats().begin(), lattice.flats().end());
  AutomorphismGroup out{m.ground(), {}};
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    Permutation g(image);
    const bool on_bases = preserves(g, bases);
    if (on_bases != preserves(g, flats))
      throw InvariantViolation("permutation " + g.cycle_string(m.ground().labels()) +
                               " preserves exactly one of bases and flats");
    if (on_bases) out.elements.push_back(std::move(g));
  } while (std::next_permutation(image.begin(), image.end()));
  verify_group(out);
  return out;
}

AutomorphismGroup aut_group(const ClosureOperator& f, const Limits& limits) {
  AutomorphismGroup out{f.ground(), aut_closure(f, limits)};
  std::sort(out.elements.begin(), out.elements.end());
  verify_group(out);
  return out;
}

void verify_group(const AutomorphismGroup& g) {
  const int n = g.ground.size();
  if (!g.contains(Permutation::identity(n))) throw InvariantViolation("group lacks the identity");
  for (const auto& a : g.elements) {
    if (!g.contains(a.inverse())) throw InvariantViolation("group not closed under inverses");
    for (const auto& b : g.elements)
      if (!g.contains(a * b)) throw InvariantViolation("group not closed under products");
  }
}

std::vector<std::vector<Permutation>> conjugacy_classes(const AutomorphismGroup& g) {
  std::vector<std::vector<Permutation>> out;
  std::set<Permutation> seen;
  for (const auto& a : g.elements) {
    if (seen.count(a)) continue;
    std::set<Permutation> cls;
    for (const auto& h : g.elements) cls.insert(h * a * h.inverse());
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Independence: return "independence";
    case ComplexKind::Bergman: return "bergman";
    case ComplexKind::ConeBergman: return "cone";
    case ComplexKind::Augmented: return "augmented";
  }
  return "augmented";
}

SimplicialComplex build_complex(const ClosureOperator& f, ComplexKind kind, const Limits& limits) {
  switch (kind) {
    case ComplexKind::Independence: return independence_complex(f);
    case ComplexKind::Bergman: return bergman_complex(f);
    case ComplexKind::ConeBergman: return cone_bergman(f);
    case ComplexKind::Augmented: return augmented_bergman(f, limits);
  }
  return augmented_bergman(f, limits);
}

std::vector<int> induced_vertex_action(const Permutation& g, const SimplicialComplex& k, const GroundSet& ground) {
  std::vector<int> out;
  for (const auto& label : k.vertices()) {
    AugVertex v = AugVertex::parse(ground, label);
    v.set = g.apply(v.set);
    const std::string image = v.label(ground);
    if (!k.has_vertex(image)) throw InvariantViolation("vertex " + label + " maps outside the complex");
    out.push_back(k.index_of(image));
  }
  for (const auto& facet : k.facets()) {
    Simplex image;
    for (int v : facet) image.push_back(out[v]);
    std::sort(image.begin(), image.end());
    if (!k.has_facet(image)) throw InvariantViolation("a facet maps to a non-facet");
  }
  return out;
}

SignedFaceMap chain_map(const ChainComplex& c, const std::vector<int>& vertex_action, int degree) {
  SignedFaceMap out;
  for (const auto& face : c.basis(degree)) {
    Simplex image;
    for (int v : face) image.push_back(vertex_action.at(v));
    const int sign = sort_sign(image);
    std::sort(image.begin(), image.end());
    const int target = c.face_index(image);
    if (target < 0) throw InvariantViolation("chain map leaves the complex");
    out.target.push_back(target);
    out.sign.push_back(sign);
  }
  return out;
}

HomologyAction::HomologyAction(const SimplicialComplex& k, const GroundSet& ground)
    : complex_(k), ground_(ground), chains_(k), profile_(reduced_homology(chains_)) {}

const HomologyAction::Cached& HomologyAction::cached(int degree) const {
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  Cached entry{HomologyBasis(chains_, degree), {}, {}};
  const IntMatrix& proj = entry.basis.projection();
  const IntMatrix& cycles = entry.basis.cycles();
  entry.by_face.resize(chains_.chain_rank(degree));
  for (Eigen::Index j = 0; j < proj.rows(); ++j)
    for (Eigen::Index f = 0; f < proj.cols(); ++f)
      if (proj(j, f) != 0) entry.by_face[f].emplace_back(static_cast<int>(j), proj(j, f));
  entry.columns.resize(cycles.cols());
  for (Eigen::Index k = 0; k < cycles.cols(); ++k)
    for (Eigen::Index f = 0; f < cycles.rows(); ++f)
      if (cycles(f, k) != 0) entry.columns[k].emplace_back(static_cast<int>(f), cycles(f, k));
  return cache_.emplace(degree, std::move(entry)).first->second;
}

const HomologyBasis& HomologyAction::basis(int degree) const { return cached(degree).basis; }

IntMatrix HomologyAction::matrix(const Permutation& g, int degree) const {
  return matrix(induced_vertex_action(g, complex_, ground_), degree);
}

IntMatrix HomologyAction::matrix(const std::vector<int>& vertex_action, int degree) const {
  if (profile_.rank(degree) == 0) return IntMatrix(0, 0);
  const Cached& entry = cached(degree);
  const SignedFaceMap map = chain_map(chains_, vertex_action, degree);
  const int rank = entry.basis.rank();
  IntMatrix out = IntMatrix::Zero(rank, rank);
  for (int k = 0; k < rank; ++k)
    for (const auto& [face, value] : entry.columns[k]) {
      const int target = map.target[face];
      for (const auto& [j, p] : entry.by_face[target]) out(j, k) += map.sign[face] * p * value;
    }
  return out;
}

IntMatrix homology_matrix(const Permutation& g, const SimplicialComplex& k, const GroundSet& ground, int degree) {
  return HomologyAction(k, ground).matrix(g, degree);
}

SignedBasisAction signed_basis_action(const std::vector<ElementSet>& bases, const Permutation& g) {
  std::map<ElementSet, int> position;
  for (std::size_t i = 0; i < bases.size(); ++i) position.emplace(bases[i], static_cast<int>(i));
  SignedBasisAction out;
  for (ElementSet b : bases) {
    auto it = position.find(g.apply(b));
    if (it == position.end()) throw InvariantViolation("permutation does not preserve the bases");
    std::vector<int> image;
    for (int e : b.elements()) image.push_back(g(e));
    out.image.push_back(it->second);
    out.sign.push_back(sort_sign(image));
  }
  return out;
}

long signed_perm_character(const Permutation& g, const std::vector<ElementSet>& bases, int size) {
  long sum = 0;
  for (ElementSet b : bases) {
    if (size >= 0 && b.size() != size) continue;
    if (g.apply(b) != b) continue;
    std::vector<int> image;
    for (int e : b.elements()) image.push_back(g(e));
    sum += sort_sign(image);
  }
  return sum;
}

long signed_perm_character(const Permutation& g, const Matroid& m) { return signed_perm_character(g, m.bases()); }

std::string RepresentationReport::table() const {
  std::ostringstream out;
  out << "class\tsize";
  for (int d : degrees) out << "\tH~" << d;
  out << "\n";
  for (const auto& row : rows) {
    out << row.cycles << "\t" << row.class_size;
    for (long t : row.traces) out << "\t" << t;
    out << "\n";
  }
  return out.str();
}

namespace {

bool unimodular(const IntMatrix& p) {
  if (p.rows() != p.cols()) return false;
  SmithNormalForm<IntMatrix> snf(p);
  if (snf.rank() != p.rows()) return false;
  for (const auto& f : snf.invariantFactors())
    if (f != 1) return false;
  return true;
}

RepresentationReport check_representation(const AutomorphismGroup& group, const SimplicialComplex& k,
                                          const std::vector<ElementSet>& bases) {
  const GroundSet& ground = group.ground;
  const HomologyAction action(k, ground);
  RepresentationReport report;
  report.group_order = group.order();

  std::set<int> degrees;
  for (ElementSet b : bases) degrees.insert(b.size() - 1);
  for (int d : action.profile().support()) degrees.insert(d);
  report.degrees.assign(degrees.begin(), degrees.end());
  if (!action.profile().torsion_free()) {
    report.character_ok = report.coordinate_ok = false;
    report.failures.push_back("homology has torsion");
    return report;
  }

  // Per degree: bases of size d + 1 and their coefficient matrix P on the homology basis.
  struct Degree {
    int degree;
    std::vector<int> bases;  // positions into `bases`
    IntMatrix coefficients;
    bool usable = false;
  };
  std::vector<Degree> per_degree;
  for (int d : report.degrees) {
    Degree entry{d, {}, {}, false};
    for (std::size_t i = 0; i < bases.size(); ++i)
      if (bases[i].size() == d + 1) entry.bases.push_back(static_cast<int>(i));
    const int rank = action.profile().rank(d);
    if (rank != static_cast<int>(entry.bases.size())) {
      report.character_ok = report.coordinate_ok = false;
      report.failures.push_back("degree " + std::to_string(d) + ": homology rank " + std::to_string(rank) + " but " +
                                std::to_string(entry.bases.size()) + " bases");
    } else if (rank > 0) {
      const IntMatrix& cycles = action.basis(d).cycles();
      entry.coefficients = IntMatrix::Zero(rank, rank);
      for (int row = 0; row < rank; ++row) {
        std::vector<std::string> labels;
        for (int e : bases[entry.bases[row]].elements()) labels.push_back("y:" + ground.label(e));
        const int face = action.chains().face_index(k.simplex_of(labels));
        if (face < 0) throw InvariantViolation("basis face missing from the complex");
        entry.coefficients.row(row) = cycles.row(face);
      }
      entry.usable = unimodular(entry.coefficients);
      if (!entry.usable) {
        report.coordinate_ok = false;
        report.failures.push_back("degree " + std::to_string(d) + ": basis-facet coefficients are not unimodular");
      }
    }
    per_degree.push_back(std::move(entry));
  }

  std::map<Permutation, std::vector<long>> traces, expected;
  for (const auto& g : group.elements) {
    const std::vector<int> vertex_action = induced_vertex_action(g, k, ground);
    const SignedBasisAction on_bases = signed_basis_action(bases, g);
    const std::string name = g.cycle_string(ground.labels());
    for (const auto& entry : per_degree) {
      const IntMatrix m = action.matrix(vertex_action, entry.degree);
      long trace = 0;
      for (Eigen::Index i = 0; i < m.rows(); ++i) trace += m(i, i).get_si();
      const long want = signed_perm_character(g, bases, entry.degree + 1);
      traces[g].push_back(trace);
      expected[g].push_back(want);
      if (trace != want) {
        report.character_ok = false;
        report.failures.push_back(name + " degree " + std::to_string(entry.degree) + ": trace " +
                                  std::to_string(trace) + ", fixed-basis sum " + std::to_string(want));
      }
      if (!entry.usable) continue;
      const int n = static_cast<int>(entry.bases.size());
      std::map<int, int> row_of;
      for (int r = 0; r < n; ++r) row_of[entry.bases[r]] = r;
      IntMatrix s = IntMatrix::Zero(n, n);
      for (int r = 0; r < n; ++r) {
        const int b = entry.bases[r];
        s(row_of.at(on_bases.image[b]), r) = on_bases.sign[b];
      }
      if (IntMatrix(entry.coefficients * m) != IntMatrix(s * entry.coefficients)) {
        report.coordinate_ok = false;
        report.failures.push_back(name + " degree " + std::to_string(entry.degree) +
                                  ": action on basis-facet coordinates is not the signed permutation");
      }
    }
  }

  for (const auto& cls : conjugacy_classes(group)) {
    const Permutation& rep = cls.front();
    report.rows.push_back({rep, rep.cycle_string(ground.labels()), static_cast<int>(cls.size()), traces[rep],
                           expected[rep]});
  }
  return report;
}

}  // namespace

RepresentationReport verify_homology_rep(const ClosureOperator& f, const Limits& limits) {
  return check_representation(aut_group(f, limits), augmented_bergman(f, limits), bases(f));
}

RepresentationReport verify_homology_rep(const Matroid& m, const Limits& limits) {
  return check_representation(aut_matroid(m, limits), augmented_bergman(m, limits), m.bases());
}

}  // namespace augberg
