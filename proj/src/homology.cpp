#include "augberg/homology.hpp"

#include <algorithm>
#include <map>

#include "augberg/errors.hpp"
#include "augberg/smith.hpp"

namespace augberg {

ChainComplex::ChainComplex(const SimplicialComplex& k) : faces_(k.faces()) {
  columns_.resize(faces_.size());
  for (std::size_t layer = 1; layer < faces_.size(); ++layer) {
    std::map<Simplex, int> below;
    for (std::size_t r = 0; r < faces_[layer - 1].size(); ++r) below.emplace(faces_[layer - 1][r], static_cast<int>(r));
    auto& cols = columns_[layer];
    cols.resize(faces_[layer].size());
    for (std::size_t c = 0; c < faces_[layer].size(); ++c) {
      const Simplex& s = faces_[layer][c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex t = s;
        t.erase(t.begin() + drop);
        cols[c].emplace_back(below.at(t), drop % 2 == 0 ? 1 : -1);
      }
      std::sort(cols[c].begin(), cols[c].end());
    }
  }
  // Consecutive boundaries compose to zero.
  for (std::size_t layer = 2; layer < faces_.size(); ++layer)
    for (const auto& col : columns_[layer]) {
      std::map<int, long long> acc;
      for (auto [mid, sign] : col)
        for (auto [low, sign2] : columns_[layer - 1][mid]) acc[low] += sign * sign2;
      for (auto [low, value] : acc)
        if (value != 0) throw InvariantViolation("boundary of a boundary is nonzero");
    }
}

int ChainComplex::chain_rank(int i) const {
  if (i + 1 < 0 || i + 1 >= static_cast<int>(faces_.size())) return 0;
  return static_cast<int>(faces_[i + 1].size());
}

const std::vector<Simplex>& ChainComplex::basis(int i) const {
  static const std::vector<Simplex> empty;
  if (i + 1 < 0 || i + 1 >= static_cast<int>(faces_.size())) return empty;
  return faces_[i + 1];
}

int ChainComplex::face_index(const Simplex& s) const {
  const auto& layer = basis(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  return it != layer.end() && *it == s ? static_cast<int>(it - layer.begin()) : -1;
}

IntMatrix ChainComplex::boundary(int i) const {
  IntMatrix d = IntMatrix::Zero(chain_rank(i - 1), chain_rank(i));
  if (i >= 0 && i + 1 < static_cast<int>(columns_.size()))
    for (int c = 0; c < chain_rank(i); ++c)
      for (auto [r, sign] : columns_[i + 1][c]) d(r, c) = sign;
  return d;
}

SparseMatrix ChainComplex::sparse_boundary(int i) const {
  SparseMatrix d{chain_rank(i - 1), chain_rank(i), {}};
  d.columns.resize(d.cols);
  if (i >= 0 && i + 1 < static_cast<int>(columns_.size()))
    for (int c = 0; c < d.cols; ++c)
      for (auto [r, sign] : columns_[i + 1][c]) d.columns[c].emplace_back(r, sign);
  return d;
}

const std::vector<std::pair<int, int>>& ChainComplex::boundary_column(int i, int c) const {
  return columns_.at(i + 1).at(c);
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool HomologyProfile::acyclic() const {
  return torsion_free() && std::all_of(betti.begin(), betti.end(), [](int b) { return b == 0; });
}

std::vector<int> HomologyProfile::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < betti.size(); ++k)
    if (betti[k] != 0) out.push_back(static_cast<int>(k) - 1);
  return out;
}

std::string HomologyProfile::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] == 0 && torsion[k].empty()) continue;
    std::string group;
    if (betti[k] == 1) group = "Z";
    else if (betti[k] > 1) group = "Z^" + std::to_string(betti[k]);
    for (const auto& t : torsion[k]) group += (group.empty() ? "" : " + ") + ("Z/" + t.get_str());
    if (!out.empty()) out += ", ";
    out += "H~" + std::to_string(static_cast<int>(k) - 1) + " = " + group;
  }
  return out.empty() ? "0" : out;
}

HomologyProfile reduced_homology(const ChainComplex& c) {
  HomologyProfile h;
  const int top = c.top_degree();
  if (top < -1) return h;
  // ranks[i + 1] = rank of the boundary map in degree i.
  std::vector<int> ranks(top + 3, 0);
  std::vector<std::vector<Integer>> torsion(top + 3);
  for (int i = 0; i <= top; ++i) {
    SmithInvariants snf = smith_invariants(c.sparse_boundary(i));
    ranks[i + 1] = static_cast<int>(snf.rank);
    torsion[i + 1] = std::move(snf.torsion);
  }
  for (int i = -1; i <= top; ++i) {
    h.betti.push_back(c.chain_rank(i) - ranks[i + 1] - ranks[i + 2]);
    h.torsion.push_back(torsion[i + 2]);
  }
  return h;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) { return reduced_homology(ChainComplex(k)); }

HomologyBasis::HomologyBasis(const ChainComplex& c, int degree) : degree_(degree) {
  const int n = c.chain_rank(degree);
  if (c.chain_rank(degree + 1) == 0) {
    // Nothing bounds: homology is the cycle group, read off its free coordinates.
    if (auto kernel = sparse_kernel(c.sparse_boundary(degree))) {
      cycles_ = std::move(kernel->basis);
      projection_ = IntMatrix::Zero(cycles_.cols(), n);
      for (std::size_t k = 0; k < kernel->free_columns.size(); ++k) projection_(k, kernel->free_columns[k]) = 1;
      return;
    }
  }
  SmithNormalForm<IntMatrix> lower(c.boundary(degree), SmithComputeInverses);
  const Eigen::Index r = lower.rank();
  // Cycles Z = trailing columns of V; the matching rows of V^{-1} project onto them.
  const IntMatrix z = lower.matrixV().rightCols(n - r);
  const IntMatrix z_proj = lower.matrixVInverse().bottomRows(n - r);
  const IntMatrix relative = z_proj * c.boundary(degree + 1);
  SmithNormalForm<IntMatrix> upper(relative, SmithComputeInverses);
  for (const auto& f : upper.invariantFactors())
    if (f != 1) throw UnsupportedError("homology in degree " + std::to_string(degree) + " has torsion");
  const Eigen::Index rho = upper.rank();
  const Eigen::Index beta = (n - r) - rho;
  cycles_ = z * upper.matrixUInverse().rightCols(beta);
  projection_ = (upper.matrixU() * z_proj).bottomRows(beta);
}

IntMatrix down_laplacian(const ChainComplex& c, int i) {
  const IntMatrix d = c.boundary(i);
  return d.transpose() * d;
}

LaplacianSpectrum laplacian_spectrum(const ChainComplex& c, int i) {
  LaplacianSpectrum out;
  const IntMatrix l = down_laplacian(c, i);
  out.char_poly = characteristic_polynomial(l);
  // Eigenvalues of a symmetric matrix are bounded by its largest absolute row sum.
  Integer bound = 0;
  for (Eigen::Index r = 0; r < l.rows(); ++r) {
    Integer sum = 0;
    for (Eigen::Index k = 0; k < l.cols(); ++k) sum += abs(l(r, k));
    bound = std::max(bound, sum);
  }
  IntPolynomial rest;
  out.integer_roots = nonnegative_integer_roots(out.char_poly, bound, &rest);
  out.integral = rest.degree() == 0;
  return out;
}

}  // namespace augberg
