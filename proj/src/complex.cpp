#include "augberg/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace augberg {

bool is_subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices, std::vector<Simplex> facets) {
  SimplicialComplex k;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!k.index_.emplace(vertices[v], static_cast<int>(v)).second)
      throw InputError("duplicate vertex label '" + vertices[v] + "'");
  k.vertices_ = std::move(vertices);
  const int n = k.vertex_count();
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("repeated vertex in a facet");
    for (int v : f)
      if (v < 0 || v >= n) throw InputError("facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Keep maximal simplices: scan largest first and test against kept facets
  // sharing the candidate's first vertex.
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
  std::vector<std::vector<std::size_t>> by_vertex(n);
  std::vector<bool> kept(facets.size(), false);
  bool any_kept = false;
  for (std::size_t idx : order) {
    const Simplex& f = facets[idx];
    bool maximal = true;
    if (f.empty()) {
      maximal = !any_kept;
    } else {
      for (std::size_t other : by_vertex[f.front()])
        if (is_subset(f, facets[other])) {
          maximal = false;
          break;
        }
    }
    if (!maximal) continue;
    kept[idx] = true;
    any_kept = true;
    for (int v : f) by_vertex[v].push_back(idx);
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (kept[i]) k.facets_.push_back(std::move(facets[i]));
  return k;
}

SimplicialComplex SimplicialComplex::from_labeled_facets(std::vector<std::string> vertices,
                                                         const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, int> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], static_cast<int>(v));
  std::vector<Simplex> simplices;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& label : f) {
      auto it = index.find(label);
      if (it == index.end()) throw InputError("unknown vertex '" + label + "'");
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return from_facets(std::move(vertices), std::move(simplices));
}

int SimplicialComplex::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown vertex '" + label + "'");
  return it->second;
}

bool SimplicialComplex::has_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subset(s, f); });
}

std::vector<std::string> SimplicialComplex::labels_of(const Simplex& s) const {
  std::vector<std::string> out;
  for (int v : s) out.push_back(vertices_.at(v));
  return out;
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const {
  Simplex s;
  for (const auto& l : labels) s.push_back(index_of(l));
  std::sort(s.begin(), s.end());
  return s;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::is_gallery_connected() const {
  if (!is_pure()) throw PreconditionError("gallery connectivity needs a pure complex");
  if (facets_.size() <= 1) return true;
  // Facets are adjacent when they share a ridge; bucket them by ridge.
  std::map<Simplex, std::vector<int>> ridges;
  for (int i = 0; i < facet_count(); ++i)
    for (std::size_t drop = 0; drop < facets_[i].size(); ++drop) {
      Simplex r = facets_[i];
      r.erase(r.begin() + drop);
      ridges[r].push_back(i);
    }
  std::vector<int> parent(facets_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, members] : ridges)
    for (std::size_t j = 1; j < members.size(); ++j) parent[find(members[j])] = find(members[0]);
  const int root = find(0);
  for (int i = 1; i < facet_count(); ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces() const {
  std::vector<std::vector<Simplex>> out;
  if (is_void()) return out;
  out.resize(dimension() + 2);
  for (const auto& f : facets_) {
    const std::uint32_t subsets = std::uint32_t{1} << f.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i) & 1u) s.push_back(f[i]);
      out[s.size()].push_back(std::move(s));
    }
  }
  for (auto& layer : out) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> out;
  for (const auto& layer : faces()) out.push_back(static_cast<long long>(layer.size()));
  return out;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  long long chi = 0;
  const auto f = f_vector();
  // f[0] counts the empty face, of dimension -1.
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? -1 : 1) * f[i];
  return chi;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<bool>& keep) const {
  if (static_cast<int>(keep.size()) != vertex_count()) throw InputError("vertex mask has the wrong length");
  std::vector<int> position(vertex_count(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < vertex_count(); ++v)
    if (keep[v]) {
      position[v] = static_cast<int>(labels.size());
      labels.push_back(vertices_[v]);
    }
  std::vector<Simplex> facets;
  for (const auto& f : facets_) {
    Simplex s;
    for (int v : f)
      if (keep[v]) s.push_back(position[v]);
    facets.push_back(std::move(s));
  }
  return from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::deleted(int vertex) const {
  std::vector<bool> keep(vertex_count(), true);
  keep.at(vertex) = false;
  return induced(keep);
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<int>& new_position) const {
  if (static_cast<int>(new_position.size()) != vertex_count()) throw InputError("relabelling has the wrong length");
  std::vector<std::string> labels(vertex_count());
  std::vector<bool> seen(vertex_count(), false);
  for (int v = 0; v < vertex_count(); ++v) {
    const int p = new_position[v];
    if (p < 0 || p >= vertex_count() || seen[p]) throw InputError("relabelling is not a bijection");
    seen[p] = true;
    labels[p] = vertices_[v];
  }
  std::vector<Simplex> facets;
  for (const auto& f : facets_) {
    Simplex s;
    for (int v : f) s.push_back(new_position[v]);
    facets.push_back(std::move(s));
  }
  return from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex SimplicialComplex::cone(const std::string& apex) const {
  if (has_vertex(apex)) throw InputError("cone apex '" + apex + "' already a vertex");
  auto labels = vertices_;
  labels.push_back(apex);
  auto facets = facets_;
  for (auto& f : facets) f.push_back(vertex_count());
  return from_facets(std::move(labels), std::move(facets));
}

std::string SimplicialComplex::to_dot(const std::string& name) const {
  std::set<std::pair<int, int>> edges;
  std::set<int> used;
  for (const auto& f : facets_) {
    for (int v : f) used.insert(v);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace(f[i], f[j]);
  }
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v : used) out << "  \"" << vertices_[v] << "\";\n";
  for (auto [a, b] : edges) out << "  \"" << vertices_[a] << "\" -- \"" << vertices_[b] << "\";\n";
  out << "}\n";
  return out.str();
}

SimplicialComplex order_complex(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(leq.size()) != n) throw InputError("comparison matrix has the wrong size");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw InputError("comparison matrix has the wrong size");
  auto less = [&](int i, int j) { return i != j && leq[i][j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (less(i, j) && less(j, i))
        throw InputError("relation is not antisymmetric on '" + labels[i] + "', '" + labels[j] + "'");
      if (!less(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (less(j, k) && !less(i, k))
          throw InputError("relation is not transitive on '" + labels[i] + "' < '" + labels[j] + "' < '" +
                           labels[k] + "'");
    }
  // Maximal chains follow cover relations from minimal to maximal elements.
  std::vector<std::vector<int>> covers(n);
  std::vector<bool> minimal(n, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      minimal[j] = false;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) covers[i].push_back(j);
    }
  std::vector<Simplex> chains;
  Simplex path;
  auto walk = [&](auto&& self, int v) -> void {
    path.push_back(v);
    if (covers[v].empty()) chains.push_back(path);
    for (int w : covers[v]) self(self, w);
    path.pop_back();
  };
  for (int v = 0; v < n; ++v)
    if (minimal[v]) walk(walk, v);
  if (n == 0) chains.emplace_back();
  return SimplicialComplex::from_facets(labels, std::move(chains));
}

}  // namespace augberg
