#pragma once

#include <map>
#include <string>
#include <vector>

#include "augberg/errors.hpp"

namespace augberg {

/// Vertex indices in increasing (reference) order.
using Simplex = std::vector<int>;

bool is_subset(const Simplex& a, const Simplex& b);
Simplex intersection(const Simplex& a, const Simplex& b);

/// Abstract simplicial complex given by its facets.
///
/// The vertex list fixes the reference ordering used for orientations: an
/// oriented simplex is always stored with its vertices in increasing index
/// order. A complex with no facets is the void complex; the complex whose only
/// face is the empty set has the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal facets and sorts them lexicographically.
  /// Throws InputError on an out-of-range vertex or duplicate label.
  static SimplicialComplex from_facets(std::vector<std::string> vertices, std::vector<Simplex> facets);
  static SimplicialComplex from_labeled_facets(std::vector<std::string> vertices,
                                               const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::string& label(int v) const { return vertices_.at(v); }
  /// Index of a vertex label; throws InputError when absent.
  int index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }

  const std::vector<Simplex>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool is_void() const { return facets_.empty(); }
  bool has_facet(const Simplex& s) const;
  /// Whether `s` is a face (subset of some facet).
  bool contains(const Simplex& s) const;
  std::vector<std::string> labels_of(const Simplex& s) const;
  Simplex simplex_of(const std::vector<std::string>& labels) const;

  /// Largest facet size minus one; -1 for both {} and the void complex.
  int dimension() const;
  bool is_pure() const;
  /// Facets linked through codimension-one intersections. Throws
  /// PreconditionError on a non-pure complex.
  bool is_gallery_connected() const;

  /// faces()[i + 1] lists the i-dimensional faces in lexicographic order,
  /// starting with the empty face at index 0 (absent for the void complex).
  std::vector<std::vector<Simplex>> faces() const;
  /// Face counts f_{-1}, f_0, f_1, ...
  std::vector<long long> f_vector() const;
  /// Sum over i >= -1 of (-1)^i f_i.
  long long reduced_euler_characteristic() const;

  /// Subcomplex of faces whose vertices all satisfy `keep`; vertex list shrinks to the kept ones.
  SimplicialComplex induced(const std::vector<bool>& keep) const;
  /// Deletion of one vertex.
  SimplicialComplex deleted(int vertex) const;
  /// Same complex with vertex v renamed to position order[v] of the new list.
  SimplicialComplex relabeled(const std::vector<int>& new_position) const;
  /// Cone over the complex with a fresh apex appended to the vertex list.
  SimplicialComplex cone(const std::string& apex) const;

  /// 1-skeleton as an undirected DOT graph.
  std::string to_dot(const std::string& name = "complex") const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<std::string> vertices_;
  std::map<std::string, int> index_;
  std::vector<Simplex> facets_;
};

/// Order complex of a finite poset given by its (reflexive or strict)
/// comparison matrix: leq[i][j] means element i lies below element j.
/// Throws InputError when the relation is not antisymmetric or not transitive.
SimplicialComplex order_complex(const std::vector<std::string>& labels, const std::vector<std::vector<bool>>& leq);

}  // namespace augberg
