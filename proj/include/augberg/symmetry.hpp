#pragma once

#include <map>
#include <string>
#include <vector>

#include "augberg/closure.hpp"
#include "augberg/complex.hpp"
#include "augberg/homology.hpp"
#include "augberg/matroid.hpp"
#include "augberg/permutation.hpp"

namespace augberg {

/// Finite permutation group on E, elements sorted with the identity first.
struct AutomorphismGroup {
  GroundSet ground;
  std::vector<Permutation> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& g) const;
};

/// Permutations preserving the bases of M. Also checks, permutation by
/// permutation, that preserving bases is the same as preserving flats.
/// Throws ResourceError above `limits.automorphism` elements.
AutomorphismGroup aut_matroid(const Matroid& m, const Limits& limits = {});
AutomorphismGroup aut_group(const ClosureOperator& f, const Limits& limits = {});

/// Identity, closure under products and inverses; InvariantViolation otherwise.
void verify_group(const AutomorphismGroup& g);

/// Conjugacy classes, each listed from its smallest element.
std::vector<std::vector<Permutation>> conjugacy_classes(const AutomorphismGroup& g);

enum class ComplexKind { Independence, Bergman, ConeBergman, Augmented };

std::string to_string(ComplexKind kind);
SimplicialComplex build_complex(const ClosureOperator& f, ComplexKind kind, const Limits& limits = {});

/// Vertex permutation y_I -> y_{g(I)}, x_F -> x_{g(F)} of a complex with AugBerg-style labels.
/// Throws InvariantViolation if a vertex or a facet has no image.
std::vector<int> induced_vertex_action(const Permutation& g, const SimplicialComplex& k, const GroundSet& ground);

/// Action on oriented i-faces: face j goes to sign[j] * face target[j].
struct SignedFaceMap {
  std::vector<int> target;
  std::vector<int> sign;
};
SignedFaceMap chain_map(const ChainComplex& c, const std::vector<int>& vertex_action, int degree);

/// Homology bases of a complex, reused across group elements.
class HomologyAction {
 public:
  HomologyAction(const SimplicialComplex& k, const GroundSet& ground);

  const SimplicialComplex& complex() const { return complex_; }
  const ChainComplex& chains() const { return chains_; }
  const HomologyProfile& profile() const { return profile_; }
  /// Cached; throws UnsupportedError on torsion.
  const HomologyBasis& basis(int degree) const;
  /// Matrix of g on the homology basis in `degree` (columns are images).
  IntMatrix matrix(const Permutation& g, int degree) const;
  IntMatrix matrix(const std::vector<int>& vertex_action, int degree) const;

 private:
  struct Cached {
    HomologyBasis basis;
    // Nonzero projection entries by face: (coordinate, value).
    std::vector<std::vector<std::pair<int, Integer>>> by_face;
    // Nonzero cycle entries by column: (face, value).
    std::vector<std::vector<std::pair<int, Integer>>> columns;
  };
  const Cached& cached(int degree) const;

  SimplicialComplex complex_;
  GroundSet ground_;
  ChainComplex chains_;
  HomologyProfile profile_;
  mutable std::map<int, Cached> cache_;
};

IntMatrix homology_matrix(const Permutation& g, const SimplicialComplex& k, const GroundSet& ground, int degree);

/// For each basis (by position), its image g(B) and the sign of g restricted to B.
struct SignedBasisAction {
  std::vector<int> image;
  std::vector<int> sign;
};
/// Throws InvariantViolation when g does not permute `bases`.
SignedBasisAction signed_basis_action(const std::vector<ElementSet>& bases, const Permutation& g);

/// Sum of sgn(g|B) over bases B fixed by g; only bases of size `size` when it is nonnegative.
long signed_perm_character(const Permutation& g, const std::vector<ElementSet>& bases, int size = -1);
long signed_perm_character(const Permutation& g, const Matroid& m);

struct CharacterRow {
  Permutation representative;
  std::string cycles;
  int class_size = 0;
  std::vector<long> traces;    // per degree, from homology
  std::vector<long> expected;  // per degree, from fixed bases
};

struct RepresentationReport {
  int group_order = 0;
  std::vector<int> degrees;
  std::vector<CharacterRow> rows;
  bool character_ok = true;
  bool coordinate_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return character_ok && coordinate_ok; }
  /// Character table as text: one row per class, one column per degree.
  std::string table() const;
};

/// Checks, for every group element and every degree that carries bases or
/// homology, the trace on homology against the fixed-basis character, and
/// that coefficients on the facets y_B give a unimodular change of basis in
/// which g acts by the signed permutation of bases.
RepresentationReport verify_homology_rep(const ClosureOperator& f, const Limits& limits = {});
RepresentationReport verify_homology_rep(const Matroid& m, const Limits& limits = {});

}  // namespace augberg
