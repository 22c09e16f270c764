#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "augberg/errors.hpp"

namespace augberg {

/// Hard upper bound on ground-set size imposed by the bitmask representation.
inline constexpr int kMaxGroundSize = 30;

/// A subset of a ground set, stored as a bitmask over element positions.
///
/// Bit i stands for the element at position i of the canonical linear order,
/// so comparisons on the mask never leak into mathematical results; use
/// `lex_less` when the order on sets matters.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr ElementSet singleton(int e) { return ElementSet(std::uint32_t{1} << e); }
  static ElementSet of(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint32_t{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint32_t{1} << e)); }
  /// Smallest element position; the set must be nonempty.
  constexpr int min() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  /// Mask order; only meant for associative containers.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of sorted element lists: {0,1} < {0,2} < {1,2}, and a
/// proper prefix sorts first.
inline bool lex_less(ElementSet a, ElementSet b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return ea < eb;
}

/// Graded order: smaller sets first, lexicographic within a size.
inline bool graded_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

/// Packs the members of `s` that lie in `within` into positions 0..|within|-1,
/// preserving order. Used to move between a matroid and its minors.
inline ElementSet compress(ElementSet s, ElementSet within) {
  std::uint32_t out = 0;
  int k = 0;
  for (int e : within.elements()) {
    if (s.contains(e)) out |= std::uint32_t{1} << k;
    ++k;
  }
  return ElementSet(out);
}

/// Inverse of `compress`.
inline ElementSet expand(ElementSet s, ElementSet within) {
  std::uint32_t out = 0;
  int k = 0;
  for (int e : within.elements()) {
    if (s.contains(k)) out |= std::uint32_t{1} << e;
    ++k;
  }
  return ElementSet(out);
}

/// Finite ground set E with its canonical linear order (position in `labels`).
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(e); }
  ElementSet all() const { return ElementSet::full(size()); }

  /// Position of `label`; throws InputError when absent.
  int index_of(const std::string& label) const;
  ElementSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  /// Comma-joined labels in canonical order, e.g. "1,2".
  std::string join(ElementSet s) const;
  /// Throws InputError when `s` has members outside E.
  void check_subset(ElementSet s) const;

  /// Ground set restricted to `s`, keeping the induced order.
  GroundSet restricted(ElementSet s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace augberg
