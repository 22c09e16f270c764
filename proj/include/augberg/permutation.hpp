#pragma once

#include <string>
#include <vector>

#include "augberg/element_set.hpp"

namespace augberg {

/// Bijection on {0, ..., n-1} in array form: image()[i] = g(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  ElementSet apply(ElementSet s) const;
  /// (g * h)(i) = g(h(i)).
  Permutation operator*(const Permutation& h) const;
  Permutation inverse() const;
  int sign() const;
  /// Cycle lengths sorted in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  /// Cycle notation using the supplied labels, e.g. "(1 3)"; "()" for the identity.
  std::string cycle_string(const std::vector<std::string>& labels) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Sign of the permutation that sorts `seq` (all entries distinct).
int sort_sign(const std::vector<int>& seq);

}  // namespace augberg
