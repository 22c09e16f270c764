#include "augberg/element_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "augberg/permutation.hpp"

namespace augberg {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSize)
    throw ResourceError("ground set larger than " + std::to_string(kMaxGroundSize) + " elements");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty element label");
    if (l.find_first_of(",: \t\n") != std::string::npos)
      throw InputError("element label '" + l + "' contains a reserved character");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
}

int GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown element '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

ElementSet GroundSet::subset(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (int e : s.elements()) out.push_back(labels_.at(e));
  return out;
}

std::string GroundSet::join(ElementSet s) const {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += labels_.at(e);
  }
  return out;
}

void GroundSet::check_subset(ElementSet s) const {
  if (!s.subset_of(all()))
    throw InputError("subset has elements outside the ground set");
}

GroundSet GroundSet::restricted(ElementSet s) const {
  check_subset(s);
  return GroundSet(labels_of(s));
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || hit[v]) throw InputError("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

ElementSet Permutation::apply(ElementSet s) const {
  ElementSet out;
  for (int e : s.elements()) out = out.with(image_[e]);
  return out;
}

Permutation Permutation::operator*(const Permutation& h) const {
  std::vector<int> out(h.size());
  for (int i = 0; i < h.size(); ++i) out[i] = image_[h.image_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[image_[i]] = i;
  return Permutation(std::move(out));
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::cycle_string(const std::vector<std::string>& labels) const {
  std::vector<bool> seen(size(), false);
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += labels.at(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

int sort_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace augberg
