#include "augberg/tutte.hpp"

#include <algorithm>
#include <sstream>

namespace augberg {

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, std::int64_t c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

void BivariatePolynomial::add_term(int i, int j, std::int64_t c) {
  if (c == 0) return;
  auto& slot = coeffs_[{i, j}];
  slot += c;
  if (slot == 0) coeffs_.erase({i, j});
}

std::int64_t BivariatePolynomial::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t BivariatePolynomial::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t total = 0;
  for (const auto& [exp, c] : coeffs_) {
    std::int64_t term = c;
    for (int k = 0; k < exp.first; ++k) term *= x;
    for (int k = 0; k < exp.second; ++k) term *= y;
    total += term;
  }
  return total;
}

BivariatePolynomial BivariatePolynomial::at_x_zero() const {
  BivariatePolynomial out;
  for (const auto& [exp, c] : coeffs_)
    if (exp.first == 0) out.add_term(0, exp.second, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::at_y_zero() const {
  BivariatePolynomial out;
  for (const auto& [exp, c] : coeffs_)
    if (exp.second == 0) out.add_term(exp.first, 0, c);
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [i, j] = it->first;
    std::int64_t c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    const bool bare = i == 0 && j == 0;
    if (a != 1 || bare) os << a;
    auto power = [&](char v, int e) {
      if (e == 0) return;
      os << v;
      if (e > 1) os << '^' << e;
    };
    power('x', i);
    power('y', j);
  }
  return os.str();
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [exp, c] : other.coeffs_) add_term(exp.first, exp.second, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

namespace {

// Deletion-contraction over a basis family on a fixed index space; `alive`
// marks the elements not yet deleted or contracted.
TuttePolynomial tutte_rec(ElementSet alive, const std::vector<ElementSet>& bases) {
  int loops = 0, coloops = 0, pivot = -1;
  for (int e : alive.elements()) {
    bool in_some = false, in_all = true;
    for (ElementSet b : bases) {
      if (b.contains(e)) in_some = true;
      else in_all = false;
    }
    if (!in_some) ++loops;
    else if (in_all) ++coloops;
    else if (pivot < 0) pivot = e;
  }
  if (pivot < 0) return BivariatePolynomial::monomial(coloops, loops);

  std::vector<ElementSet> deleted, contracted;
  for (ElementSet b : bases) {
    if (b.contains(pivot)) contracted.push_back(b.without(pivot));
    else deleted.push_back(b);
  }
  return tutte_rec(alive.without(pivot), deleted) + tutte_rec(alive.without(pivot), contracted);
}

}  // namespace

TuttePolynomial tutte(const Matroid& m) { return tutte_rec(m.ground().all(), m.bases()); }

Activities activities(const Matroid& m, ElementSet basis) {
  if (!m.is_basis(basis)) throw InputError("activities: argument is not a basis");
  const ElementSet outside = m.ground().all() - basis;
  Activities out;
  for (int b : basis.elements()) {
    bool active = true;
    for (int e : outside.elements())
      if (m.is_basis(basis.without(b).with(e)) && e < b) active = false;
    if (active) out.internal = out.internal.with(b);
  }
  for (int e : outside.elements()) {
    bool active = true;
    for (int b : basis.elements())
      if (m.is_basis(basis.without(b).with(e)) && b < e) active = false;
    if (active) out.external = out.external.with(e);
  }
  return out;
}

TuttePolynomial tutte_from_activities(const Matroid& m) {
  TuttePolynomial out;
  for (ElementSet b : m.bases()) {
    Activities a = activities(m, b);
    out += BivariatePolynomial::monomial(a.internal.size(), a.external.size());
  }
  return out;
}

BivariatePolynomial convolution_sum(const Matroid& m) {
  BivariatePolynomial out;
  const FlatsLattice flats = flats_lattice(m);
  for (ElementSet f : flats.flats())
    out += tutte(restriction(m, f)).at_x_zero() * tutte(contraction(m, f)).at_y_zero();
  return out;
}

bool convolution_check(const Matroid& m) { return tutte(m) == convolution_sum(m); }

}  // namespace augberg
