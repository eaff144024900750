#include "rayleigh/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rayleigh {

Monomial monomial_of(const std::vector<EdgeId>& edge_set) {
  std::vector<EdgeId> ids = edge_set;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("edge set with repeats");
  Monomial m;
  m.reserve(ids.size());
  for (EdgeId id : ids) m.push_back({id, 1});
  return m;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].first, a[i].second + b[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_to_string(const Monomial& m,
                               const std::function<std::string(EdgeId)>& name) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [id, exp] : m) {
    if (!first) os << "*";
    first = false;
    os << "y" << name(id);
    if (exp > 1) os << "^" << exp;
  }
  return os.str();
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  if (denominator(r) == 1)
    os << numerator(r);
  else
    os << numerator(r) << "/" << denominator(r);
  return os.str();
}

Polynomial::Polynomial(Int constant) {
  if (constant != 0) terms_[Monomial{}] = std::move(constant);
}

Polynomial Polynomial::monomial(Monomial m, Int coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_[std::move(m)] = std::move(coeff);
  return p;
}

Int Polynomial::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Rational Polynomial::evaluate(const Weights& w) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (auto [id, exp] : m) {
      auto it = w.find(id);
      if (it == w.end()) throw std::invalid_argument("missing weight for occurring variable");
      for (int k = 0; k < exp; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

bool Polynomial::is_multiaffine() const {
  for (const auto& [m, c] : terms_)
    for (auto [id, exp] : m)
      if (exp > 1) return false;
  return true;
}

bool Polynomial::is_homogeneous_of_degree(int d) const {
  for (const auto& [m, c] : terms_) {
    int deg = 0;
    for (auto [id, exp] : m) deg += exp;
    if (deg != d) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::function<std::string(EdgeId)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || m.empty()) {
      os << mag;
      if (!m.empty()) os << "*";
    }
    if (!m.empty()) {
      bool inner_first = true;
      for (auto [id, exp] : m) {
        if (!inner_first) os << "*";
        inner_first = false;
        os << "y" << name(id);
        if (exp > 1) os << "^" << exp;
      }
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const {
  return to_string([](EdgeId id) { return std::to_string(id); });
}

}  // namespace rayleigh
