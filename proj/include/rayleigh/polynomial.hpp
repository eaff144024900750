#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rayleigh/multigraph.hpp"

namespace rayleigh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse exponent vector: (edge id, exponent) pairs sorted by edge id, all
/// exponents >= 1. The empty vector is the constant monomial.
using Monomial = std::vector<std::pair<EdgeId, int>>;

Monomial monomial_of(const std::vector<EdgeId>& edge_set);          // all exponents 1
Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m,
                               const std::function<std::string(EdgeId)>& name);

/// Positive rational weights per edge, the conductance assignment.
using Weights = std::map<EdgeId, Rational>;

/// p/q in lowest terms, plain integer when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Sparse multivariate polynomial over exact integers, keyed by edge ids.
/// Term order is lexicographic on the (EdgeId, exponent) pair sequence, which
/// fixes the canonical printed form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Int constant);
  static Polynomial monomial(Monomial m, Int coeff = 1);
  static Polynomial variable(EdgeId id) { return monomial({{id, 1}}); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  Int coefficient_of(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  /// Exact evaluation. Throws std::invalid_argument if a variable occurring
  /// in the polynomial has no weight.
  Rational evaluate(const Weights& w) const;

  /// True iff every exponent is at most one.
  bool is_multiaffine() const;

  /// True iff every monomial has total degree d (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous_of_degree(int d) const;

  /// Canonical rendering, e.g. "y3*y4 + y4*y5", "-2*y2 + y3^2", "0".
  std::string to_string(const std::function<std::string(EdgeId)>& name) const;
  std::string to_string() const;

 private:
  std::map<Monomial, Int> terms_;  // no zero coefficients stored

  void add_term(const Monomial& m, const Int& c);
};

}  // namespace rayleigh
