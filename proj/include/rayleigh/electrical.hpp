#pragma once

#include <string>
#include <utility>

#include "rayleigh/multigraph.hpp"
#include "rayleigh/polynomial.hpp"
#include "rayleigh/spanning.hpp"

namespace rayleigh {

/// The symbolic content of the Rayleigh identity for one oriented pair
/// (e, f): the four minor tree polynomials, the signed forest polynomials,
/// the difference polynomial and the matching square. `verdict` is the
/// canonical-form equality delta == square; `expanded_ok` is the same
/// identity checked in the expanded form
///   T_e^f*T_f^e + 2*X+*X-  ==  T_ef*T^ef + (X+)^2 + (X-)^2.
struct RayleighReport {
  OrientedEdge e, f;
  Polynomial t_e_del_f;   // contract e, delete f
  Polynomial t_f_del_e;   // contract f, delete e
  Polynomial t_con_both;  // contract e and f
  Polynomial t_del_both;  // delete e and f
  Polynomial x_plus;
  Polynomial x_minus;
  Polynomial delta;       // t_e_del_f*t_f_del_e - t_con_both*t_del_both
  Polynomial square;      // (x_plus - x_minus)^2
  bool verdict = false;
  bool expanded_ok = false;

  std::string to_text(const std::function<std::string(EdgeId)>& name) const;
  std::string to_text() const;
};

/// Kirchhoff's ratio T(G-e)/T(G/e) at exact rational weights, the
/// conductance of the rest of the network between the ends of e. A cut edge
/// yields 0; loops are rejected.
Rational effective_conductance(const Multigraph& g, EdgeId e, const Weights& w);

/// The polynomial T_e^f*T_f^e - T_ef*T^ef.
Polynomial rayleigh_difference(const Multigraph& g, EdgeId e, EdgeId f);

RayleighReport verify_theorem1(const Multigraph& g, const OrientedEdge& e,
                               const OrientedEdge& f);

/// Effective conductance across e before and after raising the weight of f
/// to w_f_raised. The contract is second >= first.
std::pair<Rational, Rational> monotonicity_probe(const Multigraph& g, EdgeId e, EdgeId f,
                                                 const Weights& w, const Rational& w_f_raised);

}  // namespace rayleigh
