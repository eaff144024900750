#include "rayleigh/electrical.hpp"

#include <sstream>
#include <stdexcept>

namespace rayleigh {

Rational effective_conductance(const Multigraph& g, EdgeId e, const Weights& w) {
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  if (g.edge(e).is_loop()) throw std::invalid_argument("conductance across a loop is ill-posed");
  for (const Edge& ed : g.edges()) {
    if (ed.id == e) continue;
    auto it = w.find(ed.id);
    if (it != w.end() && it->second <= 0)
      throw std::invalid_argument("weights must be positive");
  }
  Polynomial num = tree_polynomial(g.delete_edge(e));
  if (num.is_zero()) return 0;  // e is a cut edge: no alternative path
  Polynomial den = tree_polynomial(g.contract_edge(e));
  return num.evaluate(w) / den.evaluate(w);
}

Polynomial rayleigh_difference(const Multigraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw std::invalid_argument("e and f must be distinct");
  Polynomial tef = minor_polynomial(g, {e}, {f});
  Polynomial tfe = minor_polynomial(g, {f}, {e});
  Polynomial tcon = minor_polynomial(g, {e, f}, {});
  Polynomial tdel = minor_polynomial(g, {}, {e, f});
  return tef * tfe - tcon * tdel;
}

RayleighReport verify_theorem1(const Multigraph& g, const OrientedEdge& e,
                               const OrientedEdge& f) {
  if (e.id == f.id) throw std::invalid_argument("e and f must be distinct");
  if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
  check_orientation(g, e);
  check_orientation(g, f);

  RayleighReport r;
  r.e = e;
  r.f = f;
  r.t_e_del_f = minor_polynomial(g, {e.id}, {f.id});
  r.t_f_del_e = minor_polynomial(g, {f.id}, {e.id});
  r.t_con_both = minor_polynomial(g, {e.id, f.id}, {});
  r.t_del_both = minor_polynomial(g, {}, {e.id, f.id});
  auto [xp, xm] = x_polynomials(g, e, f);
  r.x_plus = xp;
  r.x_minus = xm;
  r.delta = r.t_e_del_f * r.t_f_del_e - r.t_con_both * r.t_del_both;
  Polynomial diff = r.x_plus - r.x_minus;
  r.square = diff * diff;
  r.verdict = (r.delta == r.square);
  Polynomial lhs = r.t_e_del_f * r.t_f_del_e + Polynomial(2) * r.x_plus * r.x_minus;
  Polynomial rhs = r.t_con_both * r.t_del_both + r.x_plus * r.x_plus + r.x_minus * r.x_minus;
  r.expanded_ok = (lhs == rhs);
  return r;
}

std::string RayleighReport::to_text(const std::function<std::string(EdgeId)>& name) const {
  std::ostringstream os;
  os << "e: " << name(e.id) << " (" << e.tail << "->" << e.head << ")\n";
  os << "f: " << name(f.id) << " (" << f.tail << "->" << f.head << ")\n";
  os << "T_e^f: " << t_e_del_f.to_string(name) << "\n";
  os << "T_f^e: " << t_f_del_e.to_string(name) << "\n";
  os << "T_ef: " << t_con_both.to_string(name) << "\n";
  os << "T^ef: " << t_del_both.to_string(name) << "\n";
  os << "X+: " << x_plus.to_string(name) << "\n";
  os << "X-: " << x_minus.to_string(name) << "\n";
  os << "delta: " << delta.to_string(name) << "\n";
  os << "square: " << square.to_string(name) << "\n";
  os << "verdict: " << ((verdict && expanded_ok) ? "true" : "false") << "\n";
  return os.str();
}

std::string RayleighReport::to_text() const {
  return to_text([](EdgeId id) { return std::to_string(id); });
}

std::pair<Rational, Rational> monotonicity_probe(const Multigraph& g, EdgeId e, EdgeId f,
                                                 const Weights& w, const Rational& w_f_raised) {
  if (e == f) throw std::invalid_argument("e and f must be distinct");
  auto it = w.find(f);
  if (it == w.end()) throw std::invalid_argument("missing weight for f");
  if (!(it->second > 0 && it->second < w_f_raised))
    throw std::invalid_argument("need 0 < w_f < raised w_f");
  Rational before = effective_conductance(g, e, w);
  Weights raised = w;
  raised[f] = w_f_raised;
  Rational after = effective_conductance(g, e, raised);
  return {before, after};
}

}  // namespace rayleigh
