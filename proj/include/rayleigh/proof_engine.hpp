#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rayleigh/certificate.hpp"
#include "rayleigh/multigraph.hpp"
#include "rayleigh/polynomial.hpp"
#include "rayleigh/spanning.hpp"

namespace rayleigh {

/// The six product classes a contributing pair can belong to. The first
/// three index the left side of the identity, the last three the right side.
enum class PairType {
  tree_cross,     // A+e and B+f are spanning trees (f not in A+e, e not in B+f)
  x_plus_minus,   // A in X+, B in X-
  x_minus_plus,   // A in X-, B in X+
  tree_nested,    // A+e+f is a spanning tree and B is a spanning tree
  x_plus_plus,
  x_minus_minus,
};

std::string pair_type_name(PairType t);
bool pair_type_on_lhs(PairType t);

/// An ordered partition (A, B) of E minus {e, f} together with one product
/// class it contributes to. The same (A, B) may appear under several types.
struct ContributionPair {
  std::vector<EdgeId> a;
  std::vector<EdgeId> b;
  PairType type;

  bool operator==(const ContributionPair& o) const = default;
  bool operator<(const ContributionPair& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return type < o.type;
  }
};

/// Raised on a violated structural claim: either the case dichotomy fails or
/// a construction the argument relies on does not exist. Signals a bug or a
/// falsified claim, never a routine error.
struct DichotomyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All membership classes for a fixed (g, e, f), derived from one spanning
/// tree enumeration. Sets contain sorted edge-id vectors over E minus {e,f}.
struct EfClasses {
  std::set<std::vector<EdgeId>> completes_with_e;        // A: A+e spans, f not in A
  std::set<std::vector<EdgeId>> completes_with_f;        // B: B+f spans, e not in B
  std::set<std::vector<EdgeId>> completes_with_both;     // A: A+e+f spans
  std::set<std::vector<EdgeId>> spans_alone;             // B: B spans avoiding e,f
  std::map<std::vector<EdgeId>, int> x_sign;             // F in X -> +1/-1
};

EfClasses compute_ef_classes(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f);

/// Every class the ordered partition (A,B) contributes to; empty when it
/// contributes to none. Throws when (A,B) does not partition E minus {e,f}.
std::vector<PairType> classify_pair(const Multigraph& g, const OrientedEdge& e,
                                    const OrientedEdge& f, const std::vector<EdgeId>& a,
                                    const std::vector<EdgeId>& b);

/// All contributing pairs at the all-ones monomial, each type listed
/// separately, in deterministic order.
std::vector<ContributionPair> contributing_pairs(const Multigraph& g, const OrientedEdge& e,
                                                 const OrientedEdge& f);

/// Counts of contributing pairs on each side of the identity at the all-ones
/// exponent (left = tree_cross + both mixed types, right = the rest).
std::pair<long long, long long> lhs_rhs_counts(const Multigraph& g, const OrientedEdge& e,
                                               const OrientedEdge& f);

/// One step of the exponent-map reduction.
struct ReduceStep {
  enum Kind { kDelete, kContract } kind;
  EdgeId edge;
};

struct ReduceResult {
  Multigraph reduced;
  Monomial remaining;            // the not-yet-eliminated exponents
  std::vector<ReduceStep> steps;
  bool stuck_on_cut_edge = false;  // a zero-exponent cut edge blocks deletion
};

/// Repeatedly deletes exponent-0 edges and contracts exponent-2 edges
/// (smallest id first), never deleting a cut edge. alpha must not mention
/// e or f.
ReduceResult reduce_alpha(const Multigraph& g, EdgeId e, EdgeId f, const Monomial& alpha);

/// Lemma-2 style factorization at a cut vertex. Verifies the tree/X
/// factorizations as exact polynomial identities and reports which side
/// holds e and f.
struct SplitRecord {
  VertexId cut_vertex;
  std::vector<EdgeId> side_with_e;  // edge ids of H (always contains e)
  std::vector<EdgeId> side_rest;    // edge ids of J
  bool same_side;                   // f in H as well
  std::vector<Equality> equalities; // all must hold
  bool verified() const;
};

SplitRecord split_blocks(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f);

/// Locally verified proof fragments for the three vertex-degree cases; the
/// fragment carries the node's own equalities but not child subproofs.
CertificateNode case2_reduce(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f,
                             VertexId v);
CertificateNode case3_expand(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f,
                             VertexId v);
CertificateNode case4_expand(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f,
                             VertexId v);

/// Runs the full induction and returns the machine-checkable proof tree.
/// Throws DichotomyError when a structural claim fails.
Certificate prove(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f);

/// Recomputes the entire proof from scratch and checks the given certificate
/// against it node by node, equality by equality.
bool validate_certificate(const Multigraph& g, const OrientedEdge& e, const OrientedEdge& f,
                          const Certificate& cert);

}  // namespace rayleigh
