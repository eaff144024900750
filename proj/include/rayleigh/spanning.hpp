#pragma once

#include <utility>
#include <vector>

#include "rayleigh/multigraph.hpp"
#include "rayleigh/polynomial.hpp"

namespace rayleigh {

/// A member of X(G;e,f): a forest F such that both F+e and F+f are spanning
/// trees, together with the unique cycle of F+e+f and the orientation sign.
/// The cycle starts with e and is listed in traversal order from tail(e);
/// sign is +1 iff f is traversed tail-to-head on that walk.
struct ForestWitness {
  std::vector<EdgeId> forest;  // sorted, size n-2
  std::vector<EdgeId> cycle;   // edge sequence, cycle[0] == e
  int sign;                    // +1 or -1
};

/// All spanning trees as sorted edge-id sets, in lexicographic order.
/// Empty when the graph is disconnected; the single-vertex graph has one
/// (empty) spanning tree.
std::vector<std::vector<EdgeId>> spanning_trees(const Multigraph& g);

/// Sum of y^T over all spanning trees.
Polynomial tree_polynomial(const Multigraph& g);

/// Tree polynomial of the minor obtained by deleting `del` and contracting
/// `con`. Counts exactly the spanning trees of g that contain all of `con`
/// and avoid all of `del` (so a cycle inside `con` gives the zero
/// polynomial), with those trees' y-monomials divided by y^con.
Polynomial minor_polynomial(const Multigraph& g, const std::vector<EdgeId>& con,
                            const std::vector<EdgeId>& del);

std::vector<ForestWitness> x_forests(const Multigraph& g, const OrientedEdge& e,
                                     const OrientedEdge& f);

/// (X+, X-) generating polynomials of the witnesses split by sign.
std::pair<Polynomial, Polynomial> x_polynomials(const Multigraph& g, const OrientedEdge& e,
                                                const OrientedEdge& f);

/// Weighted spanning-tree sum via the determinant of a reduced weighted
/// Laplacian; loops are ignored. Independent of the enumeration route.
Rational matrix_tree_value(const Multigraph& g, const Weights& w);

/// Checks that `oe` names an edge of g and that {tail,head} equals its
/// endpoint pair; throws std::invalid_argument otherwise.
void check_orientation(const Multigraph& g, const OrientedEdge& oe);

}  // namespace rayleigh
