#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rayleigh/multigraph.hpp"

namespace rayleigh {

/// One named, re-checkable claim. Both sides are canonical renderings of
/// exact values (integers or polynomials); the claim is lhs == rhs, and a
/// validator recomputes both sides from scratch.
struct Equality {
  std::string name;
  std::string lhs;
  std::string rhs;

  bool holds() const { return lhs == rhs; }
  bool operator==(const Equality& o) const = default;
};

/// A node of the proof tree: the rule applied at one (graph, monomial)
/// state, its parameters, the equalities verified there, and the child
/// subproofs the rule delegates to.
struct CertificateNode {
  std::string rule;
  std::string graph_key;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Equality> equalities;
  std::vector<CertificateNode> children;

  const std::string* param(const std::string& key) const;
  bool operator==(const CertificateNode& o) const = default;
};

/// Complete record of one induction run for a fixed oriented pair (e, f).
struct Certificate {
  OrientedEdge e, f;
  CertificateNode root;

  /// Diff-stable indented text form.
  std::string to_text() const;

  /// Total number of nodes in the tree.
  int node_count() const;

  bool operator==(const Certificate& o) const;
};

}  // namespace rayleigh
