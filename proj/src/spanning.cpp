#include "rayleigh/spanning.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rayleigh {

namespace {

// Small union-find over vertex ids.
struct Dsu {
  std::map<VertexId, VertexId> parent;

  explicit Dsu(const std::vector<VertexId>& verts) {
    for (VertexId v : verts) parent[v] = v;
  }
  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool connects_all(const Multigraph& g, const std::vector<Edge>& edges, size_t from,
                  Dsu base) {
  int comps = 0;
  for (auto& [v, p] : base.parent)
    if (base.find(v) == v) ++comps;
  for (size_t i = from; i < edges.size() && comps > 1; ++i)
    if (base.unite(edges[i].u, edges[i].v)) --comps;
  return comps == 1;
}

void enumerate(const Multigraph& g, const std::vector<Edge>& edges, size_t idx, Dsu dsu,
               int picked, std::vector<EdgeId>& current,
               std::vector<std::vector<EdgeId>>& out) {
  if (picked == g.n() - 1) {
    out.push_back(current);
    return;
  }
  if (idx == edges.size()) return;
  const Edge& e = edges[idx];
  // include
  if (!e.is_loop()) {
    Dsu with = dsu;
    if (with.unite(e.u, e.v)) {
      current.push_back(e.id);
      enumerate(g, edges, idx + 1, std::move(with), picked + 1, current, out);
      current.pop_back();
    }
  }
  // exclude; prune when the remaining edges cannot complete a spanning set
  if (connects_all(g, edges, idx + 1, dsu)) {
    enumerate(g, edges, idx + 1, std::move(dsu), picked, current, out);
  }
}

}  // namespace

std::vector<std::vector<EdgeId>> spanning_trees(const Multigraph& g) {
  std::vector<std::vector<EdgeId>> out;
  if (!g.is_connected()) return out;
  if (g.n() == 1) {
    out.push_back({});
    return out;
  }
  std::vector<EdgeId> current;
  enumerate(g, g.edges(), 0, Dsu(g.vertices()), 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial tree_polynomial(const Multigraph& g) {
  Polynomial sum;
  for (const auto& tree : spanning_trees(g)) sum = sum + Polynomial::monomial(monomial_of(tree));
  return sum;
}

Polynomial minor_polynomial(const Multigraph& g, const std::vector<EdgeId>& con,
                            const std::vector<EdgeId>& del) {
  std::set<EdgeId> cs(con.begin(), con.end()), ds(del.begin(), del.end());
  for (EdgeId id : cs) {
    g.edge(id);  // throws on unknown id
    if (ds.count(id)) throw std::invalid_argument("contract and delete sets overlap");
  }
  for (EdgeId id : ds) g.edge(id);

  Multigraph h = g;
  for (EdgeId id : ds) h = h.delete_edge(id);
  for (EdgeId id : cs) {
    if (h.edge(id).is_loop()) return Polynomial();  // no tree contains a cycle
    h = h.contract_edge(id);
  }
  return tree_polynomial(h);
}

void check_orientation(const Multigraph& g, const OrientedEdge& oe) {
  const Edge& e = g.edge(oe.id);
  bool ok = (oe.tail == e.u && oe.head == e.v) || (oe.tail == e.v && oe.head == e.u);
  if (!ok) throw std::invalid_argument("orientation endpoints do not match the edge");
}

namespace {

// Unique path between two vertices in a tree given as an edge set.
// Returns the edge sequence; empty when from == to.
std::vector<EdgeId> tree_path(const Multigraph& g, const std::vector<EdgeId>& tree,
                              VertexId from, VertexId to) {
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (EdgeId id : tree) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  std::vector<VertexId> stack{from};
  std::set<VertexId> seen{from};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (auto [w, id] : adj[v])
      if (seen.insert(w).second) {
        parent[w] = {v, id};
        stack.push_back(w);
      }
  }
  std::vector<EdgeId> path;
  VertexId cur = to;
  while (cur != from) {
    auto it = parent.find(cur);
    if (it == parent.end()) throw std::logic_error("tree_path: vertices not connected");
    path.push_back(it->second.second);
    cur = it->second.first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<ForestWitness> x_forests(const Multigraph& g, const OrientedEdge& e,
                                     const OrientedEdge& f) {
  if (e.id == f.id) throw std::invalid_argument("e and f must be distinct");
  check_orientation(g, e);
  check_orientation(g, f);

  std::vector<ForestWitness> out;
  if (g.edge(e.id).is_loop() || g.edge(f.id).is_loop()) return out;

  auto trees = spanning_trees(g);
  std::set<std::vector<EdgeId>> tree_set(trees.begin(), trees.end());

  for (const auto& t : trees) {
    if (!std::binary_search(t.begin(), t.end(), e.id)) continue;
    if (std::binary_search(t.begin(), t.end(), f.id)) continue;
    std::vector<EdgeId> forest;
    for (EdgeId id : t)
      if (id != e.id) forest.push_back(id);
    std::vector<EdgeId> with_f = forest;
    with_f.insert(std::lower_bound(with_f.begin(), with_f.end(), f.id), f.id);
    if (!tree_set.count(with_f)) continue;

    // Unique cycle of F+e+f: e followed by the path in F+f from head(e)
    // back to tail(e).
    std::vector<EdgeId> path = tree_path(g, with_f, e.head, e.tail);
    ForestWitness w;
    w.forest = forest;
    w.cycle.push_back(e.id);
    w.cycle.insert(w.cycle.end(), path.begin(), path.end());

    int sign = 0;
    VertexId cur = e.head;
    for (EdgeId id : path) {
      const Edge& ed = g.edge(id);
      VertexId nxt = ed.other(cur);
      if (id == f.id) sign = (cur == f.tail && nxt == f.head) ? +1 : -1;
      cur = nxt;
    }
    if (sign == 0) throw std::logic_error("cycle of F+e+f does not contain f");
    w.sign = sign;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const ForestWitness& a, const ForestWitness& b) { return a.forest < b.forest; });
  return out;
}

std::pair<Polynomial, Polynomial> x_polynomials(const Multigraph& g, const OrientedEdge& e,
                                                const OrientedEdge& f) {
  Polynomial plus, minus;
  for (const auto& w : x_forests(g, e, f)) {
    Polynomial term = Polynomial::monomial(monomial_of(w.forest));
    if (w.sign > 0)
      plus = plus + term;
    else
      minus = minus + term;
  }
  return {plus, minus};
}

Rational matrix_tree_value(const Multigraph& g, const Weights& w) {
  int n = g.n();
  if (n == 1) return 1;

  std::map<VertexId, int> index;
  for (VertexId v : g.vertices()) {
    int k = static_cast<int>(index.size());
    index[v] = k;
  }

  // Weighted Laplacian with the last row and column removed.
  int d = n - 1;
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    auto it = w.find(e.id);
    if (it == w.end()) throw std::invalid_argument("missing weight for edge");
    if (it->second <= 0) throw std::invalid_argument("weights must be positive");
    int i = index[e.u], j = index[e.v];
    if (i < d) a[i][i] += it->second;
    if (j < d) a[j][j] += it->second;
    if (i < d && j < d) {
      a[i][j] -= it->second;
      a[j][i] -= it->second;
    }
  }

  // Exact Gaussian elimination.
  Rational det = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < d; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (int k = col; k < d; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

}  // namespace rayleigh
