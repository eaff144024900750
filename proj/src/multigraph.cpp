#include "rayleigh/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rayleigh {

void Multigraph::rebuild_key() {
  edge_key_.clear();
  edge_key_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    long long a = std::min(e.u, e.v);
    long long b = std::max(e.u, e.v);
    edge_key_.push_back((static_cast<long long>(e.id) << 40) | (a << 20) | b);
  }
}

Multigraph Multigraph::make(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  Multigraph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex id");
  if (vertices.empty()) throw std::invalid_argument("graph needs at least one vertex");
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i].id == edges[i + 1].id) throw std::invalid_argument("duplicate edge id");
  for (const Edge& e : edges) {
    if (!std::binary_search(vertices.begin(), vertices.end(), e.u) ||
        !std::binary_search(vertices.begin(), vertices.end(), e.v))
      throw std::invalid_argument("edge endpoint is not a vertex");
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.rebuild_key();
  return g;
}

bool Multigraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  return it != edges_.end() && it->id == id;
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) throw std::invalid_argument("unknown edge id");
  return *it;
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

std::vector<EdgeId> Multigraph::edges_at(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
  std::vector<EdgeId> ids;
  for (const Edge& e : edges_)
    if (e.incident(v)) ids.push_back(e.id);
  return ids;
}

int Multigraph::degree(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

Multigraph Multigraph::delete_edge(EdgeId id) const {
  edge(id);  // throws if unknown
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (const Edge& e : edges_)
    if (e.id != id) kept.push_back(e);
  return make(vertices_, std::move(kept));
}

Multigraph Multigraph::contract_edge(EdgeId id) const {
  const Edge& g = edge(id);
  if (g.is_loop()) return delete_edge(id);
  VertexId keep = std::min(g.u, g.v);
  VertexId gone = std::max(g.u, g.v);
  std::vector<VertexId> verts;
  verts.reserve(vertices_.size() - 1);
  for (VertexId v : vertices_)
    if (v != gone) verts.push_back(v);
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (const Edge& e : edges_) {
    if (e.id == id) continue;
    Edge e2 = e;
    if (e2.u == gone) e2.u = keep;
    if (e2.v == gone) e2.v = keep;
    kept.push_back(e2);
  }
  return make(std::move(verts), std::move(kept));
}

Multigraph Multigraph::delete_vertex(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
  if (n() == 1) throw std::invalid_argument("cannot delete the last vertex");
  std::vector<VertexId> verts;
  for (VertexId w : vertices_)
    if (w != v) verts.push_back(w);
  std::vector<Edge> kept;
  for (const Edge& e : edges_)
    if (!e.incident(v)) kept.push_back(e);
  return make(std::move(verts), std::move(kept));
}

bool Multigraph::is_connected() const {
  if (vertices_.empty()) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : vertices_) adj[v];
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<VertexId> seen;
  std::vector<VertexId> stack{vertices_.front()};
  seen.insert(vertices_.front());
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices_.size();
}

BlockDecomposition Multigraph::blocks_and_cut_vertices() const {
  if (!is_connected()) throw std::invalid_argument("block decomposition needs a connected graph");

  BlockDecomposition out;
  std::set<VertexId> cuts;

  // Loops form their own blocks and never produce cut vertices.
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (VertexId v : vertices_) adj[v];
  for (const Edge& e : edges_) {
    if (e.is_loop()) {
      out.blocks.push_back({e.id});
      continue;
    }
    adj[e.u].push_back({e.v, e.id});
    adj[e.v].push_back({e.u, e.id});
  }

  std::map<VertexId, int> disc, low;
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId via) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (auto [w, eid] : adj[v]) {
      if (eid == via) {
        via = -1;  // reuse only one parallel copy as the tree edge
        continue;
      }
      if (!disc.count(w)) {
        ++children;
        edge_stack.push_back(eid);
        dfs(w, eid);
        low[v] = std::min(low[v], low[w]);
        if ((disc[v] == 1 && children > 1) || (disc[v] > 1 && low[w] >= disc[v])) cuts.insert(v);
        if (low[w] >= disc[v]) {
          std::vector<EdgeId> block;
          while (!edge_stack.empty()) {
            EdgeId top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == eid) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(eid);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  dfs(vertices_.front(), -1);

  std::sort(out.blocks.begin(), out.blocks.end());
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

std::string Multigraph::canonical_key() const {
  std::ostringstream os;
  os << "n:";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ",";
    os << vertices_[i];
  }
  os << ";";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    const Edge& e = edges_[i];
    os << e.id << ":" << std::min(e.u, e.v) << "-" << std::max(e.u, e.v);
  }
  return os.str();
}

Multigraph path_graph(int n_vertices) {
  std::vector<VertexId> verts;
  std::vector<Edge> edges;
  for (int i = 1; i <= n_vertices; ++i) verts.push_back(i);
  for (int i = 1; i < n_vertices; ++i) edges.push_back({i, i, i + 1});
  return Multigraph::make(verts, edges);
}

Multigraph cycle_graph(int n_vertices) {
  std::vector<VertexId> verts;
  std::vector<Edge> edges;
  for (int i = 1; i <= n_vertices; ++i) verts.push_back(i);
  for (int i = 1; i < n_vertices; ++i) edges.push_back({i, i, i + 1});
  edges.push_back({n_vertices, n_vertices, 1});
  return Multigraph::make(verts, edges);
}

Multigraph banana_graph(int n_parallel_edges) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n_parallel_edges; ++i) edges.push_back({i, 1, 2});
  return Multigraph::make({1, 2}, edges);
}

Multigraph complete_graph_k4() {
  // Vertices 1..4 stand for a..d; edge ids follow the fixture labelling
  // 1=ab, 2=bc, 3=bd, 4=ac, 5=cd, 6=ad.
  return Multigraph::make({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 3}, {3, 2, 4}, {4, 1, 3}, {5, 3, 4}, {6, 1, 4}});
}

}  // namespace rayleigh
