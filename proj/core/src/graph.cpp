#include "ehrwt/graph.hpp"

#include <algorithm>
#include <queue>

#include "ehrwt/errors.hpp"

namespace ehrwt {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("graph has a loop at vertex " + std::to_string(a));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::size_t> Graph::isolated_vertices() const {
  std::vector<bool> touched(vertex_count_);
  for (auto [a, b] : edges_) touched[a] = touched[b] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

LatticePolytope edge_polytope(const Graph& graph) {
  const auto isolated = graph.isolated_vertices();
  if (!isolated.empty()) {
    throw InputError("edge polytope needs a graph without isolated vertices; vertex " +
                     std::to_string(isolated.front()) + " has no edges");
  }
  std::vector<IntVector> vertices;
  for (auto [a, b] : graph.edges()) {
    IntVector v(graph.vertex_count(), 0);
    v[a] = 1;
    v[b] = 1;
    vertices.push_back(std::move(v));
  }
  return LatticePolytope(std::move(vertices));
}

std::size_t bipartite_components(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : graph.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(n, -1);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    bool bipartite = true;
    std::queue<std::size_t> q;
    colour[start] = 0;
    q.push(start);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) ++count;
  }
  return count;
}

}  // namespace ehrwt
