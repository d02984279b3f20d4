#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ehrwt/polytope.hpp"

namespace ehrwt {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  // Rejects loops and out-of-range endpoints; parallel edges collapse.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  // Sorted, each stored as (min, max).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> isolated_vertices() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// conv{e_i + e_j : {i,j} an edge}. Throws InputError when some vertex is
// isolated.
LatticePolytope edge_polytope(const Graph& graph);

// Number of connected components admitting a proper 2-colouring. An
// isolated vertex counts as a bipartite component.
std::size_t bipartite_components(const Graph& graph);

}  // namespace ehrwt
