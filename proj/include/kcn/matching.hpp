#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kcn {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph over vertices 0..size()-1. `labels[v]` is the
/// object index vertex v stands for.
struct ProximityGraph {
  std::vector<std::size_t> labels;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const { return adjacency.size(); }
  void add_edge(std::size_t u, std::size_t v);
  std::vector<Edge> edges() const;  // u < v, lexicographic
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Returns mate[v], or kUnmatched.
std::vector<std::size_t> maximum_matching(const ProximityGraph& g);

/// Minimum edge cover: a maximum matching plus, for every unmatched vertex,
/// the edge to its smallest-index neighbour. Size is |V| - |matching|.
/// Throws InputError if some vertex is isolated.
std::vector<Edge> min_edge_cover(const ProximityGraph& g);

}  // namespace kcn
