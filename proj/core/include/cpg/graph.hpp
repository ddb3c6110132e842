#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cpg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. Graphs with at most kDenseLimit vertices
/// also carry a bitset adjacency matrix for O(1) adjacency tests; larger
/// graphs fall back to binary search in the neighbor lists.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 512;

  Graph() = default;
  explicit Graph(std::size_t n);

  /// Inserts {u, v}; duplicates are ignored. Throws DomainError on loops or
  /// out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool is_dense() const noexcept { return !rows_.empty() || adj_.empty(); }

  /// Row v of the adjacency matrix (dense graphs only).
  const boost::dynamic_bitset<>& row(Vertex v) const { return rows_[v]; }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  Graph complement() const;
  Graph induced(std::span<const Vertex> vertices) const;

  /// Row bitsets for any size; used by the exact solvers.
  std::vector<boost::dynamic_bitset<>> adjacency_bitsets() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<boost::dynamic_bitset<>> rows_;
  std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph path_graph(std::size_t edges);
Graph cycle_graph(std::size_t n);
Graph empty_graph(std::size_t n);

/// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace cpg
