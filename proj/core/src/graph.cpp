#include "cpg/graph.hpp"

#include <algorithm>
#include <string>

#include "cpg/error.hpp"

namespace cpg {

Graph::Graph(std::size_t n) : adj_(n) {
  if (n <= kDenseLimit) rows_.assign(n, boost::dynamic_bitset<>(n));
}

void Graph::add_edge(Vertex u, Vertex v) {
  const std::size_t n = adj_.size();
  if (u >= n || v >= n) {
    throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  }
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  if (!rows_.empty()) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!rows_.empty()) return rows_[u].test(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  const std::size_t n = adj_.size();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

std::vector<boost::dynamic_bitset<>> Graph::adjacency_bitsets() const {
  if (!rows_.empty()) return rows_;
  const std::size_t n = adj_.size();
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj_[u]) rows[u].set(v);
  }
  return rows;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t edges) {
  Graph g(edges + 1);
  for (Vertex u = 0; u < edges; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.vertex_count();
  Graph g(shift + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

}  // namespace cpg
