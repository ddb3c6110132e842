#include "cpg/graph_metrics.hpp"

#include <algorithm>
#include <deque>

namespace cpg {

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp = {s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<Extended> distances_from(const Graph& g, Vertex source) {
  std::vector<Extended> dist(g.vertex_count());
  std::deque<Vertex> queue = {source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> component_diameters(const Graph& g) {
  std::vector<std::size_t> out;
  for (const auto& comp : connected_components(g)) {
    std::size_t best = 0;
    for (Vertex s : comp) {
      for (const auto& d : distances_from(g, s)) {
        if (d) best = std::max(best, *d);
      }
    }
    out.push_back(best);
  }
  return out;
}

Extended diameter(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  if (!is_connected(g)) return std::nullopt;
  return component_diameters(g).front();
}

Extended girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Extended best;
  std::vector<std::size_t> dist(n), parent(n);
  std::vector<bool> seen(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(seen.begin(), seen.end(), false);
    std::deque<Vertex> queue = {root};
    seen[root] = true;
    dist[root] = 0;
    parent[root] = root;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue = {s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::size_t cyclomatic_number(const Graph& g) {
  return g.edge_count() + connected_components(g).size() - g.vertex_count();
}

}  // namespace cpg
