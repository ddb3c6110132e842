#include "cpg/patterns.hpp"

#include <algorithm>
#include <string>

#include "cpg/error.hpp"
#include "cpg/graph_metrics.hpp"

namespace cpg {

bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || a > 3) {
    throw DomainError("contains_complete_bipartite supports a in {1, 2, 3}, got " + std::to_string(a));
  }
  const std::size_t n = g.vertex_count();
  if (a == 1) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) >= b) return true;
    }
    return false;
  }
  const auto rows = g.adjacency_bitsets();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto common = rows[u] & rows[v];
      if (a == 2) {
        if (common.count() >= b) return true;
        continue;
      }
      if (common.count() < b) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if ((common & rows[w]).count() >= b) return true;
      }
    }
  }
  return false;
}

bool is_unicyclic(const Graph& g) { return cyclomatic_number(g) == 1; }

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool all_degrees(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

/// Part sizes (smaller first) if g is connected complete bipartite.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  if (g.edge_count() == 0 || !is_connected(g)) return std::nullopt;
  const auto colors = bipartition(g);
  if (!colors) return std::nullopt;
  const auto left = static_cast<std::size_t>(std::count(colors->begin(), colors->end(), 0));
  const std::size_t right = g.vertex_count() - left;
  if (g.edge_count() != left * right) return std::nullopt;
  return std::pair{std::min(left, right), std::max(left, right)};
}

}  // namespace

const char* shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Null: return "Null";
    case ShapeKind::Complete: return "Complete";
    case ShapeKind::Star: return "Star";
    case ShapeKind::Path: return "Path";
    case ShapeKind::Cycle: return "Cycle";
    case ShapeKind::CompleteBipartite: return "CompleteBipartite";
    case ShapeKind::Tree: return "Tree";
    case ShapeKind::Unicyclic: return "Unicyclic";
    case ShapeKind::Other: return "Other";
  }
  return "?";
}

std::string ShapeDescriptor::core_string() const {
  std::string s = shape_kind_name(kind);
  switch (kind) {
    case ShapeKind::Complete:
    case ShapeKind::Star:
    case ShapeKind::Path:
    case ShapeKind::Cycle:
      s += "(" + std::to_string(a) + ")";
      break;
    case ShapeKind::CompleteBipartite:
      s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      break;
    default:
      break;
  }
  return s;
}

std::string ShapeDescriptor::to_string() const {
  std::string s = core_string();
  if (kind == ShapeKind::Null) return isolated == 0 ? s : s + "(" + std::to_string(isolated) + ")";
  if (isolated == 1) s += " + K1";
  if (isolated > 1) s += " + " + std::to_string(isolated) + "K1";
  return s;
}

ShapeDescriptor classify_shape(const Graph& g) {
  ShapeDescriptor d;
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      ++d.isolated;
    } else {
      core.push_back(v);
    }
  }
  if (core.empty()) return d;

  const Graph h = g.induced(core);
  const std::size_t n = h.vertex_count();
  const std::size_t e = h.edge_count();
  const bool connected = is_connected(h);
  const bool tree = connected && e + 1 == n;

  if (connected && e == n * (n - 1) / 2) {
    d.kind = ShapeKind::Complete;
    d.a = n;
  } else if (tree && max_degree(h) == n - 1 && n - 1 >= 3) {
    d.kind = ShapeKind::Star;
    d.a = n - 1;
  } else if (tree && max_degree(h) <= 2) {
    d.kind = ShapeKind::Path;
    d.a = e;
  } else if (auto parts = complete_bipartite_parts(h)) {
    // Before Cycle, so that C4 reads as K2,2.
    d.kind = ShapeKind::CompleteBipartite;
    d.a = parts->first;
    d.b = parts->second;
  } else if (connected && all_degrees(h, 2)) {
    d.kind = ShapeKind::Cycle;
    d.a = n;
  } else if (tree) {
    d.kind = ShapeKind::Tree;
  } else if (cyclomatic_number(h) == 1) {
    d.kind = ShapeKind::Unicyclic;
  } else {
    d.kind = ShapeKind::Other;
  }
  return d;
}

ShapePredicates shape_predicates(const Graph& g) {
  ShapePredicates p;
  const std::size_t n = g.vertex_count();
  const std::size_t e = g.edge_count();
  p.null = e == 0;
  p.unicyclic = is_unicyclic(g);
  if (e == 0) return p;
  const bool connected = is_connected(g);
  p.complete = e == n * (n - 1) / 2;
  p.tree = connected && e + 1 == n;
  p.star = p.tree && max_degree(g) == n - 1;
  p.path = p.tree && max_degree(g) <= 2;
  p.cycle = connected && n >= 3 && all_degrees(g, 2);
  p.complete_bipartite = complete_bipartite_parts(g).has_value();
  return p;
}

}  // namespace cpg
