#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// std::nullopt encodes an infinite distance or girth.
using Extended = std::optional<std::size_t>;

/// Components as ascending vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Breadth-first distances from `source`; unreachable vertices are nullopt.
std::vector<Extended> distances_from(const Graph& g, Vertex source);

/// Largest eccentricity within each component, in connected_components order.
std::vector<std::size_t> component_diameters(const Graph& g);

/// Diameter of a connected graph; nullopt when disconnected. The empty graph
/// on zero vertices has diameter 0.
Extended diameter(const Graph& g);

/// Length of a shortest cycle via a breadth-first search from every vertex;
/// nullopt for forests.
Extended girth(const Graph& g);

bool is_bipartite(const Graph& g);

/// Two-coloring (0/1 per vertex) if bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// E - V + C, the number of independent cycles.
std::size_t cyclomatic_number(const Graph& g);

}  // namespace cpg
