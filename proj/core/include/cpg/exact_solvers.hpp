#pragma once

#include <cstddef>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Default vertex cap for the exponential-time solvers below.
inline constexpr std::size_t kDefaultExactCap = 64;

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
/// Returns the clique vertices ascending. Throws CapExceededError above cap.
std::vector<Vertex> maximum_clique(const Graph& g, std::size_t cap = kDefaultExactCap);

std::size_t clique_number(const Graph& g, std::size_t cap = kDefaultExactCap);

/// Maximum clique of the complement.
std::vector<Vertex> maximum_independent_set(const Graph& g, std::size_t cap = kDefaultExactCap);
std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultExactCap);

/// Exact chromatic number: DSATUR upper bound, clique lower bound, then
/// DSATUR-ordered branch and bound.
std::size_t chromatic_number(const Graph& g, std::size_t cap = kDefaultExactCap);

/// An optimal coloring (color per vertex, colors 0..chi-1).
std::vector<std::size_t> optimal_coloring(const Graph& g, std::size_t cap = kDefaultExactCap);

/// True iff `colors` assigns different colors to adjacent vertices.
bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);

}  // namespace cpg
