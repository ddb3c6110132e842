#pragma once

#include <cstddef>

#include "cpg/graph.hpp"

namespace cpg {

inline constexpr std::size_t kIsomorphismCap = 16;

/// Exact isomorphism test by backtracking with degree-sequence pruning.
/// Throws CapExceededError when either graph has more than `cap` vertices.
bool small_graph_isomorphic(const Graph& a, const Graph& b, std::size_t cap = kIsomorphismCap);

}  // namespace cpg
