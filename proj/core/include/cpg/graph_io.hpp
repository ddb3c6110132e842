#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "cpg/coprime_graph.hpp"
#include "cpg/graph.hpp"
#include "cpg/planarity.hpp"

namespace cpg {

/// Edge-list text: one "u v" pair per line, 0-indexed, blank lines and
/// lines starting with '#' ignored. An optional first line "n <count>" fixes
/// the vertex count; otherwise it is the largest id plus one.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Deterministic DOT for a coprime graph. When `embedding` is given, its
/// rotation system is appended as a comment block.
std::string to_dot(const CoprimeGraph& g, const PlanarEmbedding* embedding = nullptr);

}  // namespace cpg
