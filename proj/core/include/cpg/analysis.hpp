#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpg/exact_solvers.hpp"
#include "cpg/graph.hpp"
#include "cpg/graph_metrics.hpp"
#include "cpg/patterns.hpp"
#include "cpg/planarity.hpp"

namespace cpg {

enum class Pattern { K12, K13, K14, K22, K23, K33, K5 };

inline constexpr std::array<Pattern, 7> kAllPatterns = {
    Pattern::K12, Pattern::K13, Pattern::K14, Pattern::K22,
    Pattern::K23, Pattern::K33, Pattern::K5};

/// "K1,2", ..., "K5"
std::string_view pattern_name(Pattern p);

struct AnalysisOptions {
  std::size_t exact_cap = kDefaultExactCap;
};

/// Every invariant the classification results talk about, computed exactly.
struct AnalysisReport {
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::vector<std::vector<Vertex>> components;
  bool is_connected = false;
  Extended diameter;  // nullopt when disconnected
  std::vector<std::size_t> component_diameters;
  Extended girth;
  std::size_t alpha = 0;
  std::size_t omega = 0;
  std::size_t chi = 0;
  bool is_bipartite = false;
  bool is_unicyclic = false;
  PlanarityCertificate planarity;
  /// contains[p] is true when the graph has a subgraph isomorphic to p.
  std::array<bool, kAllPatterns.size()> contains{};
  ShapeDescriptor shape;
  ShapePredicates predicates;

  bool contains_pattern(Pattern p) const { return contains[static_cast<std::size_t>(p)]; }
};

/// Throws CapExceededError when the graph exceeds options.exact_cap.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

/// Stable JSON schema, documented in docs/formats.md.
nlohmann::json to_json(const AnalysisReport& report);

/// Human-readable key/value table.
std::string render_table(const AnalysisReport& report, std::string_view title = {});

}  // namespace cpg
