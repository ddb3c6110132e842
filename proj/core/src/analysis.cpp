#include "cpg/analysis.hpp"

#include <sstream>
#include <string>

#include "cpg/error.hpp"

namespace cpg {

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::K12: return "K1,2";
    case Pattern::K13: return "K1,3";
    case Pattern::K14: return "K1,4";
    case Pattern::K22: return "K2,2";
    case Pattern::K23: return "K2,3";
    case Pattern::K33: return "K3,3";
    case Pattern::K5: return "K5";
  }
  return "?";
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  if (g.vertex_count() > options.exact_cap) {
    throw CapExceededError("graph has " + std::to_string(g.vertex_count()) +
                           " vertices, above the exact-solver cap of " +
                           std::to_string(options.exact_cap));
  }
  AnalysisReport r;
  r.n_vertices = g.vertex_count();
  r.n_edges = g.edge_count();
  r.components = connected_components(g);
  r.is_connected = r.components.size() <= 1;
  r.diameter = diameter(g);
  r.component_diameters = component_diameters(g);
  r.girth = girth(g);
  r.alpha = independence_number(g, options.exact_cap);
  r.omega = clique_number(g, options.exact_cap);
  r.chi = chromatic_number(g, options.exact_cap);
  r.is_bipartite = is_bipartite(g);
  r.is_unicyclic = is_unicyclic(g);
  r.planarity = planarity(g);

  auto set = [&](Pattern p, bool v) { r.contains[static_cast<std::size_t>(p)] = v; };
  set(Pattern::K12, contains_complete_bipartite(g, 1, 2));
  set(Pattern::K13, contains_complete_bipartite(g, 1, 3));
  set(Pattern::K14, contains_complete_bipartite(g, 1, 4));
  set(Pattern::K22, contains_complete_bipartite(g, 2, 2));
  set(Pattern::K23, contains_complete_bipartite(g, 2, 3));
  set(Pattern::K33, contains_complete_bipartite(g, 3, 3));
  set(Pattern::K5, r.omega >= 5);

  r.shape = classify_shape(g);
  r.predicates = shape_predicates(g);
  return r;
}

namespace {

nlohmann::json extended(const Extended& v) {
  if (v) return *v;
  return nullptr;
}

std::string extended_text(const Extended& v) { return v ? std::to_string(*v) : "inf"; }

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["n_vertices"] = r.n_vertices;
  j["n_edges"] = r.n_edges;
  j["components"] = r.components;
  j["is_connected"] = r.is_connected;
  j["diameter"] = extended(r.diameter);
  j["component_diameters"] = r.component_diameters;
  j["girth"] = extended(r.girth);
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  j["chi"] = r.chi;
  j["is_bipartite"] = r.is_bipartite;
  j["is_unicyclic"] = r.is_unicyclic;

  nlohmann::json planar;
  planar["planar"] = r.planarity.is_planar();
  if (r.planarity.is_planar()) {
    planar["faces"] = r.planarity.embedding().faces;
    planar["rotation"] = r.planarity.embedding().rotation;
  } else {
    const auto& w = r.planarity.witness();
    planar["witness"] = {{"kind", w.kind == KuratowskiKind::K5 ? "K5" : "K3,3"},
                         {"branch_vertices", w.branch_vertices},
                         {"edges", edges_json(w.edges)}};
  }
  j["planarity"] = planar;

  nlohmann::json contains = nlohmann::json::object();
  for (Pattern p : kAllPatterns) contains[std::string(pattern_name(p))] = r.contains_pattern(p);
  j["contains"] = contains;

  j["shape"] = {{"kind", shape_kind_name(r.shape.kind)},
                {"a", r.shape.a},
                {"b", r.shape.b},
                {"isolated", r.shape.isolated},
                {"text", r.shape.to_string()}};
  const auto& p = r.predicates;
  j["predicates"] = {{"null", p.null},
                     {"complete", p.complete},
                     {"star", p.star},
                     {"path", p.path},
                     {"cycle", p.cycle},
                     {"complete_bipartite", p.complete_bipartite},
                     {"tree", p.tree},
                     {"unicyclic", p.unicyclic}};
  return j;
}

std::string render_table(const AnalysisReport& r, std::string_view title) {
  std::ostringstream out;
  if (!title.empty()) out << title << '\n';
  auto row = [&](std::string_view key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = key.size(); i < 14; ++i) out << ' ';
    out << value << '\n';
  };
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };

  row("vertices", std::to_string(r.n_vertices));
  row("edges", std::to_string(r.n_edges));
  row("shape", r.shape.to_string());
  row("components", std::to_string(r.components.size()));
  row("connected", yes(r.is_connected));
  row("diameter", extended_text(r.diameter));
  row("girth", extended_text(r.girth));
  row("alpha", std::to_string(r.alpha));
  row("omega", std::to_string(r.omega));
  row("chi", std::to_string(r.chi));
  row("bipartite", yes(r.is_bipartite));
  row("unicyclic", yes(r.is_unicyclic));
  if (r.planarity.is_planar()) {
    row("planar", "yes (" + std::to_string(r.planarity.embedding().faces) + " faces)");
  } else {
    const auto& w = r.planarity.witness();
    row("planar", std::string("no (") + (w.kind == KuratowskiKind::K5 ? "K5" : "K3,3") +
                      " subdivision, " + std::to_string(w.edges.size()) + " edges)");
  }
  std::string contains;
  for (Pattern p : kAllPatterns) {
    if (!contains.empty()) contains += ' ';
    contains += std::string(pattern_name(p)) + (r.contains_pattern(p) ? "+" : "-");
  }
  row("contains", contains);
  return out.str();
}

}  // namespace cpg
