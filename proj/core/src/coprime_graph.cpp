#include "cpg/coprime_graph.hpp"

#include <map>
#include <string>

#include "cpg/error.hpp"
#include "cpg/number_theory.hpp"

namespace cpg {

namespace {

void require_defined(std::uint64_t order, const std::string& source) {
  if (order == 1 || is_prime(order)) {
    throw UndefinedGraphError(source + ": the coprime graph of subgroups is undefined for groups of order " +
                              std::to_string(order) + " (no proper nontrivial subgroups)");
  }
}

Graph graph_from_orders(const std::vector<CoprimeVertex>& vertices) {
  Graph g(vertices.size());
  for (Vertex u = 0; u < vertices.size(); ++u) {
    for (Vertex v = u + 1; v < vertices.size(); ++v) {
      if (coprime(vertices[u].order, vertices[v].order)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

CoprimeGraph build_coprime_graph(const FiniteGroup& g, std::size_t max_order) {
  require_defined(g.order(), g.name());
  return build_coprime_graph(all_subgroups(g, max_order), g.name());
}

CoprimeGraph build_coprime_graph(const SubgroupList& lattice, std::string source) {
  if (lattice.all.empty()) throw DomainError("empty subgroup lattice");
  const std::uint64_t order = lattice.all.front().parent_order;
  require_defined(order, source);

  CoprimeGraph out;
  out.source = std::move(source);
  out.group_order = order;
  std::size_t index = 0;
  for (const auto& h : lattice.all) {
    if (h.is_trivial() || h.is_whole()) continue;
    out.vertices.push_back({h.order(), index++});
  }
  out.graph = graph_from_orders(out.vertices);
  return out;
}

CoprimeGraph build_cyclic_coprime_graph(std::uint64_t n) {
  if (n <= 1 || is_prime(n)) require_defined(n, "Z:" + std::to_string(n));
  CoprimeGraph out;
  out.source = "Z:" + std::to_string(n);
  out.group_order = n;
  for (auto d : divisors(n)) {
    if (d != 1 && d != n) out.vertices.push_back({d, std::nullopt});
  }
  out.graph = graph_from_orders(out.vertices);
  return out;
}

std::uint64_t degree_formula(std::uint64_t n, std::uint64_t h_order) {
  if (h_order <= 1 || h_order >= n || n % h_order != 0) {
    throw DomainError("degree formula requires a proper nontrivial divisor: h = " + std::to_string(h_order) +
                      ", n = " + std::to_string(n));
  }
  std::uint64_t product = 1;
  for (const auto& [p, alpha] : factorize(n)) {
    if (h_order % p != 0) product *= alpha + 1;
  }
  return product - 1;
}

std::vector<std::string> vertex_labels(const CoprimeGraph& g) {
  std::map<std::uint64_t, std::size_t> total, seen;
  for (const auto& v : g.vertices) ++total[v.order];
  std::vector<std::string> labels;
  labels.reserve(g.vertices.size());
  for (const auto& v : g.vertices) {
    std::string label = std::to_string(v.order);
    if (total[v.order] > 1) label += "_" + std::to_string(++seen[v.order]);
    labels.push_back(std::move(label));
  }
  return labels;
}

nlohmann::json to_json(const CoprimeGraph& g) {
  nlohmann::json j;
  j["source"] = g.source;
  j["group_order"] = g.group_order;
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    vertices.push_back({{"id", i}, {"order", g.vertices[i].order}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
  return j;
}

}  // namespace cpg
