#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpg/graph.hpp"
#include "cpg/group.hpp"
#include "cpg/subgroup_lattice.hpp"

namespace cpg {

struct CoprimeVertex {
  std::uint64_t order;
  /// Index into the lattice's proper_nontrivial() list; empty for the
  /// divisor-based cyclic builder.
  std::optional<std::size_t> subgroup;
};

/// The coprime graph of subgroups: one vertex per subgroup H with
/// 1 < |H| < |G|, adjacent iff gcd(|H|, |K|) = 1.
struct CoprimeGraph {
  std::string source;
  std::uint64_t group_order = 0;
  std::vector<CoprimeVertex> vertices;
  Graph graph;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
};

/// Throws UndefinedGraphError when |g| is 1 or prime.
CoprimeGraph build_coprime_graph(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder);

/// Same, from an already enumerated lattice of a group of order `group_order`.
CoprimeGraph build_coprime_graph(const SubgroupList& lattice, std::string source);

/// Divisor fast path for Z_n: vertices are the divisors 1 < d < n,
/// ascending. No group table is built.
CoprimeGraph build_cyclic_coprime_graph(std::uint64_t n);

/// Closed-form degree of the order-h vertex in the coprime graph of Z_n:
/// the product of (alpha_j + 1) over primes p_j^alpha_j || n with p_j not
/// dividing h, minus one. Throws DomainError unless 1 < h < n and h | n.
std::uint64_t degree_formula(std::uint64_t n, std::uint64_t h_order);

/// Per-vertex display labels: the order, with "_1", "_2", ... suffixes
/// when several subgroups share an order.
std::vector<std::string> vertex_labels(const CoprimeGraph& g);

/// {"source", "group_order", "vertices": [{"id", "order"}], "edges": [[u, v]]}
nlohmann::json to_json(const CoprimeGraph& g);

}  // namespace cpg
