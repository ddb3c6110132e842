#pragma once

#include <cstddef>
#include <string>

#include "cpg/graph.hpp"

namespace cpg {

/// Subgraph (not induced) containment of K_{a,b}, a <= b after swapping.
/// Supports a in {1, 2, 3}; throws DomainError otherwise.
bool contains_complete_bipartite(const Graph& g, std::size_t a, std::size_t b);

/// Exactly one cycle: E - V + C == 1. Connectivity is not required.
bool is_unicyclic(const Graph& g);

enum class ShapeKind { Null, Complete, Star, Path, Cycle, CompleteBipartite, Tree, Unicyclic, Other };

/// Classification of the non-isolated core, plus the number of isolated
/// vertices. Precedence: Null > Complete > Star > Path > CompleteBipartite >
/// Cycle > Tree > Unicyclic > Other. The only overlap between the two middle
/// kinds is C4 = K2,2, reported as CompleteBipartite(2,2).
///
/// Parameters: Complete(n) vertices; Star(n) leaves, n >= 3 (K_{1,2} is
/// reported as Path(2)); Path(n) and Cycle(n) edges; CompleteBipartite(a,b)
/// part sizes with 2 <= a <= b.
struct ShapeDescriptor {
  ShapeKind kind = ShapeKind::Null;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t isolated = 0;

  /// e.g. "Star(3)", "CompleteBipartite(4,4)", "Null"
  std::string core_string() const;
  /// core_string() plus " + K1" / " + 3K1" for isolated vertices.
  std::string to_string() const;

  friend bool operator==(const ShapeDescriptor&, const ShapeDescriptor&) = default;
};

ShapeDescriptor classify_shape(const Graph& g);

const char* shape_kind_name(ShapeKind kind);

/// Precedence-independent predicates over the whole graph (isolated
/// vertices included). All are false for graphs without edges except
/// `null`, so a single vertex counts as null rather than complete or a tree.
struct ShapePredicates {
  bool null = false;
  bool complete = false;
  bool star = false;
  bool path = false;
  bool cycle = false;
  bool complete_bipartite = false;
  bool tree = false;
  bool unicyclic = false;
};

ShapePredicates shape_predicates(const Graph& g);

}  // namespace cpg
