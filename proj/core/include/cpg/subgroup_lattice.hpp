#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpg/group.hpp"
#include "cpg/number_theory.hpp"

namespace cpg {

struct Subgroup {
  std::vector<Element> elements;  // sorted ascending
  std::size_t parent_order = 0;

  std::size_t order() const noexcept { return elements.size(); }
  bool is_trivial() const noexcept { return elements.size() == 1; }
  bool is_whole() const noexcept { return elements.size() == parent_order; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Total order used for deterministic output: by order, then element ids.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

struct SubgroupList {
  std::vector<Subgroup> all;  // sorted by subgroup_less
  std::map<std::size_t, std::size_t> counts_by_order;
};

/// Every subgroup of g: cyclic subgroups first, then joins with cyclic
/// subgroups until no new subgroup appears. Throws CapExceededError when
/// |g| > max_order.
SubgroupList all_subgroups(const FiniteGroup& g, std::size_t max_order = kDefaultMaxOrder);

/// Subgroups H with 1 < |H| < |G|, in lattice order.
std::vector<Subgroup> proper_nontrivial(const SubgroupList& lattice);

/// True iff `elements` is non-empty and closed under multiplication and
/// inverses (so contains the identity).
bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements);

/// The subgroup generated by `generators`.
std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);

/// pi(n): the distinct primes dividing n.
inline std::vector<std::uint64_t> pi(std::uint64_t n) { return prime_divisors(n); }

/// {"<order>": count, ...} with orders ascending.
nlohmann::json counts_to_json(const SubgroupList& lattice);

}  // namespace cpg
