#include "cpg/subgroup_lattice.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "cpg/error.hpp"

namespace cpg {

namespace {

using Mask = boost::dynamic_bitset<>;

struct LatticeNode {
  Mask mask;
  std::vector<Element> generators;
};

std::vector<Element> mask_elements(const Mask& m) {
  std::vector<Element> out;
  out.reserve(m.count());
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) out.push_back(static_cast<Element>(i));
  return out;
}

Mask closure_mask(const FiniteGroup& g, std::span<const Element> generators) {
  Mask mask(g.order());
  std::vector<Element> queue = {g.identity()};
  mask.set(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element s : generators) {
      const Element y = g.multiply(x, s);
      if (!mask.test(y)) {
        mask.set(y);
        queue.push_back(y);
      }
    }
  }
  return mask;
}

}  // namespace

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  return mask_elements(closure_mask(g, generators));
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  if (elements.empty()) return false;
  Mask mask(g.order());
  for (Element x : elements) {
    if (x >= g.order()) return false;
    mask.set(x);
  }
  if (!mask.test(g.identity())) return false;
  for (Element x : elements) {
    if (!mask.test(g.inverse(x))) return false;
    for (Element y : elements) {
      if (!mask.test(g.multiply(x, y))) return false;
    }
  }
  return true;
}

SubgroupList all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw CapExceededError("subgroup enumeration: order " + std::to_string(n) + " exceeds bound " +
                           std::to_string(max_order));
  }

  std::vector<LatticeNode> nodes;
  std::map<Mask, std::size_t> seen;
  auto insert = [&](Mask mask, std::vector<Element> generators) {
    if (seen.contains(mask)) return false;
    seen.emplace(mask, nodes.size());
    nodes.push_back({std::move(mask), std::move(generators)});
    return true;
  };

  insert(closure_mask(g, {}), {});

  // Cyclic subgroups, one generator each.
  std::vector<std::size_t> cyclic;
  for (Element a = 0; a < n; ++a) {
    const Element gens[] = {a};
    if (insert(closure_mask(g, gens), {a})) cyclic.push_back(nodes.size() - 1);
  }

  // Join every known subgroup with every cyclic subgroup until no new
  // subgroup appears; every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t c : cyclic) {
      if (nodes[c].mask.is_subset_of(nodes[i].mask)) continue;
      std::vector<Element> gens = nodes[i].generators;
      gens.push_back(nodes[c].generators.front());
      Mask joined = closure_mask(g, gens);
      insert(std::move(joined), std::move(gens));
    }
  }

  SubgroupList out;
  out.all.reserve(nodes.size());
  for (const auto& node : nodes) {
    Subgroup h{mask_elements(node.mask), n};
    if (n % h.order() != 0) throw Error("subgroup order does not divide the group order");
    out.all.push_back(std::move(h));
  }
  std::sort(out.all.begin(), out.all.end(), subgroup_less);
  for (const auto& h : out.all) ++out.counts_by_order[h.order()];
  return out;
}

std::vector<Subgroup> proper_nontrivial(const SubgroupList& lattice) {
  std::vector<Subgroup> out;
  for (const auto& h : lattice.all) {
    if (!h.is_trivial() && !h.is_whole()) out.push_back(h);
  }
  return out;
}

nlohmann::json counts_to_json(const SubgroupList& lattice) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [order, count] : lattice.counts_by_order) j[std::to_string(order)] = count;
  return j;
}

}  // namespace cpg
