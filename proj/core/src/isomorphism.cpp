#include "cpg/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cpg/error.hpp"

namespace cpg {

namespace {

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.vertex_count()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return a_.degree(x) > a_.degree(y); });
    map_.assign(n_, n_);
    used_.assign(n_, false);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || b_.degree(v) != a_.degree(u)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order_[k];
        ok = a_.adjacent(u, w) == b_.adjacent(v, map_[w]);
      }
      if (!ok) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      used_[v] = false;
    }
    map_[u] = n_;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool small_graph_isomorphic(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() > cap) {
    throw CapExceededError("graph isomorphism helper is limited to " + std::to_string(cap) + " vertices");
  }
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return Matcher(a, b).run();
}

}  // namespace cpg
