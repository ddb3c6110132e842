#include "cpg/exact_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "cpg/error.hpp"

namespace cpg {

namespace {

using Bits = boost::dynamic_bitset<>;

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw CapExceededError(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                           " vertices exceed the exact-solver cap of " + std::to_string(cap));
  }
}

/// Branch and bound in the style of Tomita's MCQ: candidates are greedily
/// colored and a branch is cut when |clique| + color cannot beat the best.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.vertex_count()) {
    // Relabel by non-increasing degree so the coloring bound bites early.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[order_[i]] = i;
    adj_.assign(n_, Bits(n_));
    for (auto [u, v] : g.edges()) {
      adj_[position[u]].set(position[v]);
      adj_[position[v]].set(position[u]);
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Bits all(n_);
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void color_sort(const Bits& candidates, std::vector<std::size_t>& vertices,
                  std::vector<std::size_t>& colors) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bits available = uncolored;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        uncolored.reset(v);
        available &= ~adj_[v];
        vertices.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bits candidates) {
    std::vector<std::size_t> vertices, colors;
    color_sort(candidates, vertices, colors);
    for (std::size_t k = vertices.size(); k-- > 0;) {
      if (current.size() + colors[k] <= best_.size()) return;
      const std::size_t v = vertices[k];
      current.push_back(v);
      Bits next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

/// DSATUR-ordered exact coloring.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t cap) : g_(g), n_(g.vertex_count()), color_(n_, kUncolored) {
    clique_ = maximum_clique(g, cap);
  }

  std::vector<std::size_t> run() {
    if (n_ == 0) return {};
    best_ = greedy_dsatur();
    best_count_ = count_colors(best_);
    if (best_count_ == clique_.size()) return best_;
    // Clique vertices get distinct colors up front; this only removes
    // color permutations from the search.
    for (std::size_t i = 0; i < clique_.size(); ++i) color_[clique_[i]] = i;
    search(clique_.size(), clique_.size());
    return best_;
  }

 private:
  static std::size_t count_colors(const std::vector<std::size_t>& colors) {
    std::size_t k = 0;
    for (auto c : colors) k = std::max(k, c + 1);
    return k;
  }

  std::size_t saturation(Vertex v, std::vector<char>& scratch) const {
    std::fill(scratch.begin(), scratch.end(), 0);
    std::size_t s = 0;
    for (Vertex w : g_.neighbors(v)) {
      const auto c = color_[w];
      if (c != kUncolored && !scratch[c]) {
        scratch[c] = 1;
        ++s;
      }
    }
    return s;
  }

  Vertex pick(std::vector<char>& scratch) const {
    Vertex chosen = n_;
    std::size_t best_sat = 0, best_deg = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      const std::size_t sat = saturation(v, scratch);
      const std::size_t deg = g_.degree(v);
      if (chosen == n_ || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        chosen = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return chosen;
  }

  bool color_free(Vertex v, std::size_t c) const {
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] == c) return false;
    }
    return true;
  }

  std::vector<std::size_t> greedy_dsatur() {
    std::vector<char> scratch(n_ + 1);
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const Vertex v = pick(scratch);
      std::size_t c = 0;
      while (!color_free(v, c)) ++c;
      color_[v] = c;
      used = std::max(used, c + 1);
    }
    std::vector<std::size_t> out = color_;
    std::fill(color_.begin(), color_.end(), kUncolored);
    return out;
  }

  void search(std::size_t colored, std::size_t used) {
    if (used >= best_count_) return;
    if (colored == n_) {
      best_ = color_;
      best_count_ = used;
      return;
    }
    std::vector<char> scratch(n_ + 1);
    const Vertex v = pick(scratch);
    for (std::size_t c = 0; c < used && best_count_ > clique_.size(); ++c) {
      if (!color_free(v, c)) continue;
      color_[v] = c;
      search(colored + 1, used);
      color_[v] = kUncolored;
    }
    if (used + 1 < best_count_ && best_count_ > clique_.size()) {
      color_[v] = used;
      search(colored + 1, used + 1);
      color_[v] = kUncolored;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<Vertex> clique_;
  std::vector<std::size_t> best_;
  std::size_t best_count_ = 0;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "maximum clique");
  return CliqueSearch(g).run();
}

std::size_t clique_number(const Graph& g, std::size_t cap) { return maximum_clique(g, cap).size(); }

std::vector<Vertex> maximum_independent_set(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "maximum independent set");
  return CliqueSearch(g.complement()).run();
}

std::size_t independence_number(const Graph& g, std::size_t cap) {
  return maximum_independent_set(g, cap).size();
}

std::vector<std::size_t> optimal_coloring(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "chromatic number");
  return ColoringSearch(g, cap).run();
}

std::size_t chromatic_number(const Graph& g, std::size_t cap) {
  const auto colors = optimal_coloring(g, cap);
  std::size_t k = 0;
  for (auto c : colors) k = std::max(k, c + 1);
  return k;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

}  // namespace cpg
