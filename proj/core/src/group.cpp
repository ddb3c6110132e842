#include "cpg/group.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "cpg/error.hpp"
#include "cpg/number_theory.hpp"

namespace cpg {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
                         Element identity)
    : name_(std::move(name)), order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0) throw DomainError("group order must be positive");
  if (table_.size() != order_ * order_) throw DomainError("multiplication table has wrong size");
  if (identity_ >= order_) throw DomainError("identity id out of range");

  // Latin square: every row and column is a permutation.
  std::vector<std::uint32_t> seen(order_, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < order_; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < order_; ++b) {
      const Element c = table_[a * order_ + b];
      if (c >= order_ || seen[c] == stamp) {
        throw DomainError(name_ + ": row " + std::to_string(a) + " is not a permutation");
      }
      seen[c] = stamp;
    }
  }
  for (std::size_t b = 0; b < order_; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < order_; ++a) {
      const Element c = table_[a * order_ + b];
      if (seen[c] == stamp) {
        throw DomainError(name_ + ": column " + std::to_string(b) + " is not a permutation");
      }
      seen[c] = stamp;
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (multiply(identity_, static_cast<Element>(a)) != a ||
        multiply(static_cast<Element>(a), identity_) != a) {
      throw DomainError(name_ + ": identity row/column is not the identity permutation");
    }
  }

  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == identity_) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }

  element_order_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != identity_) {
      x = multiply(x, static_cast<Element>(a));
      ++k;
      if (k > order_) throw DomainError(name_ + ": element of unbounded order");
    }
    element_order_[a] = k;
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < order_ && central; ++b) {
      central = table_[a * order_ + b] == table_[b * order_ + a];
    }
    if (central) out.push_back(static_cast<Element>(a));
  }
  return out;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_census() const {
  std::map<std::size_t, std::size_t> census;
  for (auto k : element_order_) ++census[k];
  return census;
}

void check_group_axioms(const FiniteGroup& g, bool associativity) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (g.multiply(x, g.inverse(x)) != g.identity() || g.multiply(g.inverse(x), x) != g.identity()) {
      throw Error(g.name() + ": element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
  if (!associativity) return;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = g.multiply(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c) {
        const auto z = static_cast<Element>(c);
        if (g.multiply(ab, z) != g.multiply(static_cast<Element>(a), g.multiply(static_cast<Element>(b), z))) {
          throw Error(g.name() + ": associativity fails at (" + std::to_string(a) + ", " +
                      std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw DomainError("Z_n requires n >= 1");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup("Z" + std::to_string(n), n, std::move(table), 0);
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n < 2) throw DomainError("dihedral group requires n >= 2");
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  // r^a s^x * r^b s^y = r^(a + (-1)^x b) s^(x + y)
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t y = 0; y < 2; ++y) {
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t rot = x == 0 ? (a + b) % n : (a + n - b) % n;
          const std::size_t refl = (x + y) % 2;
          table[(x * n + a) * order + (y * n + b)] = static_cast<Element>(refl * n + rot);
        }
      }
    }
  }
  return FiniteGroup("D" + std::to_string(order), order, std::move(table), 0);
}

FiniteGroup make_semidirect_cyclic(std::size_t m, std::size_t k, std::size_t i) {
  if (m < 2 || k < 2) throw DomainError("semidirect product requires m, k >= 2");
  if (std::gcd(i, m) != 1) {
    throw DomainError("semidirect product requires gcd(i, m) = 1");
  }
  if (pow_mod(i, k, m) != 1 % m) {
    throw DomainError("action a -> a^" + std::to_string(i) + " is not well defined: i^k != 1 mod m");
  }
  const std::size_t order = m * k;
  std::vector<std::size_t> twist(k);
  twist[0] = 1 % m;
  for (std::size_t b = 1; b < k; ++b) twist[b] = twist[b - 1] * (i % m) % m;

  std::vector<Element> table(order * order);
  for (std::size_t a1 = 0; a1 < m; ++a1) {
    for (std::size_t b1 = 0; b1 < k; ++b1) {
      for (std::size_t a2 = 0; a2 < m; ++a2) {
        for (std::size_t b2 = 0; b2 < k; ++b2) {
          const std::size_t a = (a1 + a2 * twist[b1]) % m;
          const std::size_t b = (b1 + b2) % k;
          table[(a1 * k + b1) * order + (a2 * k + b2)] = static_cast<Element>(a * k + b);
        }
      }
    }
  }
  return FiniteGroup("Z" + std::to_string(m) + ":Z" + std::to_string(k) + "[" + std::to_string(i) + "]",
                     order, std::move(table), 0);
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t order = ng * nh;
  std::vector<Element> table(order * order);
  for (std::size_t a1 = 0; a1 < ng; ++a1) {
    for (std::size_t b1 = 0; b1 < nh; ++b1) {
      const std::size_t row = (a1 * nh + b1) * order;
      for (std::size_t a2 = 0; a2 < ng; ++a2) {
        const std::size_t a = g.multiply(static_cast<Element>(a1), static_cast<Element>(a2));
        for (std::size_t b2 = 0; b2 < nh; ++b2) {
          const std::size_t b = h.multiply(static_cast<Element>(b1), static_cast<Element>(b2));
          table[row + a2 * nh + b2] = static_cast<Element>(a * nh + b);
        }
      }
    }
  }
  const Element identity = static_cast<Element>(g.identity() * nh + h.identity());
  return FiniteGroup(g.name() + "x" + h.name(), order, std::move(table), identity);
}

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const auto from = cycle[j];
      const auto to = cycle[(j + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw DomainError("cycle point " + std::to_string(std::max(from, to)) +
                          " out of range for degree " + std::to_string(degree));
      }
      if (moved[from]) throw DomainError("cycles are not disjoint at point " + std::to_string(from));
      moved[from] = true;
      p[from] = to;
    }
  }
  return p;
}

FiniteGroup make_permutation_group(std::size_t degree, std::span<const Permutation> gens,
                                   std::size_t max_order, std::string name) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw DomainError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw DomainError("generator is not a permutation");
      hit[x] = true;
    }
  }

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Permutation> elements = {identity};
  std::unordered_map<Permutation, Element, PermutationHash> index = {{identity, 0}};

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };

  // Breadth-first saturation: every element is a word g_1 ... g_k applied
  // to the identity; multiplying on the left by generators reaches them all.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(g, elements[head]);
      if (index.contains(next)) continue;
      if (elements.size() >= max_order) {
        throw CapExceededError("permutation group closure exceeds " + std::to_string(max_order) +
                               " elements");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  if (name.empty()) name = "Perm" + std::to_string(degree) + "[" + std::to_string(n) + "]";
  return FiniteGroup(std::move(name), n, std::move(table), 0);
}

}  // namespace cpg
