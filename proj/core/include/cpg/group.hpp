#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cpg {

using Element = std::uint32_t;

/// Default bound on group orders handled by closures and lattice enumeration.
inline constexpr std::size_t kDefaultMaxOrder = 2048;

/// A finite group as a dense multiplication table over element ids
/// 0..order-1. Immutable after construction.
///
/// The constructor rejects tables that are not Latin squares or whose
/// identity row/column is not the identity permutation; associativity is
/// O(n^3) and only checked by check_group_axioms().
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              Element identity);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }
  FiniteGroup with_name(std::string name) && {
    name_ = std::move(name);
    return std::move(*this);
  }

  Element multiply(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Element> table() const noexcept { return table_; }

  bool is_abelian() const;
  std::vector<Element> center() const;

  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_census() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
};

/// Throws cpg::Error naming the first violated axiom. Associativity is
/// checked exhaustively when `associativity` is set.
void check_group_axioms(const FiniteGroup& g, bool associativity);

/// Z_n with table[a][b] = (a + b) mod n.
FiniteGroup make_cyclic(std::size_t n);

/// Dihedral group of order 2n: r^n = s^2 = 1, s r s = r^-1. Element
/// e*n + j is r^j s^e.
FiniteGroup make_dihedral(std::size_t n);

/// Z_m x| Z_k on pairs (a, b) with (a1,b1)(a2,b2) = (a1 + a2 i^b1, b1 + b2).
/// Requires i^k = 1 (mod m) and gcd(i, m) = 1. Pair (a, b) has id a*k + b,
/// the same ordering as make_direct_product(Z_m, Z_k).
FiniteGroup make_semidirect_cyclic(std::size_t m, std::size_t k, std::size_t i);

/// Componentwise product; pair (a, b) has id a*|h| + b.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A permutation of 0..degree-1 in image form: p[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

/// Builds a permutation from disjoint cycles; points not mentioned are fixed.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles);

/// Closure of `gens` under composition, breadth-first from the identity so
/// element 0 is the identity and ids follow discovery order. The product
/// a*b applies b first, then a.
FiniteGroup make_permutation_group(std::size_t degree, std::span<const Permutation> gens,
                                   std::size_t max_order = kDefaultMaxOrder,
                                   std::string name = {});

}  // namespace cpg
