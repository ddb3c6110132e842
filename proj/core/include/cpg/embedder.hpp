#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "cpg/graph.hpp"

namespace cpg {

using BigInt = boost::multiprecision::cpp_int;

/// Default vertex cap for maximal independent set enumeration.
inline constexpr std::size_t kDefaultMisCap = 20;

/// Realization of a graph as an induced subgraph of the coprime graph of
/// Z_modulus: vertex v becomes the subgroup of order labels[v].
struct EmbeddingCertificate {
  std::vector<std::vector<Vertex>> mis;  // lexicographic
  std::vector<std::uint64_t> primes;     // primes[i] is assigned to mis[i]
  std::vector<unsigned> exponents;       // common exponent of v's support primes
  std::vector<BigInt> labels;
  BigInt modulus;
};

/// All maximal independent sets (Bron-Kerbosch with pivoting on the
/// complement), each ascending, sorted lexicographically. Throws
/// CapExceededError above `cap` vertices.
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g,
                                                          std::size_t cap = kDefaultMisCap);

/// Assigns the i-th prime to the i-th maximal independent set and labels v
/// with the product of the primes of the sets containing v, all raised to
/// r + 1 where r is v's rank among vertices with the same support. The
/// modulus is the lcm of the labels, times the smallest assigned prime when
/// a label would otherwise equal it. The result is verified before return.
EmbeddingCertificate embed(const Graph& g, std::size_t cap = kDefaultMisCap);

/// True iff every label is a proper nontrivial divisor of the modulus, the
/// labels are pairwise distinct, and u ~ v exactly when gcd(label u, label v) = 1.
bool verify_embedding(const Graph& g, const EmbeddingCertificate& cert);

/// {"labels": {"v": n}, "modulus": n, "mis": [[...]], "primes": [...],
///  "exponents": [...]}. Integers of any size are written as JSON numbers.
std::string certificate_to_json(const EmbeddingCertificate& cert, int indent = 2);

}  // namespace cpg
