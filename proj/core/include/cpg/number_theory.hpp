#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cpg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool coprime(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Distinct prime divisors of n, ascending (the set pi(n)).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// The first `count` primes: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Smallest k >= 1 with a^k = 1 (mod m); 0 when gcd(a, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace cpg
