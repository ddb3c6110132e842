#include "cpg/embedder.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <string>

#include "cpg/error.hpp"
#include "cpg/number_theory.hpp"

namespace cpg {

namespace {

using Mask = std::uint32_t;

// Bron-Kerbosch with pivoting over "non-adjacency" (cliques of the
// complement). n <= 20, so vertex sets fit in a 32-bit mask.
class MisSearch {
 public:
  explicit MisSearch(const Graph& g) : n_(g.vertex_count()), free_(n_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (u != v && !g.adjacent(u, v)) free_[u] |= Mask{1} << v;
      }
    }
  }

  std::vector<Mask> run() {
    const Mask all = n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    expand(0, all, 0);
    return found_;
  }

 private:
  void expand(Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      found_.push_back(r);
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    Vertex pivot = 0;
    int best = -1;
    for (Mask px = p | x; px != 0; px &= px - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(px));
      const int c = std::popcount(p & free_[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~free_[pivot]; cand != 0; cand &= cand - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(cand));
      const Mask bit = Mask{1} << v;
      expand(r | bit, p & free_[v], x & free_[v]);
      p &= ~bit;
      x |= bit;
    }
  }

  std::size_t n_;
  std::vector<Mask> free_;
  std::vector<Mask> found_;
};

}  // namespace

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g, std::size_t cap) {
  const std::size_t limit = std::min<std::size_t>(cap, 32);
  if (g.vertex_count() > limit) {
    throw CapExceededError("maximal independent set enumeration is limited to " +
                           std::to_string(limit) + " vertices, graph has " +
                           std::to_string(g.vertex_count()));
  }
  std::vector<std::vector<Vertex>> sets;
  for (Mask m : MisSearch(g).run()) {
    std::vector<Vertex> s;
    for (; m != 0; m &= m - 1) s.push_back(static_cast<Vertex>(std::countr_zero(m)));
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

EmbeddingCertificate embed(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("cannot embed a graph with no vertices");

  EmbeddingCertificate cert;
  cert.mis = maximal_independent_sets(g, cap);
  cert.primes = first_primes(cert.mis.size());

  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < cert.mis.size(); ++i) {
    for (Vertex v : cert.mis[i]) support[v].push_back(i);
  }

  std::map<std::vector<std::size_t>, unsigned> seen;
  cert.exponents.resize(n);
  cert.labels.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const unsigned e = ++seen[support[v]];
    cert.exponents[v] = e;
    BigInt label = 1;
    for (std::size_t i : support[v]) label *= boost::multiprecision::pow(BigInt(cert.primes[i]), e);
    cert.labels[v] = label;
  }

  BigInt m = 1;
  for (const auto& label : cert.labels) m = boost::multiprecision::lcm(m, label);
  if (std::find(cert.labels.begin(), cert.labels.end(), m) != cert.labels.end()) {
    m *= cert.primes.front();
  }
  cert.modulus = m;

  if (!verify_embedding(g, cert)) throw Error("embedding certificate failed self-verification");
  return cert;
}

bool verify_embedding(const Graph& g, const EmbeddingCertificate& cert) {
  const std::size_t n = g.vertex_count();
  if (cert.labels.size() != n) return false;
  for (const auto& label : cert.labels) {
    if (label <= 1 || label >= cert.modulus || cert.modulus % label != 0) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (cert.labels[u] == cert.labels[v]) return false;
      const bool coprime_labels = boost::multiprecision::gcd(cert.labels[u], cert.labels[v]) == 1;
      if (coprime_labels != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::string certificate_to_json(const EmbeddingCertificate& cert, int indent) {
  const bool pretty = indent >= 0;
  const std::string pad = pretty ? std::string(static_cast<std::size_t>(indent), ' ') : "";
  const std::string nl = pretty ? "\n" : "";
  const std::string colon = pretty ? ": " : ":";

  std::ostringstream out;
  out << '{' << nl << pad << "\"labels\"" << colon << '{' << nl;
  for (std::size_t v = 0; v < cert.labels.size(); ++v) {
    out << pad << pad << '"' << v << '"' << colon << cert.labels[v];
    out << (v + 1 < cert.labels.size() ? "," : "") << nl;
  }
  out << pad << "}," << nl;
  out << pad << "\"modulus\"" << colon << cert.modulus << ',' << nl;
  out << pad << "\"mis\"" << colon << nlohmann::json(cert.mis).dump() << ',' << nl;
  out << pad << "\"primes\"" << colon << nlohmann::json(cert.primes).dump() << ',' << nl;
  out << pad << "\"exponents\"" << colon << nlohmann::json(cert.exponents).dump() << nl;
  out << '}';
  return out.str();
}

}  // namespace cpg
