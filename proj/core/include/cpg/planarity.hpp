#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cpg/graph.hpp"

namespace cpg {

/// Cyclic neighbor order around every vertex.
struct PlanarEmbedding {
  std::vector<std::vector<Vertex>> rotation;
  std::size_t faces = 0;  // outer face counted once for the whole graph
};

enum class KuratowskiKind { K5, K33 };

/// Edge set of a subdivision of K5 or K3,3 inside the graph.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K33;
  std::vector<Edge> edges;
  std::vector<Vertex> branch_vertices;
};

struct PlanarityCertificate {
  std::variant<PlanarEmbedding, KuratowskiWitness> value;

  bool is_planar() const noexcept { return std::holds_alternative<PlanarEmbedding>(value); }
  const PlanarEmbedding& embedding() const { return std::get<PlanarEmbedding>(value); }
  const KuratowskiWitness& witness() const { return std::get<KuratowskiWitness>(value); }
};

/// Runs a Boyer-Myrvold test and returns a certificate that has already
/// passed verify_certificate(); throws cpg::Error otherwise.
PlanarityCertificate planarity(const Graph& g);

bool is_planar(const Graph& g);

/// Number of faces traced by a rotation system, with the outer face shared
/// across components (isolated vertices contribute no extra face).
/// Returns 0 if `rotation` is not a permutation of each neighborhood.
std::size_t count_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

/// Euler check V - E + F = 1 + C for the embedding.
bool verify_embedding(const Graph& g, const PlanarEmbedding& embedding);

/// Checks that the witness edges are graph edges forming a subdivision of
/// K5 (five branch vertices of degree 4) or K3,3 (six of degree 3), with
/// every other witness vertex of degree 2 and the suppressed paths joining
/// the branch vertices exactly as the target graph requires.
bool verify_witness(const Graph& g, const KuratowskiWitness& witness);

bool verify_certificate(const Graph& g, const PlanarityCertificate& cert);

}  // namespace cpg
