#include "cpg/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "cpg/error.hpp"
#include "cpg/graph_metrics.hpp"

namespace cpg {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, inserted] = boost::add_edge(u, v, bg);
    if (inserted) boost::put(edge_index, e, next++);
  }
  return bg;
}

bool boost_planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

Graph from_edges(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
  Graph h(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != skip) h.add_edge(edges[i].first, edges[i].second);
  }
  return h;
}

// Boost's Kuratowski subgraph may carry extra edges. Deleting every edge
// whose removal keeps the subgraph nonplanar leaves a minimal nonplanar
// subgraph, which is exactly a subdivision of K5 or K3,3.
std::vector<Edge> minimize_nonplanar(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    if (!boost_planar(from_edges(n, edges, i))) edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return edges;
}

}  // namespace

std::size_t count_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  const std::size_t n = g.vertex_count();
  if (rotation.size() != n) return 0;
  // position[v][w] = index of w in rotation[v]
  std::vector<std::map<Vertex, std::size_t>> position(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return 0;
    for (std::size_t i = 0; i < rotation[v].size(); ++i) position[v][rotation[v][i]] = i;
  }

  // Trace faces: arriving at v along (u, v), leave along (v, w) where w
  // follows u in the rotation at v.
  std::set<std::pair<Vertex, Vertex>> used;
  std::size_t traced = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : rotation[u]) {
      if (used.contains({u, v})) continue;
      ++traced;
      Vertex a = u, b = v;
      while (!used.contains({a, b})) {
        used.insert({a, b});
        const auto& rot = rotation[b];
        const Vertex c = rot[(position[b].at(a) + 1) % rot.size()];
        a = b;
        b = c;
      }
    }
  }
  std::size_t isolated = 0;
  for (Vertex v = 0; v < n; ++v) isolated += g.degree(v) == 0;
  const std::size_t components = connected_components(g).size();
  // One shared outer face for the whole drawing.
  return traced + isolated + 1 - components;
}

bool verify_embedding(const Graph& g, const PlanarEmbedding& embedding) {
  const std::size_t faces = count_faces(g, embedding.rotation);
  if (faces == 0 || faces != embedding.faces) return false;
  const auto v = static_cast<long long>(g.vertex_count());
  const auto e = static_cast<long long>(g.edge_count());
  const auto c = static_cast<long long>(connected_components(g).size());
  return v - e + static_cast<long long>(faces) == 1 + c;
}

bool verify_witness(const Graph& g, const KuratowskiWitness& witness) {
  std::map<Vertex, std::vector<Vertex>> sub;
  std::set<Edge> edge_set;
  for (auto [u, v] : witness.edges) {
    if (u == v || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) return false;
    const Edge key = std::minmax(u, v);
    if (!edge_set.insert(key).second) return false;
    sub[u].push_back(v);
    sub[v].push_back(u);
  }

  std::vector<Vertex> branch;
  for (const auto& [v, nb] : sub) {
    if (nb.size() >= 3) {
      branch.push_back(v);
    } else if (nb.size() != 2) {
      return false;
    }
  }
  const bool k5 = witness.kind == KuratowskiKind::K5;
  const std::size_t want_branch = k5 ? 5 : 6;
  const std::size_t want_degree = k5 ? 4 : 3;
  if (branch.size() != want_branch) return false;
  for (Vertex b : branch) {
    if (sub[b].size() != want_degree) return false;
  }
  if (!witness.branch_vertices.empty()) {
    std::vector<Vertex> claimed = witness.branch_vertices;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != branch) return false;
  }

  // Suppress degree-2 vertices: walk from each branch vertex along each
  // incident edge to the next branch vertex.
  std::set<Edge> walked;
  std::map<Edge, int> paths;
  const std::set<Vertex> is_branch(branch.begin(), branch.end());
  for (Vertex b : branch) {
    for (Vertex first : sub[b]) {
      Vertex prev = b, cur = first;
      walked.insert(std::minmax(prev, cur));
      while (!is_branch.contains(cur)) {
        const auto& nb = sub[cur];
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        walked.insert(std::minmax(prev, cur));
      }
      if (cur == b) return false;
      ++paths[std::minmax(b, cur)];
    }
  }
  if (walked.size() != edge_set.size()) return false;  // a detached cycle of degree-2 vertices
  for (const auto& [pair, count] : paths) {
    if (count != 2) return false;  // each path is seen once from either end
  }

  if (k5) return paths.size() == 10;
  if (paths.size() != 9) return false;
  // The suppressed graph must be K3,3: two-color it and check all 9 cross pairs.
  Graph h(6);
  auto idx = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(branch.begin(), branch.end(), v) - branch.begin());
  };
  for (const auto& [pair, count] : paths) h.add_edge(idx(pair.first), idx(pair.second));
  const auto colors = bipartition(h);
  if (!colors) return false;
  return std::count(colors->begin(), colors->end(), 0) == 3;
}

bool verify_certificate(const Graph& g, const PlanarityCertificate& cert) {
  return cert.is_planar() ? verify_embedding(g, cert.embedding()) : verify_witness(g, cert.witness());
}

PlanarityCertificate planarity(const Graph& g) {
  BoostGraph bg = to_boost(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<BoostEdge>> embedding(n);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityCertificate cert;
  if (planar) {
    PlanarEmbedding emb;
    emb.rotation.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      for (const auto& e : embedding[v]) {
        const auto s = boost::source(e, bg);
        const auto t = boost::target(e, bg);
        emb.rotation[v].push_back(static_cast<Vertex>(s == v ? t : s));
      }
    }
    emb.faces = count_faces(g, emb.rotation);
    cert.value = std::move(emb);
  } else {
    KuratowskiWitness w;
    for (const auto& e : kuratowski) {
      const auto u = static_cast<Vertex>(boost::source(e, bg));
      const auto v = static_cast<Vertex>(boost::target(e, bg));
      w.edges.push_back(std::minmax(u, v));
    }
    std::sort(w.edges.begin(), w.edges.end());
    w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
    w.edges = minimize_nonplanar(n, std::move(w.edges));
    std::map<Vertex, std::size_t> degree;
    for (const auto& [u, v] : w.edges) {
      ++degree[u];
      ++degree[v];
    }
    for (const auto& [v, d] : degree) {
      if (d >= 3) w.branch_vertices.push_back(v);
    }
    w.kind = w.branch_vertices.size() == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
    cert.value = std::move(w);
  }
  if (!verify_certificate(g, cert)) {
    throw Error(planar ? "planar embedding failed the Euler face check"
                       : "Kuratowski witness failed subdivision validation");
  }
  return cert;
}

bool is_planar(const Graph& g) { return planarity(g).is_planar(); }

}  // namespace cpg
