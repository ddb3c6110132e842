#include "cpg/theorem_suite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "cpg/analysis.hpp"
#include "cpg/coprime_graph.hpp"
#include "cpg/embedder.hpp"
#include "cpg/error.hpp"
#include "cpg/group_spec.hpp"
#include "cpg/number_theory.hpp"
#include "cpg/subgroup_lattice.hpp"

#ifndef CPG_DEFAULT_CATALOG
#define CPG_DEFAULT_CATALOG "data/catalog.jsonl"
#endif

namespace cpg {

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0) continue;
    const auto where = "catalog line " + std::to_string(line_no) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(where + e.what());
    }
    if (!j.is_object() || !j.contains("spec") || !j["spec"].is_string()) {
      throw ParseError(where + "expected an object with a string \"spec\"");
    }
    CatalogEntry entry;
    entry.spec = j["spec"].get<std::string>();
    if (j.contains("expect")) {
      if (!j["expect"].is_object()) throw ParseError(where + "\"expect\" must be an object");
      entry.expect = j["expect"];
    }
    if (j.contains("note") && j["note"].is_string()) entry.note = j["note"].get<std::string>();
    if (j.contains("exact_cap")) {
      if (!j["exact_cap"].is_number_unsigned()) throw ParseError(where + "\"exact_cap\" must be a positive integer");
      entry.exact_cap = j["exact_cap"].get<std::size_t>();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path.string());
  return load_catalog(in);
}

std::filesystem::path default_catalog_path() { return CPG_DEFAULT_CATALOG; }

namespace {

// Everything a catalog entry can be checked against.
struct Subject {
  const FiniteGroup* group;
  const SubgroupList* lattice;
  const CoprimeGraph* graph;
  const AnalysisReport* report;
  std::vector<std::uint64_t> primes;  // pi(|G|)
};

nlohmann::json extended(const Extended& v) {
  if (v) return *v;
  return "inf";
}

bool pi_full(std::uint64_t order, const std::vector<std::uint64_t>& primes) {
  return prime_divisors(order) == primes;
}

// Connectivity in the criterion's sense: one component with at least one
// edge. A single vertex (the p^2 case) counts as totally disconnected.
bool connected_with_edges(const AnalysisReport& r) { return r.is_connected && r.n_edges > 0; }

bool criterion_holds(const CoprimeGraph& cg, const AnalysisReport& r,
                     const std::vector<std::uint64_t>& primes) {
  const bool has_full = std::any_of(cg.vertices.begin(), cg.vertices.end(),
                                    [&](const CoprimeVertex& v) { return pi_full(v.order, primes); });
  const bool connected = connected_with_edges(r);
  if (connected == has_full) return false;
  return !connected || (r.diameter && *r.diameter >= 1 && *r.diameter <= 3);
}

bool pi_full_isolated(const Subject& s) {
  const Graph& g = s.graph->graph;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pi_full(s.graph->vertices[v].order, s.primes)) {
      if (g.degree(v) != 0) return false;
    } else {
      rest.push_back(v);
    }
  }
  return is_connected(g.induced(rest));
}

std::size_t largest_prime_class(const Subject& s) {
  std::size_t best = 0;
  for (auto p : s.primes) {
    const auto count = std::count_if(s.graph->vertices.begin(), s.graph->vertices.end(),
                                     [&](const CoprimeVertex& v) { return v.order % p == 0; });
    best = std::max(best, static_cast<std::size_t>(count));
  }
  return best;
}

bool smallest_prime_coloring(const Subject& s) {
  std::vector<std::size_t> colors;
  for (const auto& v : s.graph->vertices) {
    const auto p = prime_divisors(v.order).front();
    colors.push_back(static_cast<std::size_t>(
        std::find(s.primes.begin(), s.primes.end(), p) - s.primes.begin()));
  }
  return is_proper_coloring(s.graph->graph, colors);
}

using Compute = std::function<nlohmann::json(const Subject&)>;

struct CheckDef {
  CheckInfo info;
  Compute compute;
};

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto value = [&](std::string id, std::string text, Compute f) {
      d.push_back({{std::move(id), std::move(text), false}, std::move(f)});
    };
    auto invariant = [&](std::string id, std::string text, Compute f) {
      d.push_back({{std::move(id), std::move(text), true}, std::move(f)});
    };
    auto pattern_free = [&](Pattern p) {
      std::string name(pattern_name(p));
      std::string id = name;
      id.erase(std::remove(id.begin(), id.end(), ','), id.end());
      value(id + "_free", "no subgraph isomorphic to " + name,
            [p](const Subject& s) -> nlohmann::json { return !s.report->contains_pattern(p); });
    };

    value("order", "group order", [](const Subject& s) -> nlohmann::json { return s.group->order(); });
    value("n_vertices", "number of proper nontrivial subgroups",
          [](const Subject& s) -> nlohmann::json { return s.report->n_vertices; });
    value("n_edges", "number of coprime pairs", [](const Subject& s) -> nlohmann::json { return s.report->n_edges; });
    value("shape", "shape descriptor, e.g. \"Star(10) + 3K1\"",
          [](const Subject& s) -> nlohmann::json { return s.report->shape.to_string(); });
    value("isolated", "number of isolated vertices",
          [](const Subject& s) -> nlohmann::json { return s.report->shape.isolated; });
    value("connected", "graph is connected",
          [](const Subject& s) -> nlohmann::json { return s.report->is_connected; });
    value("diameter", "diameter, \"inf\" when disconnected",
          [](const Subject& s) -> nlohmann::json { return extended(s.report->diameter); });
    value("girth", "girth, \"inf\" for forests",
          [](const Subject& s) -> nlohmann::json { return extended(s.report->girth); });
    value("alpha", "independence number", [](const Subject& s) -> nlohmann::json { return s.report->alpha; });
    value("omega", "clique number", [](const Subject& s) -> nlohmann::json { return s.report->omega; });
    value("chi", "chromatic number", [](const Subject& s) -> nlohmann::json { return s.report->chi; });
    value("bipartite", "graph is bipartite",
          [](const Subject& s) -> nlohmann::json { return s.report->is_bipartite; });
    value("planar", "graph is planar",
          [](const Subject& s) -> nlohmann::json { return s.report->planarity.is_planar(); });
    value("unicyclic", "exactly one cycle",
          [](const Subject& s) -> nlohmann::json { return s.report->is_unicyclic; });
    value("tree", "graph is a tree",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.tree; });
    value("star", "graph is a star K1,n",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.star; });
    value("path", "graph is a path",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.path; });
    value("complete", "graph is complete",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.complete; });
    value("complete_bipartite", "graph is complete bipartite",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.complete_bipartite; });
    value("totally_disconnected", "graph has no edges",
          [](const Subject& s) -> nlohmann::json { return s.report->predicates.null; });
    for (Pattern p : kAllPatterns) pattern_free(p);
    value("subgroup_counts", "number of subgroups of each order",
          [](const Subject& s) -> nlohmann::json { return counts_to_json(*s.lattice); });
    invariant("alpha_is_largest_prime_class",
          "alpha equals the largest number of vertices whose order shares one prime",
          [](const Subject& s) -> nlohmann::json { return s.report->alpha == largest_prime_class(s); });

    invariant("girth_3_4_inf", "girth is 3, 4 or infinite", [](const Subject& s) -> nlohmann::json {
      return !s.report->girth || *s.report->girth == 3 || *s.report->girth == 4;
    });
    invariant("not_a_cycle", "graph is never a cycle", [](const Subject& s) -> nlohmann::json {
      return s.report->shape.kind != ShapeKind::Cycle && !s.report->predicates.cycle;
    });
    invariant("omega_is_prime_count", "clique number equals the number of primes of |G|",
              [](const Subject& s) -> nlohmann::json { return s.report->omega == s.primes.size(); });
    invariant("chi_is_omega", "chromatic number equals clique number",
              [](const Subject& s) -> nlohmann::json { return s.report->chi == s.report->omega; });
    invariant("smallest_prime_coloring", "coloring by smallest prime divisor is proper",
              [](const Subject& s) -> nlohmann::json { return smallest_prime_coloring(s); });
    invariant("bipartite_iff_two_primes", "bipartite exactly when |G| has at most two primes",
              [](const Subject& s) -> nlohmann::json { return s.report->is_bipartite == (s.primes.size() <= 2); });
    invariant("edgeless_iff_prime_power", "no edges exactly when |G| is a prime power",
              [](const Subject& s) -> nlohmann::json { return s.report->predicates.null == (s.primes.size() == 1); });
    invariant("connectivity_criterion",
              "connected exactly when no proper subgroup has every prime of |G|; then diameter <= 3",
              [](const Subject& s) -> nlohmann::json { return criterion_holds(*s.graph, *s.report, s.primes); });
    invariant("prime_complete_vertices_isolated",
              "subgroups with every prime of |G| are isolated and the rest is connected",
              [](const Subject& s) -> nlohmann::json { return pi_full_isolated(s); });
    invariant("planarity_certificate", "planarity certificate verifies; K3,3 subgraph implies nonplanar",
              [](const Subject& s) -> nlohmann::json {
                const auto& r = *s.report;
                return verify_certificate(s.graph->graph, r.planarity) &&
                       (!r.contains_pattern(Pattern::K33) || !r.planarity.is_planar());
              });
    return d;
  }();
  return defs;
}

struct EntryOutcome {
  std::vector<CheckResult> rows;
  std::optional<EntryError> error;
  bool skipped = false;
};

EntryOutcome run_entry(const CatalogEntry& entry, const SuiteOptions& options) {
  EntryOutcome out;
  try {
    for (const auto& [id, _] : entry.expect.items()) {
      const auto& defs = definitions();
      const bool known = std::any_of(defs.begin(), defs.end(), [&](const CheckDef& d) {
        return d.info.id == id && !d.info.invariant;
      });
      if (!known) throw ParseError("unknown check id '" + id + "'");
    }
    const auto spec = parse_group_spec(entry.spec);
    std::optional<FiniteGroup> group;
    try {
      group.emplace(build_group(spec, BuildLimits{options.max_order}));
    } catch (const CapExceededError&) {
      out.skipped = true;
      return out;
    }
    const auto lattice = all_subgroups(*group, std::max(options.max_order, group->order()));
    const auto graph = build_coprime_graph(lattice, group->name());
    const auto report = analyze(graph.graph, AnalysisOptions{entry.exact_cap.value_or(options.exact_cap)});
    const Subject subject{&*group, &lattice, &graph, &report, prime_divisors(group->order())};

    for (const auto& def : definitions()) {
      CheckResult row;
      row.subject = entry.spec;
      row.check = def.info.id;
      if (def.info.invariant) {
        row.expected = true;
      } else if (entry.expect.contains(def.info.id)) {
        row.expected = entry.expect[def.info.id];
      } else {
        continue;
      }
      row.computed = def.compute(subject);
      row.pass = row.computed == row.expected;
      out.rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    out.rows.clear();
    out.error = EntryError{entry.spec, e.what()};
  }
  return out;
}

std::string cell(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& d : definitions()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

VerificationReport run_catalog(std::span<const CatalogEntry> catalog, const SuiteOptions& options) {
  std::vector<EntryOutcome> outcomes(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      outcomes[i] = run_entry(catalog[i], options);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(catalog.size(), 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.entries = catalog.size();
  for (auto& o : outcomes) {
    if (o.skipped) ++report.skipped;
    if (o.error) report.errors.push_back(std::move(*o.error));
    for (auto& row : o.rows) report.rows.push_back(std::move(row));
  }
  return report;
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; }));
}

std::size_t VerificationReport::failed() const { return rows.size() - passed(); }

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["entries"] = entries;
  j["skipped"] = skipped;
  j["checks"] = rows.size();
  j["passed"] = passed();
  j["failed"] = failed();
  j["ok"] = ok();
  auto errs = nlohmann::json::array();
  for (const auto& e : errors) errs.push_back({{"subject", e.subject}, {"message", e.message}});
  j["errors"] = errs;
  auto rs = nlohmann::json::array();
  for (const auto& r : rows) {
    rs.push_back({{"subject", r.subject},
                  {"check", r.check},
                  {"expected", r.expected},
                  {"computed", r.computed},
                  {"pass", r.pass}});
  }
  j["rows"] = rs;
  return j;
}

std::string VerificationReport::render_table() const {
  std::ostringstream out;
  // One line per subject, followed by its failing checks.
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::size_t bad = 0;
    while (j < rows.size() && rows[j].subject == rows[i].subject) bad += rows[j++].pass ? 0 : 1;
    out << (bad == 0 ? "PASS  " : "FAIL  ") << rows[i].subject << "  (" << (j - i) << " checks";
    if (bad != 0) out << ", " << bad << " failed";
    out << ")\n";
    for (std::size_t k = i; k < j; ++k) {
      if (!rows[k].pass) {
        out << "        " << rows[k].check << ": expected " << cell(rows[k].expected) << ", computed "
            << cell(rows[k].computed) << '\n';
      }
    }
    i = j;
  }
  for (const auto& e : errors) out << "ERROR " << e.subject << ": " << e.message << '\n';
  out << entries << " entries, " << skipped << " skipped, " << rows.size() << " checks, " << passed()
      << " passed, " << failed() << " failed, " << errors.size() << " errors\n";
  return out.str();
}

bool check_connectivity_criterion(const FiniteGroup& g) {
  const auto graph = build_coprime_graph(g, std::max(kDefaultMaxOrder, g.order()));
  const auto report = analyze(graph.graph, AnalysisOptions{std::max(kDefaultExactCap, graph.vertex_count())});
  return criterion_holds(graph, report, prime_divisors(g.order()));
}

VerificationReport check_degree_theorem(std::uint64_t n_max) {
  VerificationReport report;
  std::size_t mismatches = 0;
  std::size_t vertices = 0;
  for (std::uint64_t n = 4; n <= n_max; ++n) {
    if (is_prime(n)) continue;
    ++report.entries;
    const auto cg = build_cyclic_coprime_graph(n);
    for (Vertex v = 0; v < cg.vertex_count(); ++v) {
      ++vertices;
      const auto h = cg.vertices[v].order;
      const auto formula = degree_formula(n, h);
      const auto counted = cg.graph.degree(v);
      if (formula != counted) {
        ++mismatches;
        report.rows.push_back({"Z:" + std::to_string(n), "degree of order " + std::to_string(h), formula,
                               counted, false});
      }
    }
  }
  report.rows.push_back({"Z:n, 4 <= n <= " + std::to_string(n_max), "degree mismatches over " +
                         std::to_string(vertices) + " vertices", 0, mismatches, mismatches == 0});
  return report;
}

namespace {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

nlohmann::json edge_json(const Graph& g) {
  auto out = nlohmann::json::array();
  out.push_back(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

bool embeds(const Graph& g) {
  try {
    return verify_embedding(g, embed(g));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

VerificationReport check_embedding_theorem(std::size_t trials, std::size_t n_max_vertices, std::uint64_t seed) {
  VerificationReport report;
  std::size_t exhaustive = 0;
  std::size_t exhaustive_failed = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      ++exhaustive;
      const Graph g = graph_from_mask(n, mask);
      if (!embeds(g)) {
        ++exhaustive_failed;
        report.rows.push_back({"graph " + edge_json(g).dump(), "embedding", true, false, false});
      }
    }
  }
  report.rows.push_back({"all labeled graphs on 1..5 vertices", "failures over " + std::to_string(exhaustive) +
                         " graphs", 0, exhaustive_failed, exhaustive_failed == 0});

  std::mt19937_64 rng(seed);
  const std::size_t lo = std::min<std::size_t>(7, n_max_vertices);
  std::uniform_int_distribution<std::size_t> size_dist(lo, std::max(lo, n_max_vertices));
  std::uniform_real_distribution<double> density_dist(0.1, 0.9);
  std::size_t random_failed = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = size_dist(rng);
    const double p = density_dist(rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (!embeds(g)) {
      ++random_failed;
      report.rows.push_back({"graph " + edge_json(g).dump(), "embedding", true, false, false});
    }
  }
  report.rows.push_back({"random graphs on " + std::to_string(lo) + ".." + std::to_string(n_max_vertices) +
                         " vertices", "failures over " + std::to_string(trials) + " graphs", 0, random_failed,
                         random_failed == 0});
  report.entries = exhaustive + trials;
  return report;
}

}  // namespace cpg
