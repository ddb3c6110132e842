#include "cpg_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpg/analysis.hpp"
#include "cpg/coprime_graph.hpp"
#include "cpg/embedder.hpp"
#include "cpg/error.hpp"
#include "cpg/group_spec.hpp"
#include "cpg/graph_io.hpp"
#include "cpg/subgroup_lattice.hpp"
#include "cpg/theorem_suite.hpp"

namespace cpg::cli {

namespace {

struct Config {
  std::string spec;
  std::string format;
  std::string out_path;
  std::string input = "-";
  std::string catalog;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t exact_cap = kDefaultExactCap;
  std::size_t jobs = 1;
  std::size_t mis_cap = kDefaultMisCap;
  std::uint64_t degree_max = 0;
  std::size_t embed_trials = 0;
};

// Writes to --out when given, else to the command's output stream.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + cfg.out_path);
  file << text;
}

struct Built {
  FiniteGroup group;
  SubgroupList lattice;
  CoprimeGraph graph;
};

Built build(const Config& cfg) {
  auto group = build_group(cfg.spec, BuildLimits{cfg.max_order});
  auto lattice = all_subgroups(group, cfg.max_order);
  auto graph = build_coprime_graph(lattice, group.name());
  return {std::move(group), std::move(lattice), std::move(graph)};
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const auto b = build(cfg);
  if (cfg.format == "dot") {
    const auto cert = planarity(b.graph.graph);
    emit(cfg, out, to_dot(b.graph, cert.is_planar() ? &cert.embedding() : nullptr));
    return kOk;
  }
  const auto report = analyze(b.graph.graph, AnalysisOptions{cfg.exact_cap});
  if (cfg.format == "json") {
    nlohmann::json j;
    j["group"] = b.group.name();
    j["order"] = b.group.order();
    j["subgroup_counts"] = counts_to_json(b.lattice);
    j["graph"] = to_json(b.graph);
    j["analysis"] = to_json(report);
    emit(cfg, out, j.dump(2) + "\n");
    return kOk;
  }
  const std::string title = "P(" + b.group.name() + "), |G| = " + std::to_string(b.group.order());
  emit(cfg, out, render_table(report, title));
  return kOk;
}

int cmd_export(const Config& cfg, std::ostream& out) {
  const auto b = build(cfg);
  if (cfg.format == "json") {
    emit(cfg, out, to_json(b.graph).dump(2) + "\n");
    return kOk;
  }
  const auto cert = planarity(b.graph.graph);
  emit(cfg, out, to_dot(b.graph, cert.is_planar() ? &cert.embedding() : nullptr));
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::filesystem::path path = cfg.catalog.empty() ? default_catalog_path() : std::filesystem::path(cfg.catalog);
  const auto catalog = load_catalog(path);
  if (catalog.empty()) err << "cpg: warning: 0 entries in " << path.string() << '\n';

  auto report = run_catalog(catalog, SuiteOptions{cfg.max_order, cfg.exact_cap, cfg.jobs});
  auto merge = [&report](VerificationReport extra) {
    for (auto& row : extra.rows) report.rows.push_back(std::move(row));
  };
  if (cfg.degree_max >= 4) merge(check_degree_theorem(cfg.degree_max));
  if (cfg.embed_trials > 0) merge(check_embedding_theorem(cfg.embed_trials, 12));

  if (cfg.format == "table") {
    emit(cfg, out, report.render_table());
  } else {
    emit(cfg, out, report.to_json().dump(2) + "\n");
  }
  for (const auto& row : report.rows) {
    if (!row.pass) err << "cpg: FAIL " << row.subject << " " << row.check << '\n';
  }
  for (const auto& e : report.errors) err << "cpg: ERROR " << e.subject << ": " << e.message << '\n';
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_embed(const Config& cfg, std::ostream& out) {
  Graph g;
  if (cfg.input == "-") {
    g = parse_edge_list(std::cin);
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw ParseError("cannot open " + cfg.input);
    g = parse_edge_list(in);
  }
  const auto cert = embed(g, cfg.mis_cap);
  if (!verify_embedding(g, cert)) throw Error("embedding failed verification");
  emit(cfg, out, certificate_to_json(cert) + "\n");
  return kOk;
}

int cmd_catalog(const Config& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    nlohmann::json j;
    for (const auto& n : named_groups()) {
      j["groups"].push_back({{"tag", n.tag}, {"params", n.params}, {"description", n.description}});
    }
    for (const auto& c : check_registry()) {
      j["checks"].push_back({{"id", c.id}, {"description", c.description}, {"invariant", c.invariant}});
    }
    emit(cfg, out, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream s;
  s << "Named groups (also: Z:n, D:n, SD:m,k,i, X(a,b), PERM:deg:gens)\n";
  for (const auto& n : named_groups()) {
    std::string head = n.tag + (n.params.empty() ? "" : ":" + n.params);
    s << "  " << head << std::string(head.size() < 14 ? 14 - head.size() : 1, ' ') << n.description << '\n';
  }
  s << "\nChecks (* = evaluated for every entry)\n";
  for (const auto& c : check_registry()) {
    s << "  " << (c.invariant ? '*' : ' ') << ' ' << c.id
      << std::string(c.id.size() < 34 ? 34 - c.id.size() : 1, ' ') << c.description << '\n';
  }
  emit(cfg, out, s.str());
  return kOk;
}

void add_caps(CLI::App* cmd, Config& cfg, std::size_t& max_order) {
  cmd->add_option("--max-order", max_order, "Largest group order to build")
      ->envname("CPG_MAX_ORDER")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--exact-cap", cfg.exact_cap, "Vertex cap for exact alpha/omega/chi")
      ->envname("CPG_EXACT_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  // verify bounds the catalog (default 200), not every group build.
  std::size_t verify_max_order = 200;
  CLI::App app{"Coprime graphs of subgroups: build, analyze, verify, embed", "cpg"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze P(G) for a group spec");
  analyze_cmd->add_option("spec", cfg.spec, "Group spec, e.g. Z:30, A4, X(Z:3,A4)")->required();
  analyze_cmd->add_option("--format", cfg.format, "table, json or dot")
      ->check(CLI::IsMember({"table", "json", "dot"}))
      ->default_str("table");
  analyze_cmd->add_option("--out", cfg.out_path, "Write output to PATH");
  add_caps(analyze_cmd, cfg, cfg.max_order);

  auto* export_cmd = app.add_subcommand("export", "Export P(G) as DOT or JSON");
  export_cmd->add_option("spec", cfg.spec, "Group spec")->required();
  export_cmd->add_option("--format", cfg.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->default_str("dot");
  export_cmd->add_option("--out", cfg.out_path, "Write output to PATH");
  add_caps(export_cmd, cfg, cfg.max_order);

  auto* verify_cmd = app.add_subcommand("verify", "Check a catalog of groups against expectations");
  verify_cmd->add_option("catalog", cfg.catalog, "Catalog file (JSON Lines); defaults to the shipped catalog");
  verify_cmd->add_option("--format", cfg.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_str("json");
  verify_cmd->add_option("--out", cfg.out_path, "Write output to PATH");
  verify_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--degree-max", cfg.degree_max, "Also check the Z_n degree formula up to N");
  verify_cmd->add_option("--embed-trials", cfg.embed_trials,
                         "Also check embeddings: all graphs on <= 5 vertices plus N random ones");
  add_caps(verify_cmd, cfg, verify_max_order);

  auto* embed_cmd = app.add_subcommand("embed", "Realize an edge-list graph inside P(Z_m)");
  embed_cmd->add_option("input", cfg.input, "Edge-list file, '-' for stdin")->capture_default_str();
  embed_cmd->add_option("--out", cfg.out_path, "Write output to PATH");
  embed_cmd->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));
  embed_cmd->add_option("--mis-cap", cfg.mis_cap, "Vertex cap for independent set enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "List named groups and check ids");
  catalog_cmd->add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_str("table");
  catalog_cmd->add_option("--out", cfg.out_path, "Write output to PATH");


  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cpg: " << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  auto* cmd = app.get_subcommands().front();
  if (cmd->get_option("--format")->empty() && cfg.format.empty()) {
    cfg.format = cmd->get_option("--format")->get_default_str();
  }

  try {
    if (cmd == analyze_cmd) return cmd_analyze(cfg, out);
    if (cmd == export_cmd) return cmd_export(cfg, out);
    if (cmd == verify_cmd) {
      cfg.max_order = verify_max_order;
      return cmd_verify(cfg, out, err);
    }
    if (cmd == embed_cmd) return cmd_embed(cfg, out);
    return cmd_catalog(cfg, out);
  } catch (const UndefinedGraphError& e) {
    err << "cpg: undefined: " << e.what() << '\n';
    return kUndefinedGraph;
  } catch (const CapExceededError& e) {
    err << "cpg: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "cpg: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "cpg: invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "cpg: error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace cpg::cli
