#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpg/group.hpp"

namespace cpg {

/// One catalog line: {"spec": "<group spec>", "expect": {"<check id>": value}}.
/// Optional: "note" (free text) and "exact_cap" (raises the exact-solver
/// vertex cap for this entry only).
struct CatalogEntry {
  std::string spec;
  nlohmann::json expect = nlohmann::json::object();
  std::string note;
  std::optional<std::size_t> exact_cap;
};

/// JSON Lines; blank lines and lines starting with "//" are skipped.
/// Throws ParseError with the line number on malformed input.
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

struct CheckInfo {
  std::string id;
  std::string description;
  bool invariant;  // evaluated for every entry rather than only when expected
};

/// Registry of check ids accepted in "expect" plus the always-on invariants.
const std::vector<CheckInfo>& check_registry();

struct CheckResult {
  std::string subject;  // group spec or test case name
  std::string check;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

struct EntryError {
  std::string subject;
  std::string message;
};

struct VerificationReport {
  std::vector<CheckResult> rows;
  std::vector<EntryError> errors;
  std::size_t entries = 0;
  std::size_t skipped = 0;  // above max_order

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && errors.empty(); }

  nlohmann::json to_json() const;
  std::string render_table() const;
};

struct SuiteOptions {
  std::size_t max_order = 200;
  std::size_t exact_cap = 64;
  std::size_t jobs = 1;
};

/// Builds each group, its lattice and coprime graph, analyzes it, and
/// compares against the entry's expectations and the suite invariants.
/// Entries above max_order are skipped; failures of one entry are reported
/// as EntryError and do not stop the run. Rows keep catalog order.
VerificationReport run_catalog(std::span<const CatalogEntry> catalog, const SuiteOptions& options = {});

/// Connectedness of the coprime graph equals the absence of a proper
/// nontrivial subgroup whose order has every prime of |G|; when connected
/// the diameter is also checked to lie in {1, 2, 3}.
bool check_connectivity_criterion(const FiniteGroup& g);

/// Closed-form degree versus counted degree for every composite
/// 4 <= n <= n_max and every vertex of the cyclic coprime graph. Only
/// mismatches produce rows, plus one summary row.
VerificationReport check_degree_theorem(std::uint64_t n_max);

/// embed + verify_embedding over every labeled graph on 1..5 vertices plus
/// `trials` seeded random graphs on 7..n_max_vertices vertices.
VerificationReport check_embedding_theorem(std::size_t trials, std::size_t n_max_vertices,
                                           std::uint64_t seed = 20240607);

/// Path of the catalog shipped with the source tree.
std::filesystem::path default_catalog_path();

}  // namespace cpg
