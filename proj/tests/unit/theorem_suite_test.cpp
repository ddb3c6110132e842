#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cpg/error.hpp"
#include "cpg/group_spec.hpp"
#include "cpg/theorem_suite.hpp"

using namespace cpg;

namespace {

std::vector<CatalogEntry> parse(const std::string& text) {
  std::istringstream in(text);
  return load_catalog(in);
}

const CheckResult* find_row(const VerificationReport& r, const std::string& subject, const std::string& check) {
  for (const auto& row : r.rows)
    if (row.subject == subject && row.check == check) return &row;
  return nullptr;
}

}  // namespace

TEST(Catalog, Loads) {
  const auto c = parse("// header\n\n{\"spec\": \"Z:6\", \"expect\": {\"alpha\": 1}, \"note\": \"x\", \"exact_cap\": 8}\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].spec, "Z:6");
  EXPECT_EQ(c[0].note, "x");
  EXPECT_EQ(c[0].exact_cap, std::optional<std::size_t>(8));
  EXPECT_THROW(parse("{\"expect\": {}}\n"), ParseError);
  EXPECT_THROW(parse("{\"spec\": \"Z:6\", \"expect\": 3}\n"), ParseError);
  EXPECT_THROW(parse("not json\n"), ParseError);
  EXPECT_TRUE(parse("").empty());
}

TEST(Catalog, DefaultCatalogPasses) {
  const auto catalog = load_catalog(default_catalog_path());
  EXPECT_GE(catalog.size(), 40u);
  const auto report = run_catalog(catalog);
  for (const auto& row : report.rows)
    EXPECT_TRUE(row.pass) << row.subject << " " << row.check << " expected " << row.expected << " got "
                          << row.computed;
  for (const auto& e : report.errors) ADD_FAILURE() << e.subject << ": " << e.message;
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.entries, catalog.size());
}

TEST(Catalog, WrongExpectationFails) {
  const auto report = run_catalog(parse(R"({"spec": "Z:30", "expect": {"omega": 4, "alpha": 3}})"));
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.failed(), 1u);
  const auto* row = find_row(report, "Z:30", "omega");
  ASSERT_NE(row, nullptr);
  EXPECT_FALSE(row->pass);
  EXPECT_EQ(row->computed, 3);
  EXPECT_TRUE(find_row(report, "Z:30", "alpha")->pass);
}

TEST(Catalog, EntryErrors) {
  const auto report = run_catalog(parse(
      "{\"spec\": \"Z:6\", \"expect\": {\"bogus\": 1}}\n"
      "{\"spec\": \"Z:7\", \"expect\": {}}\n"
      "{\"spec\": \"Q8\", \"expect\": {\"shape\": \"Null(4)\"}}\n"));
  EXPECT_EQ(report.errors.size(), 2u);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(find_row(report, "Q8", "shape")->pass);
}

TEST(Catalog, SkipsAboveMaxOrder) {
  const auto report = run_catalog(parse("{\"spec\": \"Z:210\", \"expect\": {\"planar\": false}}\n"),
                                  SuiteOptions{.max_order = 100});
  EXPECT_EQ(report.skipped, 1u);
  EXPECT_TRUE(report.rows.empty());
  EXPECT_TRUE(report.ok());
}

TEST(Catalog, ParallelRunIsDeterministic) {
  const auto catalog = load_catalog(default_catalog_path());
  const auto serial = run_catalog(catalog, SuiteOptions{.jobs = 1});
  const auto parallel = run_catalog(catalog, SuiteOptions{.jobs = 4});
  EXPECT_EQ(serial.to_json().dump(), parallel.to_json().dump());
}

TEST(Registry, KnownIds) {
  std::set<std::string> ids;
  for (const auto& c : check_registry()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (const char* id : {"alpha", "omega", "chi", "planar", "shape", "K13_free", "subgroup_counts",
                         "connectivity_criterion", "planarity_certificate"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Theorems, ConnectivityCriterion) {
  for (const char* spec : {"Z:30", "Z:12", "S3", "A4", "S4", "Q8", "Z:9", "Z3xA4", "D12", "G6:5,3"})
    EXPECT_TRUE(check_connectivity_criterion(build_group(spec))) << spec;
}

TEST(Theorems, DegreeFormula) {
  const auto r = check_degree_theorem(400);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].computed, 0);
}

TEST(Theorems, Embedding) {
  const auto r = check_embedding_theorem(30, 10, 5);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.rows.size(), 2u);
}
