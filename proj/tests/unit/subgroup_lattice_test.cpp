#include <gtest/gtest.h>

#include "cpg/error.hpp"
#include "cpg/group_spec.hpp"
#include "cpg/number_theory.hpp"
#include "cpg/subgroup_lattice.hpp"
#include "oracles.hpp"

using namespace cpg;
using Counts = std::map<std::size_t, std::size_t>;

namespace {

std::set<std::vector<Element>> as_set(const SubgroupList& l) {
  std::set<std::vector<Element>> s;
  for (const auto& h : l.all) s.insert(h.elements);
  return s;
}

}  // namespace

TEST(Lattice, CyclicTwelve) {
  const auto l = all_subgroups(make_cyclic(12));
  EXPECT_EQ(l.all.size(), 6u);
  EXPECT_EQ(l.counts_by_order, (Counts{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}}));
}

TEST(Lattice, Quaternion) {
  const auto l = all_subgroups(build_group("Q8"));
  std::vector<std::size_t> orders;
  for (const auto& h : proper_nontrivial(l)) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{2, 4, 4, 4}));
}

TEST(Lattice, Alternating4) {
  const auto l = all_subgroups(build_group("A4"));
  EXPECT_EQ(l.all.size(), 10u);
  EXPECT_EQ(l.counts_by_order, (Counts{{1, 1}, {2, 3}, {3, 4}, {4, 1}, {12, 1}}));
}

TEST(Lattice, ProperNontrivial) {
  EXPECT_EQ(proper_nontrivial(all_subgroups(make_cyclic(6))).size(), 2u);
  EXPECT_EQ(proper_nontrivial(all_subgroups(make_cyclic(32))).size(), 4u);
  EXPECT_EQ(proper_nontrivial(all_subgroups(make_cyclic(4))).size(), 1u);
}

TEST(Lattice, CyclicGroupsHaveOneSubgroupPerDivisor) {
  for (std::size_t n = 1; n <= 120; ++n) {
    const auto l = all_subgroups(make_cyclic(n));
    ASSERT_EQ(l.all.size(), divisors(n).size()) << n;
    for (auto d : divisors(n)) ASSERT_EQ(l.counts_by_order.at(d), 1u) << n << " " << d;
  }
}

TEST(Lattice, OrderedAndWellFormed) {
  const auto g = build_group("S4");
  const auto l = all_subgroups(g);
  EXPECT_EQ(l.all.size(), 30u);
  EXPECT_TRUE(std::is_sorted(l.all.begin(), l.all.end(), subgroup_less));
  EXPECT_TRUE(l.all.front().is_trivial());
  EXPECT_TRUE(l.all.back().is_whole());
  for (const auto& h : l.all) {
    EXPECT_TRUE(is_subgroup(g, h.elements));
    EXPECT_EQ(g.order() % h.order(), 0u);
  }
}

TEST(Lattice, MatchesBruteForceOracle) {
  for (const char* text : {"Z:12", "D:6", "A4", "S4", "Q8", "X(Z:2,Z:6)", "G1:2,3", "X(Z:2,X(Z:2,Z:2))",
                           "D:4", "X(Z:3,Q8)", "SD:3,8,2", "X(Z:3,S3)", "SD:7,3,2", "D:10", "X(Z:2,Z:8)",
                           "X(Z:2,D:4)"}) {
    const auto g = build_group(text);
    EXPECT_EQ(as_set(all_subgroups(g)), oracle::all_subgroups(g)) << text;
  }
}

TEST(Lattice, SylowCountsAreOneModP) {
  for (const char* text : {"S4", "A4", "S3xS3", "Z3xA4", "Z2Z2sZ9", "D:15", "G6:5,3", "G4:7,3", "X(Z:8,X(Z:3,Z:3))"}) {
    const auto g = build_group(text);
    const auto l = all_subgroups(g);
    for (const auto& [p, e] : factorize(g.order())) {
      std::size_t sylow = 1;
      for (unsigned i = 0; i < e; ++i) sylow *= p;
      EXPECT_EQ(l.counts_by_order.at(sylow) % p, 1u) << text << " p=" << p;
    }
  }
}

TEST(Lattice, GeneratedSubgroup) {
  const auto g = make_cyclic(12);
  const std::vector<Element> gens{4, 6};
  EXPECT_EQ(generated_subgroup(g, gens).size(), 6u);
  const std::vector<Element> not_closed{0, 1};
  EXPECT_FALSE(is_subgroup(g, not_closed));
}

TEST(Lattice, BoundAndJson) {
  EXPECT_THROW(all_subgroups(make_cyclic(100), 50), CapExceededError);
  EXPECT_EQ(counts_to_json(all_subgroups(make_cyclic(6))).dump(), R"({"1":1,"2":1,"3":1,"6":1})");
}
