#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringelhall/cli.hpp"
#include "ringelhall/verify.hpp"

using namespace ringelhall;

namespace {

struct Fixture {
  ClassTable table;
  HallAlgebra h;
  Fixture(const Quiver& quiver, std::uint64_t q, DimVec bound, std::optional<int> height = {})
      : table(quiver, GroundField(q), Region{std::move(bound), height}), h(table) {}
};

const Check* find(const CheckReport& r, const std::string& name, CheckStatus status) {
  for (const Check& c : r.checks)
    if (c.name == name && c.status == status) return &c;
  return nullptr;
}

void expect_pass(const CheckReport& r) {
  for (const Check& c : r.checks) EXPECT_NE(c.status, CheckStatus::fail) << r.suite << "/" << c.name << ": " << c.detail;
  EXPECT_TRUE(r.passed());
}

}  // namespace

TEST(Verify, SmallTablesPassEverySuite) {
  struct Case {
    Quiver quiver;
    std::uint64_t q;
    DimVec bound;
  };
  for (const Case& c : {Case{Quiver::a2(), 2, {2, 2}}, Case{Quiver::a2(), 3, {1, 2}}, Case{Quiver::jordan(), 2, {3}},
                        Case{Quiver::kronecker(), 2, {2, 1}}, Case{Quiver::kronecker(), 3, {1, 1}}}) {
    Fixture f(c.quiver, c.q, c.bound);
    expect_pass(suite_hopf(f.h));
    expect_pass(suite_pairing(f.h));
    expect_pass(suite_composition(f.h));
    expect_pass(suite_sv(f.h, c.bound));
    expect_pass(suite_character(f.table, c.bound));
  }
}

TEST(Verify, A2SerreSumVanishes) {
  Fixture f(Quiver::a2(), 2, {2, 2});
  auto r = suite_composition(f.h);
  for (const char* name : {"relation-iv[E]", "relation-iv[F]"}) {
    const Check* c = find(r, name, CheckStatus::pass);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->detail, "2 instances");
    EXPECT_EQ(find(r, name, CheckStatus::skipped), nullptr);
  }
}

TEST(Verify, KroneckerSerreRunsInsideLargerBound) {
  Fixture f(Quiver::kronecker(), 2, {3, 3});
  auto r = suite_composition(f.h);
  expect_pass(r);
  const Check* c = find(r, "relation-iv[E]", CheckStatus::pass);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->detail, "2 instances");
}

TEST(Verify, SkippedSerreNamesTheDegree) {
  Fixture f(Quiver::kronecker(), 2, {2, 2});
  auto r = suite_composition(f.h);
  const Check* c = find(r, "relation-iv[E]", CheckStatus::skipped);
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->detail.find("(3,1)"), std::string::npos);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, CompositionConstants) {
  Fixture a(Quiver::a2(), 2, {1, 1});
  auto ca = cartan_from_datum(datum_from_table(a.table));
  EXPECT_EQ(composition_constant(a.h, ca, 0), -a.h.v(1));
  Fixture j(Quiver::jordan(), 3, {1});
  auto cj = cartan_from_datum(datum_from_table(j.table));
  EXPECT_EQ(composition_constant(j.h, cj, 0), -j.h.v(1));
}

TEST(Verify, KacRootSets) {
  Fixture a(Quiver::a2(), 2, {2, 2}, 2);
  auto ra = suite_kac(a.table, 2);
  expect_pass(ra);
  EXPECT_EQ(find(ra, "root-set", CheckStatus::pass)->detail, "Phi+ = {(0,1):1, (1,0):1, (1,1):1}");

  Fixture j(Quiver::jordan(), 2, {4});
  auto rj = suite_kac(j.table, 4);
  expect_pass(rj);
  EXPECT_EQ(find(rj, "root-set", CheckStatus::pass)->detail, "Phi+ = {(1):1, (2):1, (3):1, (4):1}");

  Fixture k(Quiver::kronecker(), 2, {4, 4}, 4);
  auto rk = suite_kac(k.table, 4);
  expect_pass(rk);
  EXPECT_EQ(find(rk, "root-set", CheckStatus::pass)->detail,
            "Phi+ = {(0,1):1, (1,0):1, (1,1):3, (1,2):1, (2,1):1, (2,2):4}");
  EXPECT_EQ(indecomposable_counts(k.table).at({1, 1}), 3);
}

TEST(Verify, KacNeedsCoverage) {
  Fixture k(Quiver::kronecker(), 2, {2, 2});
  auto r = suite_kac(k.table, 4);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, CheckStatus::skipped);
  EXPECT_NE(r.checks[0].detail.find("(4,0)"), std::string::npos);
}

TEST(Verify, CharacterProduct) {
  Fixture j(Quiver::jordan(), 2, {4});
  auto series = character_product(j.table, indecomposable_counts(j.table), {4});
  const auto p = oracle::partitions(4);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(series.at({n}), mpz_class(p[static_cast<std::size_t>(n)]));
  auto recovered = invert_character(j.table, {4});
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(recovered.at({n}), 1);

  Fixture a(Quiver::a2(), 2, {2, 2});
  auto sa = character_product(a.table, indecomposable_counts(a.table), {2, 2});
  EXPECT_EQ(sa.at({1, 1}), 2);
  EXPECT_EQ(sa.at({0, 0}), 1);
}

TEST(Verify, TorusSamples) {
  EXPECT_EQ(torus_samples(2), (std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

TEST(Verify, CombinedReportPrefixesNames) {
  CheckReport a{"hopf", {{"unit[+]", CheckStatus::pass, "3 instances"}}};
  CheckReport b{"kac", {{"coverage", CheckStatus::skipped, "needs more"}}};
  auto all = combine_reports("all", {a, b});
  ASSERT_EQ(all.checks.size(), 2u);
  EXPECT_EQ(all.checks[0].name, "hopf/unit[+]");
  EXPECT_EQ(all.checks[1].name, "kac/coverage");
  EXPECT_TRUE(all.passed());
  all.checks.push_back({"x", CheckStatus::fail, "lhs = 1; rhs = 2"});
  EXPECT_FALSE(all.passed());
  EXPECT_EQ(all.overall(), "fail");
}
