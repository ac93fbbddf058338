#include "rwg/descriptor.hpp"
#include "rwg/error.hpp"
#include "rwg/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace rwg;

namespace {

std::shared_ptr<const RootSystem> shared_rs(const char* label) {
  return std::make_shared<const RootSystem>(
      RootSystem::build(CartanType::parse(label)));
}

}  // namespace

TEST_CASE("exhaustive Weyl enumeration") {
  OracleBudget budget;
  CHECK(enumerate_weyl(*shared_rs("A2"), budget).size() == 6);
  CHECK(enumerate_weyl(*shared_rs("B3"), budget).size() == 48);
  CHECK(enumerate_weyl(*shared_rs("F4"), budget).size() == 1152);
  CHECK(enumerate_weyl(*shared_rs("B4"), budget).size() == 384);
  CHECK(enumerate_weyl(*shared_rs("C4"), budget).size() == 384);
  CHECK(enumerate_weyl(*shared_rs("D4"), budget).size() == 192);
}

TEST_CASE("budget limits enumeration") {
  OracleBudget budget;
  CHECK_THROWS_AS(enumerate_weyl(*shared_rs("E8"), budget), budget_exceeded);
  OracleBudget tiny{10, 4};
  CHECK_THROWS_AS(enumerate_weyl(*shared_rs("A3"), tiny), budget_exceeded);
}

TEST_CASE("automorphism groups") {
  // W(A2) has order 6; negation and the diagram flip add one factor of 2
  auto a2 = shared_rs("A2");
  CHECK(automorphism_group(*a2, 200000).size() == 12);
  // -1 lies in W(G2) and there are no diagram symmetries
  auto g2 = shared_rs("G2");
  CHECK(automorphism_group(*g2, 200000).size() == 12);
  // D4 triality: |W| * |S3|
  auto d4 = shared_rs("D4");
  CHECK(automorphism_group(*d4, 200000).size() == 192 * 6);

  for (const auto& p : involutions_in_automorphism_group(*a2, 200000))
    CHECK(perm_is_identity(perm_compose(p, p)));
}

TEST_CASE("definitional checks pass on catalog data of small rank") {
  OracleBudget budget;
  for (const char* id :
       {"compact:A3", "split:B3", "painted:C3:2", "painted:D4:4",
        "sl2R:compactCSA", "g2:intermediate", "compact:F4"}) {
    CAPTURE(id);
    InvolutionDatum datum = realize(catalog_entry(id));
    Verdict v = check_definitional(datum, budget);
    for (const auto& c : v.checks) {
      CAPTURE(c.identity);
      CHECK(c.pass);
    }
    Verdict total = check_total_group(datum, LatticeMode::weight, budget);
    for (const auto& c : total.checks) {
      CAPTURE(c.identity);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("search finds the compact and split data") {
  OracleBudget budget;
  // compact G2 target
  auto compact_matches = search_matching_datum(
      CartanType::parse("G2"), {1, 1, 1, 12}, LatticeMode::weight, budget);
  REQUIRE(!compact_matches.empty());
  bool has_identity = false;
  for (const auto& d : compact_matches) {
    bool is_id = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (d.theta[i][j] != (i == j ? 1 : 0)) is_id = false;
    if (is_id) has_identity = true;
  }
  CHECK(has_identity);

  // the trivial real Weyl group of sl(2,R)
  auto sl2_matches = search_matching_datum(CartanType::parse("A1"), {1, 1, 1, 1},
                                           LatticeMode::weight, budget);
  CHECK(!sl2_matches.empty());

  // no datum of A1 has |A| = 2 on the weight lattice
  auto impossible = search_matching_datum(CartanType::parse("A1"), {1, 1, 2, 1},
                                          LatticeMode::weight, budget);
  CHECK(impossible.empty());
}

TEST_CASE("fuzzed data always validate") {
  OracleBudget budget;
  std::mt19937_64 rng(1);
  for (const char* label : {"A2", "B2", "G2", "A3", "D4"}) {
    auto rs = shared_rs(label);
    for (int trial = 0; trial < 20; ++trial) {
      InvolutionDatum d = fuzz_datum(rs, rng, budget);
      CHECK_NOTHROW(validate(d));
    }
  }
}

TEST_CASE("verdicts carry identity names") {
  OracleBudget budget;
  InvolutionDatum datum = realize(catalog_entry("compact:A2"));
  Verdict v = check_definitional(datum, budget);
  CHECK(v.all_pass());
  bool found = false;
  for (const auto& c : v.checks)
    if (c.identity == "centralizer_equals_factor_product") found = true;
  CHECK(found);
}
