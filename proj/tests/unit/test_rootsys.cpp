#include "rwg/error.hpp"
#include "rwg/rootsys.hpp"
#include "rwg/weylperm.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace rwg;

namespace {

RootSystem build(const char* label) {
  return RootSystem::build(CartanType::parse(label));
}

int simple_index(const RootSystem& rs, int i) {
  std::vector<int> e(rs.rank(), 0);
  e[i] = 1;
  return rs.index_of(e);
}

}  // namespace

TEST_CASE("root counts for small and exceptional types") {
  CHECK(build("A2").size() == 6);
  CHECK(build("A2").num_positive() == 3);
  CHECK(build("G2").size() == 12);
  CHECK(build("G2").num_positive() == 6);
  CHECK(build("F4").size() == 48);
  CHECK(build("B3").size() == 18);
  CHECK(build("C4").size() == 32);
  CHECK(build("D4").size() == 24);
  // dim E8 - rank = 248 - 8 roots
  RootSystem e8 = build("E8");
  CHECK(e8.size() == 240);
  CHECK(e8.num_positive() == 120);
}

TEST_CASE("invalid types rejected") {
  CHECK_THROWS_AS(RootSystem::build(CartanType{Series::E, 5}), validation_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType{Series::F, 3}), validation_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType{Series::G, 4}), validation_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType{Series::D, 1}), validation_error);
  CHECK_THROWS_AS(CartanType::parse("H3"), validation_error);
  CHECK_THROWS_AS(CartanType::parse("A0"), validation_error);
}

TEST_CASE("pairing values") {
  RootSystem a1 = build("A1");
  RatVec alpha{1};
  CHECK(a1.pairing(alpha, 0) == 2);

  RootSystem a2 = build("A2");
  RatVec a2_alpha1{1, 0};
  CHECK(a2.pairing(a2_alpha1, simple_index(a2, 1)) == -1);

  // long simple root against the short simple root in G2
  RootSystem g2 = build("G2");
  REQUIRE(g2.form(simple_index(g2, 1), simple_index(g2, 1)) >
          g2.form(simple_index(g2, 0), simple_index(g2, 0)));
  RatVec long_root{0, 1};
  CHECK(g2.pairing(long_root, simple_index(g2, 0)) == -3);
}

TEST_CASE("weyl vectors") {
  RootSystem a1 = build("A1");
  CHECK(a1.weyl_vector({}) == RatVec{0});
  CHECK(a1.weyl_vector({0}) == RatVec{Rat(1, 2)});

  // positivity choices of a subsystem differ by its own Weyl group:
  // rank-1 inside A2
  RootSystem a2 = build("A2");
  int i1 = simple_index(a2, 0);
  RatVec plus = a2.weyl_vector({i1});
  RatVec minus = a2.weyl_vector({a2.negative_of(i1)});
  CHECK(a2.reflect(i1, plus) == minus);

  // a genuine A1 x A1 inside B2: {a1, a1 + 2 a2} are orthogonal
  RootSystem b2 = build("B2");
  int u = b2.index_of({1, 0});
  int v = b2.index_of({1, 2});
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  REQUIRE(b2.form(u, v) == 0);
  RatVec base = b2.weyl_vector({u, v});
  std::vector<RatVec> orbit{base, b2.reflect(u, base), b2.reflect(v, base),
                            b2.reflect(u, b2.reflect(v, base))};
  for (int su : {u, b2.negative_of(u)})
    for (int sv : {v, b2.negative_of(v)}) {
      RatVec rho = b2.weyl_vector({su, sv});
      CHECK(std::count(orbit.begin(), orbit.end(), rho) == 1);
    }
}

TEST_CASE("reflections") {
  RootSystem a2 = build("A2");
  int i1 = simple_index(a2, 0);
  RatVec alpha1{1, 0}, alpha2{0, 1};
  CHECK(a2.reflect(i1, alpha1) == RatVec{-1, 0});
  CHECK(a2.reflect(i1, alpha2) == RatVec{1, 1});  // Cartan entry -1
  // fixed hyperplane
  RootSystem b2 = build("B2");
  RatVec orth{1, 2};
  CHECK(b2.reflect(b2.index_of({1, 0}), orth) == orth);
}

TEST_CASE("root permutations from linear maps") {
  RootSystem a2 = build("A2");
  RatMat id = rat_identity(2);
  CHECK(a2.root_permutation(id) == perm_identity(6));

  RatMat neg = rat_identity(2);
  neg[0][0] = neg[1][1] = -1;
  Perm p = a2.root_permutation(neg);
  for (int i = 0; i < 6; ++i) {
    CHECK(p[i] == a2.negative_of(i));
    CHECK(p[i] != i);
  }

  // s_{a1} as a matrix: order two, fixes exactly the roots orthogonal to a1
  // (there are none in A2)
  int i1 = simple_index(a2, 0);
  RatMat s1(2, RatVec(2, 0));
  s1[0][0] = -1;
  s1[0][1] = 1;
  s1[1][1] = 1;
  Perm sp = a2.root_permutation(s1);
  CHECK(sp == a2.reflection_perm(i1));
  CHECK(perm_is_identity(perm_compose(sp, sp)));
  std::set<int> fixed, orthogonal;
  for (int i = 0; i < 6; ++i) {
    if (sp[i] == i) fixed.insert(i);
    if (a2.form(i, i1) == 0) orthogonal.insert(i);
  }
  CHECK(fixed == orthogonal);
  CHECK(fixed.empty());

  // non-root-preserving map
  RatMat twice = rat_identity(2);
  twice[0][0] = twice[1][1] = 2;
  CHECK_THROWS_AS(a2.root_permutation(twice), validation_error);
}

TEST_CASE("structural invariants across types") {
  std::mt19937 rng(20240811);
  for (const char* label : {"A1", "A3", "B2", "B3", "C3", "D4", "F4", "G2"}) {
    RootSystem rs = build(label);
    CAPTURE(label);

    // positives and negatives partition the roots; height-positivity
    for (int i = 0; i < rs.size(); ++i) {
      int first_nonzero = 0;
      for (int c : rs.root(i))
        if (c != 0) {
          first_nonzero = c;
          break;
        }
      CHECK(rs.is_positive(i) == (first_nonzero > 0));
      CHECK(rs.form(i, i) > 0);
      CHECK(rs.root(rs.negative_of(i))[0] == -rs.root(i)[0]);
    }

    // random Weyl words act by root permutations preserving the form
    std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
    Perm w = perm_identity(rs.size());
    for (int step = 0; step < 12; ++step)
      w = perm_compose(rs.reflection_perm(simple_index(rs, pick(rng))), w);
    CHECK(is_weyl_permutation(rs, w));
  }
}

TEST_CASE("cartan data tables") {
  CHECK(weyl_order(CartanType::parse("A5")) == 720);
  CHECK(weyl_order(CartanType::parse("B8")) == 10321920);
  CHECK(weyl_order(CartanType::parse("D2")) == 4);
  CHECK(weyl_order(CartanType::parse("D8")) == 5160960);
  CHECK(weyl_order(CartanType::parse("E6")) == 51840);
  CHECK(weyl_order(CartanType::parse("E7")) == 2903040);
  CHECK(weyl_order(CartanType::parse("E8")) == 696729600);

  CHECK(diagram_automorphisms(CartanType::parse("A1")).size() == 1);
  CHECK(diagram_automorphisms(CartanType::parse("A4")).size() == 2);
  CHECK(diagram_automorphisms(CartanType::parse("B5")).size() == 1);
  CHECK(diagram_automorphisms(CartanType::parse("D4")).size() == 6);
  CHECK(diagram_automorphisms(CartanType::parse("D5")).size() == 2);
  CHECK(diagram_automorphisms(CartanType::parse("E6")).size() == 2);
  CHECK(diagram_automorphisms(CartanType::parse("E7")).size() == 1);
  CHECK(diagram_automorphisms(CartanType::parse("F4")).size() == 1);
  CHECK(diagram_automorphisms(CartanType::parse("G2")).size() == 1);
  // the two A1 components of D2 can be exchanged
  CHECK(diagram_automorphisms(CartanType::parse("D2")).size() == 2);
}

TEST_CASE("deterministic construction") {
  RootSystem first = build("F4");
  RootSystem second = build("F4");
  CHECK(first.roots() == second.roots());
  CHECK(first.form_matrix() == second.form_matrix());
}

TEST_CASE("weight coordinate conversions") {
  for (const char* label : {"A2", "B3", "G2"}) {
    RootSystem rs = build(label);
    CAPTURE(label);
    // fundamental-weight coordinates of root i are its coroot pairings
    for (int i = 0; i < rs.size(); ++i) {
      RatVec simple(rs.rank());
      for (int a = 0; a < rs.rank(); ++a) simple[a] = rs.root(i)[a];
      RatVec w = rs.to_weight_coords(simple);
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(w[j] == rs.pairing(simple, simple_index(rs, j)));
      CHECK(rs.from_weight_coords(w) == simple);
    }
    // pairing_weight agrees with the rational pairing on weight vectors
    for (int j = 0; j < rs.rank(); ++j) {
      std::vector<Int> omega(rs.rank(), 0);
      omega[j] = 1;
      RatVec omega_r(rs.rank(), 0);
      omega_r[j] = 1;
      RatVec omega_simple = rs.from_weight_coords(omega_r);
      for (int beta = 0; beta < rs.size(); ++beta)
        CHECK(Rat(rs.pairing_weight(omega, beta)) ==
              rs.pairing(omega_simple, beta));
    }
  }
}
