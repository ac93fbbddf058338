#include "rwg/error.hpp"
#include "rwg/oracle.hpp"
#include "rwg/subsystems.hpp"
#include "rwg/weylperm.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace rwg;

namespace {

std::shared_ptr<const RootSystem> shared_rs(const char* label) {
  return std::make_shared<const RootSystem>(
      RootSystem::build(CartanType::parse(label)));
}

// Expand a positive member as a nonnegative integer combination of the
// simple roots by repeated subtraction; empty result means failure.
bool expands_over(const RootSystem& rs, int member,
                  const std::vector<int>& simples) {
  std::vector<int> current = rs.root(member);
  std::set<std::vector<int>> seen;
  while (std::any_of(current.begin(), current.end(), [](int x) { return x != 0; })) {
    if (!seen.insert(current).second) return false;
    bool progressed = false;
    for (int s : simples) {
      // subtract s if the remainder stays a root or reaches zero
      std::vector<int> next(current.size());
      for (std::size_t a = 0; a < current.size(); ++a)
        next[a] = current[a] - rs.root(s)[a];
      bool zero = std::all_of(next.begin(), next.end(), [](int x) { return x == 0; });
      if (zero || rs.index_of(next) >= 0) {
        current = next;
        progressed = true;
        break;
      }
    }
    if (!progressed) return false;
  }
  return true;
}

InvolutionDatum a3_flip(int sign_mid, int sign_high) {
  InvolutionDatum d;
  d.rs = shared_rs("A3");
  d.theta = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  d.seeds.push_back({{0, 1, 0}, sign_mid});
  d.seeds.push_back({{1, 1, 1}, sign_high});
  return d;
}

}  // namespace

TEST_CASE("simple roots of subsystems") {
  auto rs = shared_rs("A2");
  std::vector<int> all(rs->size());
  for (int i = 0; i < rs->size(); ++i) all[i] = i;
  auto simples = simple_roots_of(*rs, all, std::nullopt);
  std::vector<int> expected{rs->index_of({1, 0}), rs->index_of({0, 1})};
  std::sort(expected.begin(), expected.end());
  CHECK(simples == expected);

  int high = rs->index_of({1, 1});
  std::vector<int> rank1{high, rs->negative_of(high)};
  std::sort(rank1.begin(), rank1.end());
  CHECK(simple_roots_of(*rs, rank1, std::nullopt) == std::vector<int>{high});

  // degenerate positivity vector
  RatVec bad(2, 0);
  CHECK_THROWS_AS(simple_roots_of(*rs, rank1, std::optional<RatVec>(bad)),
                  validation_error);

  // not a subsystem: missing the negative
  CHECK_THROWS_AS(simple_roots_of(*rs, {high}, std::nullopt), invariant_violation);
}

TEST_CASE("simple roots expand every positive member") {
  OracleBudget budget;
  std::mt19937_64 rng(42);
  for (const char* label : {"B4", "D4", "F4"}) {
    auto rs = shared_rs(label);
    for (int trial = 0; trial < 10; ++trial) {
      InvolutionDatum d = fuzz_datum(rs, rng, budget);
      RootClassification cl = validate(d);
      if (cl.imaginary_roots.empty()) continue;
      auto simples = simple_roots_of(*rs, cl.imaginary_roots, std::nullopt);
      for (int i : cl.imaginary_roots)
        if (rs->is_positive(i)) CHECK(expands_over(*rs, i, simples));
    }
  }
}

TEST_CASE("component type identification") {
  auto g2 = shared_rs("G2");
  std::vector<int> all(g2->size());
  for (int i = 0; i < g2->size(); ++i) all[i] = i;
  Subsystem full = make_subsystem(*g2, all, std::nullopt);
  CHECK(identify_type(full) == std::vector<CartanType>{CartanType::parse("G2")});
  CHECK(weyl_order_of(full) == 12);

  // the long roots of G2 form an A2
  std::vector<int> longs;
  for (int i = 0; i < g2->size(); ++i)
    if (g2->form(i, i) == 6) longs.push_back(i);
  REQUIRE(longs.size() == 6);
  Subsystem long_sub = make_subsystem(*g2, longs, std::nullopt);
  CHECK(identify_type(long_sub) == std::vector<CartanType>{CartanType::parse("A2")});

  // compact F4: the imaginary subsystem is everything
  auto f4 = shared_rs("F4");
  std::vector<int> f4_all(f4->size());
  for (int i = 0; i < f4->size(); ++i) f4_all[i] = i;
  CHECK(identify_type(make_subsystem(*f4, f4_all, std::nullopt)) ==
        std::vector<CartanType>{CartanType::parse("F4")});

  // an A1 x A1 inside B2
  auto b2 = shared_rs("B2");
  int u = b2->index_of({1, 0}), v = b2->index_of({1, 2});
  std::vector<int> pair{u, v, b2->negative_of(u), b2->negative_of(v)};
  std::sort(pair.begin(), pair.end());
  Subsystem two = make_subsystem(*b2, pair, std::nullopt);
  CHECK(identify_type(two) ==
        std::vector<CartanType>{CartanType::parse("A1"), CartanType::parse("A1")});
  CHECK(weyl_order_of(two) == 4);
}

TEST_CASE("theta-swap splitting of the orthogonal complement") {
  // empty input
  auto a2 = shared_rs("A2");
  ThetaSwapSplit empty = split_theta_swapped(*a2, {}, perm_identity(6));
  CHECK(empty.psi1.empty());
  CHECK(empty.psi2.empty());

  // A3 diagram flip: phi_c = {+-a1, +-a3}, exchanged by theta
  InvolutionDatum d = a3_flip(1, 1);
  RootClassification cl = validate(d);
  Subsystem phi_c = compute_phi_c(d, cl);
  const RootSystem& rs = *d.rs;
  std::vector<int> expected{rs.index_of({1, 0, 0}), rs.index_of({0, 0, 1}),
                            rs.negative_of(rs.index_of({1, 0, 0})),
                            rs.negative_of(rs.index_of({0, 0, 1}))};
  std::sort(expected.begin(), expected.end());
  CHECK(phi_c.members == expected);
  CHECK(identify_type(phi_c) ==
        std::vector<CartanType>{CartanType::parse("A1"), CartanType::parse("A1")});

  ThetaSwapSplit split = split_theta_swapped(rs, phi_c.members, cl.theta_perm);
  CHECK(split.psi1.size() == 2);
  CHECK(split.psi2.size() == 2);
  std::vector<int> image;
  for (int i : split.psi1) image.push_back(cl.theta_perm[i]);
  std::sort(image.begin(), image.end());
  CHECK(image == split.psi2);
  for (int i : split.psi1)
    for (int j : split.psi2) CHECK(rs.form(i, j) == 0);

  // precondition violations are surfaced
  std::vector<int> with_imaginary = phi_c.members;
  int mid = rs.index_of({0, 1, 0});
  with_imaginary.push_back(mid);
  with_imaginary.push_back(rs.negative_of(mid));
  std::sort(with_imaginary.begin(), with_imaginary.end());
  CHECK_THROWS_AS(split_theta_swapped(rs, with_imaginary, cl.theta_perm),
                  invariant_violation);
}

TEST_CASE("dominant imaginary positive system") {
  // compact datum: the global positive half already makes rho dominant
  InvolutionDatum compact;
  compact.rs = shared_rs("B3");
  compact.theta = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    std::vector<int> e(3, 0);
    e[i] = 1;
    compact.seeds.push_back({e, 1});
  }
  RootClassification cl = validate(compact);
  auto pos = dominant_imaginary_positive_system(*compact.rs, cl);
  std::vector<int> global;
  for (int i = 0; i < compact.rs->num_positive(); ++i) global.push_back(i);
  CHECK(pos == global);

  // empty compact part: the tie-break alone decides, deterministically
  InvolutionDatum sl2;
  sl2.rs = shared_rs("A1");
  sl2.theta = {{1}};
  sl2.seeds.push_back({{1}, -1});
  RootClassification cl2 = validate(sl2);
  auto pos2 = dominant_imaginary_positive_system(*sl2.rs, cl2);
  CHECK(pos2 == dominant_imaginary_positive_system(*sl2.rs, cl2));
  CHECK(pos2.size() == 1);

  // random data: dominance holds on every positive imaginary root
  OracleBudget budget;
  std::mt19937_64 rng(7);
  auto rs = shared_rs("B3");
  for (int trial = 0; trial < 30; ++trial) {
    InvolutionDatum d = fuzz_datum(rs, rng, budget);
    RootClassification c = validate(d);
    auto im_pos = dominant_imaginary_positive_system(*rs, c);
    auto rho2 = two_rho_im_c(*rs, c);
    CHECK(2 * im_pos.size() == c.imaginary_roots.size());
    for (int i : im_pos) CHECK(rs->form_iv(i, rho2) >= 0);
    // valid positive system: closed under addition within the subsystem
    std::set<int> posset(im_pos.begin(), im_pos.end());
    for (int i : im_pos)
      for (int j : im_pos) {
        std::vector<int> sum(rs->rank());
        for (int a = 0; a < rs->rank(); ++a)
          sum[a] = rs->root(i)[a] + rs->root(j)[a];
        int k = rs->index_of(sum);
        if (k >= 0 && c.kind[k] == RootKind::imaginary) CHECK(posset.count(k));
      }
  }
}

TEST_CASE("superorthogonal set") {
  // compact datum: no imaginary root is orthogonal to rho
  InvolutionDatum compact;
  compact.rs = shared_rs("G2");
  compact.theta = {{1, 0}, {0, 1}};
  compact.seeds.push_back({{1, 0}, 1});
  compact.seeds.push_back({{0, 1}, 1});
  RootClassification cl = validate(compact);
  auto b = superorthogonal_b(*compact.rs, cl,
                             dominant_imaginary_positive_system(*compact.rs, cl));
  CHECK(b.roots.empty());

  // sl(2,R): B = {alpha}
  InvolutionDatum sl2;
  sl2.rs = shared_rs("A1");
  sl2.theta = {{1}};
  sl2.seeds.push_back({{1}, -1});
  RootClassification cl2 = validate(sl2);
  auto b2 = superorthogonal_b(*sl2.rs, cl2,
                              dominant_imaginary_positive_system(*sl2.rs, cl2));
  CHECK(b2.roots == std::vector<int>{0});

  // random rank-4 data: members are a basis of the rho-orthogonal
  // subsystem (every positive member expands over them), pairwise
  // orthogonal, noncompact
  OracleBudget budget;
  std::mt19937_64 rng(4242);
  for (const char* label : {"A4", "B4", "C4", "D4", "F4"}) {
    auto rs = shared_rs(label);
    for (int trial = 0; trial < 10; ++trial) {
      InvolutionDatum d = fuzz_datum(rs, rng, budget);
      RootClassification c = validate(d);
      auto im_pos = dominant_imaginary_positive_system(*rs, c);
      auto bb = superorthogonal_b(*rs, c, im_pos);
      auto rho2 = two_rho_im_c(*rs, c);
      std::vector<int> rho_orthogonal;
      for (int i : c.imaginary_roots)
        if (rs->form_iv(i, rho2) == 0) rho_orthogonal.push_back(i);
      std::set<int> pos_im(im_pos.begin(), im_pos.end());
      for (int i : rho_orthogonal)
        if (pos_im.count(i)) CHECK(expands_over(*rs, i, bb.roots));
      for (int i : bb.roots) {
        CHECK(c.sign[i] == -1);
        for (int j : bb.roots)
          if (i != j) CHECK(rs->form(i, j) == 0);
      }
    }
  }
}

TEST_CASE("stabilizers match orthogonal subsystems") {
  // for dominant v the stabilizer of v in W is the Weyl group of the
  // orthogonal subsystem, and likewise for several vectors at once
  OracleBudget budget;
  std::mt19937_64 rng(11);
  for (const char* label : {"A3", "B3", "C3"}) {
    auto rs = shared_rs(label);
    auto w_all = enumerate_weyl(*rs, budget);
    std::uniform_int_distribution<int> coef(0, 2);
    for (int trial = 0; trial < 8; ++trial) {
      // dominant vector from nonnegative weight coordinates
      RatVec weight(rs->rank());
      for (int a = 0; a < rs->rank(); ++a) weight[a] = coef(rng);
      RatVec v = rs->from_weight_coords(weight);

      std::vector<int> orthogonal;
      RatVec root_v(rs->rank());
      for (int i = 0; i < rs->size(); ++i) {
        for (int a = 0; a < rs->rank(); ++a) root_v[a] = rs->root(i)[a];
        if (rs->form_rr(root_v, v) == 0) orthogonal.push_back(i);
      }
      std::vector<Perm> gens;
      if (!orthogonal.empty())
        for (int s : simple_roots_of(*rs, orthogonal, std::nullopt))
          gens.push_back(rs->reflection_perm(s));
      auto subgroup = enumerate_group(rs->size(), gens, budget.max_group_order);

      std::vector<Perm> stabilizer;
      for (const auto& w : w_all) {
        auto m = rs->matrix_of_perm(w);
        RatMat wm(rs->rank(), RatVec(rs->rank()));
        for (int i = 0; i < rs->rank(); ++i)
          for (int j = 0; j < rs->rank(); ++j) wm[i][j] = m[i][j];
        if (rat_mul_vec(wm, v) == v) stabilizer.push_back(w);
      }
      std::sort(stabilizer.begin(), stabilizer.end());
      CHECK(stabilizer == subgroup);
    }

    // pointwise stabilizer of several arbitrary vectors
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<RatVec> lambdas(2, RatVec(rs->rank()));
      for (auto& l : lambdas)
        for (int a = 0; a < rs->rank(); ++a) l[a] = entry(rng);

      std::vector<int> orthogonal;
      RatVec root_v(rs->rank());
      for (int i = 0; i < rs->size(); ++i) {
        for (int a = 0; a < rs->rank(); ++a) root_v[a] = rs->root(i)[a];
        bool all_zero = true;
        for (const auto& l : lambdas)
          if (rs->form_rr(root_v, l) != 0) all_zero = false;
        if (all_zero) orthogonal.push_back(i);
      }
      std::vector<Perm> gens;
      if (!orthogonal.empty())
        for (int s : simple_roots_of(*rs, orthogonal, std::nullopt))
          gens.push_back(rs->reflection_perm(s));
      auto subgroup = enumerate_group(rs->size(), gens, budget.max_group_order);

      std::vector<Perm> stabilizer;
      for (const auto& w : w_all) {
        auto m = rs->matrix_of_perm(w);
        RatMat wm(rs->rank(), RatVec(rs->rank()));
        for (int i = 0; i < rs->rank(); ++i)
          for (int j = 0; j < rs->rank(); ++j) wm[i][j] = m[i][j];
        bool fixes_all = true;
        for (const auto& l : lambdas)
          if (rat_mul_vec(wm, l) != l) fixes_all = false;
        if (fixes_all) stabilizer.push_back(w);
      }
      std::sort(stabilizer.begin(), stabilizer.end());
      CHECK(stabilizer == subgroup);
    }
  }
}

TEST_CASE("orthogonal simple subsets are superorthogonal") {
  for (const char* label : {"A4", "B4", "C4", "D4", "F4", "G2", "A8", "D8", "E8"}) {
    auto rs = shared_rs(label);
    CAPTURE(label);
    const int n = rs->rank();
    std::vector<int> simples;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      simples.push_back(rs->index_of(e));
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(simples[i]);
      bool orthogonal = true;
      for (std::size_t a = 0; a < subset.size() && orthogonal; ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
          if (rs->form(subset[a], subset[b]) != 0) {
            orthogonal = false;
            break;
          }
      if (!orthogonal) continue;
      // scan the span: only +-members allowed
      RatMat cols(n, RatVec(subset.size()));
      for (std::size_t c = 0; c < subset.size(); ++c)
        for (int a = 0; a < n; ++a) cols[a][c] = rs->root(subset[c])[a];
      SpanSolver solver(std::move(cols));
      std::set<int> allowed;
      for (int i : subset) {
        allowed.insert(i);
        allowed.insert(rs->negative_of(i));
      }
      RatVec vec(n);
      for (int i = 0; i < rs->size(); ++i) {
        for (int a = 0; a < n; ++a) vec[a] = rs->root(i)[a];
        if (solver.in_span(vec)) CHECK(allowed.count(i));
      }
    }
  }
}

TEST_CASE("component weyl orders match the permutation engine") {
  OracleBudget budget;
  std::mt19937_64 rng(5);
  for (const char* label : {"A3", "B3", "D4"}) {
    auto rs = shared_rs(label);
    for (int trial = 0; trial < 10; ++trial) {
      InvolutionDatum d = fuzz_datum(rs, rng, budget);
      RootClassification c = validate(d);
      if (c.imaginary_roots.empty()) continue;
      Subsystem sub = make_subsystem(*rs, c.imaginary_roots, std::nullopt);
      std::vector<Perm> gens;
      for (int s : sub.simple_roots) gens.push_back(rs->reflection_perm(s));
      CHECK(PermGroup::generate(rs->size(), gens).order() == weyl_order_of(sub));
      for (const auto& comp_a : sub.components)
        for (const auto& comp_b : sub.components) {
          if (&comp_a == &comp_b) continue;
          for (int i : comp_a.members)
            for (int j : comp_b.members) CHECK(rs->form(i, j) == 0);
        }
    }
  }
}
