#include "rwg/oracle.hpp"

#include "rwg/error.hpp"
#include "rwg/subsystems.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace rwg {

namespace {

using PermSet = std::unordered_set<Perm, PermHash>;

PermSet to_set(const std::vector<Perm>& v) { return PermSet(v.begin(), v.end()); }

std::string size_detail(const char* what, std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << what << ": " << a << " vs " << b;
  return os.str();
}

}  // namespace

bool Verdict::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Verdict::add(std::string identity, bool pass, std::string detail) {
  checks.push_back({std::move(identity), pass, std::move(detail)});
}

std::vector<Perm> enumerate_group(int degree, const std::vector<Perm>& gens,
                                  std::uint64_t max_order) {
  PermSet seen;
  std::vector<Perm> elements{perm_identity(degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = perm_compose(g, elements[i]);
      if (seen.insert(next).second) {
        if (seen.size() > max_order)
          throw budget_exceeded("group enumeration exceeded the budget");
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Perm> enumerate_weyl(const RootSystem& rs, const OracleBudget& budget) {
  if (rs.rank() > budget.max_rank)
    throw budget_exceeded("rank " + std::to_string(rs.rank()) +
                          " above the enumeration bound");
  if (weyl_order(rs.type()) > budget.max_group_order)
    throw budget_exceeded("Weyl group of " + rs.type().str() +
                          " above the order budget");
  std::vector<Perm> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> e(rs.rank(), 0);
    e[i] = 1;
    gens.push_back(rs.reflection_perm(rs.index_of(e)));
  }
  auto elements = enumerate_group(rs.size(), gens, budget.max_group_order);
  if (elements.size() != weyl_order(rs.type()))
    throw invariant_violation("weyl_order_formula",
                              "closure count disagrees with the order formula");
  return elements;
}

Verdict check_theta_centralizer_factorization(const InvolutionDatum& datum,
                                              const OracleBudget& budget) {
  Verdict v;
  const RootSystem& rs = *datum.rs;
  RootClassification cl = validate(datum);
  auto w_all = enumerate_weyl(rs, budget);

  std::vector<Perm> centralizer;
  for (const auto& w : w_all)
    if (perm_commute(w, cl.theta_perm)) centralizer.push_back(w);
  PermSet centralizer_set = to_set(centralizer);

  Subsystem phi_c = compute_phi_c(datum, cl);
  ThetaSwapSplit split = split_theta_swapped(rs, phi_c.members, cl.theta_perm);
  ThetaFixedGenerators tf = theta_fixed_subgroup_decomposition(rs, cl, split);

  auto h_c = enumerate_group(rs.size(), tf.c_theta, budget.max_group_order);
  auto h_re = enumerate_group(rs.size(), tf.re, budget.max_group_order);
  auto h_im = enumerate_group(rs.size(), tf.im, budget.max_group_order);

  bool inside = true;
  for (const auto* part : {&h_c, &h_re, &h_im})
    for (const auto& w : *part)
      if (!centralizer_set.count(w)) inside = false;
  v.add("factors_centralize_theta", inside);

  PermSet product;
  bool unique = true;
  for (const auto& a : h_c)
    for (const auto& b : h_re)
      for (const auto& c : h_im)
        if (!product.insert(perm_compose(a, perm_compose(b, c))).second)
          unique = false;
  v.add("product_decomposition_unique", unique,
        unique ? "" : "repeated product of factor elements");
  bool cover = product.size() == centralizer_set.size();
  std::string cover_witness;
  for (const auto& w : product)
    if (!centralizer_set.count(w)) {
      cover = false;
      if (cover_witness.empty()) cover_witness = "extra " + perm_cycles(w);
    }
  if (!cover && cover_witness.empty())
    cover_witness = size_detail("product vs centralizer", product.size(),
                                centralizer_set.size());
  v.add("centralizer_equals_factor_product", cover, cover_witness);

  PermSet re_set = to_set(h_re), im_set = to_set(h_im);
  bool re_normal = true, im_normal = true;
  std::string re_witness, im_witness;
  for (const auto& w : centralizer) {
    Perm winv = perm_inverse(w);
    for (const auto& g : tf.re)
      if (!re_set.count(perm_compose(w, perm_compose(g, winv)))) {
        re_normal = false;
        if (re_witness.empty()) re_witness = "conjugator " + perm_cycles(w);
      }
    for (const auto& g : tf.im)
      if (!im_set.count(perm_compose(w, perm_compose(g, winv)))) {
        im_normal = false;
        if (im_witness.empty()) im_witness = "conjugator " + perm_cycles(w);
      }
  }
  v.add("re_normal_in_centralizer", re_normal, re_witness);
  v.add("im_normal_in_centralizer", im_normal, im_witness);

  PermSet re_im_products;
  for (const auto& b : h_re)
    for (const auto& c : h_im) re_im_products.insert(perm_compose(b, c));
  bool c_trivial = true;
  for (const auto& a : h_c)
    if (!perm_is_identity(a) && re_im_products.count(a)) c_trivial = false;
  v.add("c_theta_meets_re_im_trivially", c_trivial);
  bool re_im_trivial = true;
  for (const auto& b : h_re)
    if (!perm_is_identity(b) && im_set.count(b)) re_im_trivial = false;
  v.add("re_meets_im_trivially", re_im_trivial);
  return v;
}

Verdict check_imaginary_factorization(const InvolutionDatum& datum,
                                      const OracleBudget& budget) {
  Verdict v;
  const RootSystem& rs = *datum.rs;
  if (rs.rank() > budget.max_rank)
    throw budget_exceeded("rank above the enumeration bound");
  RootClassification cl = validate(datum);

  std::vector<Perm> im_gens;
  if (!cl.imaginary_roots.empty())
    for (int s : simple_roots_of(rs, cl.imaginary_roots, std::nullopt))
      im_gens.push_back(rs.reflection_perm(s));
  auto w_im = enumerate_group(rs.size(), im_gens, budget.max_group_order);

  std::vector<Perm> w_im2, q;
  auto rho2 = two_rho_im_c(rs, cl);
  for (const auto& w : w_im) {
    if (!w_im2_membership(rs, w, cl)) continue;
    w_im2.push_back(w);
    if (q_membership(rs, w, rho2)) q.push_back(w);
  }

  // fixing rho_im_c is the same as preserving the compact positive system
  {
    std::vector<int> compact_pos;
    for (int i : cl.compact_imaginary)
      if (rs.is_positive(i)) compact_pos.push_back(i);
    bool same = true;
    for (const auto& w : w_im2) {
      bool preserves = true;
      for (int i : compact_pos)
        if (!rs.is_positive(w[i])) preserves = false;
      bool fixes = q_membership(rs, w, rho2);
      if (preserves != fixes) same = false;
    }
    v.add("q_equals_positive_system_stabilizer", same);
  }
  auto w_imc = enumerate_group(rs.size(), compact_imaginary_generators(rs, cl),
                               budget.max_group_order);

  std::vector<int> im_positive = dominant_imaginary_positive_system(rs, cl);
  SuperorthogonalSet b = superorthogonal_b(rs, cl, im_positive);

  // (i) noncompact and superorthogonal, by definition scans.
  bool noncompact = true;
  for (int i : b.roots)
    if (cl.sign[i] >= 0) noncompact = false;
  v.add("b_members_noncompact", noncompact);
  bool superorth = true;
  if (!b.roots.empty()) {
    RatMat cols(rs.rank(), RatVec(b.roots.size()));
    for (std::size_t c = 0; c < b.roots.size(); ++c)
      for (int a = 0; a < rs.rank(); ++a) cols[a][c] = rs.root(b.roots[c])[a];
    SpanSolver solver(std::move(cols));
    std::vector<char> member(rs.size(), 0);
    for (int i : b.roots) member[i] = member[rs.negative_of(i)] = 1;
    for (int i = 0; i < rs.size() && superorth; ++i) {
      RatVec vec(rs.rank());
      for (int a = 0; a < rs.rank(); ++a) vec[a] = rs.root(i)[a];
      if (solver.in_span(vec) && !member[i]) superorth = false;
    }
  }
  v.add("b_superorthogonal", superorth);

  // (ii) order product, trivial intersection, normality, cover.
  v.add("im2_order_product", w_im2.size() == q.size() * w_imc.size(),
        size_detail("im2 vs q*imc", w_im2.size(), q.size() * w_imc.size()));
  PermSet imc_set = to_set(w_imc);
  bool q_trivial = true;
  for (const auto& w : q)
    if (!perm_is_identity(w) && imc_set.count(w)) q_trivial = false;
  v.add("q_meets_im_c_trivially", q_trivial);
  PermSet im2_set = to_set(w_im2);
  bool normal = true;
  for (const auto& w : w_im2) {
    Perm winv = perm_inverse(w);
    for (const auto& s : w_imc)
      if (!imc_set.count(perm_compose(w, perm_compose(s, winv)))) normal = false;
  }
  v.add("im_c_normal_in_im2", normal);
  PermSet product;
  for (const auto& a : q)
    for (const auto& m : w_imc) product.insert(perm_compose(a, m));
  bool cover = product.size() == w_im2.size();
  for (const auto& w : product)
    if (!im2_set.count(w)) cover = false;
  v.add("im2_equals_q_times_im_c", cover);

  // (iii) q equals the preserver intersected with the Weyl group of the
  // rho-orthogonal imaginary subsystem.
  std::vector<int> im_rho;
  for (int i : cl.imaginary_roots)
    if (rs.form_iv(i, rho2) == 0) im_rho.push_back(i);
  std::vector<Perm> rho_gens;
  if (!im_rho.empty())
    for (int s : simple_roots_of(rs, im_rho, std::nullopt))
      rho_gens.push_back(rs.reflection_perm(s));
  auto w_im_rho = enumerate_group(rs.size(), rho_gens, budget.max_group_order);
  PermSet rho_set = to_set(w_im_rho);
  PermSet q_set = to_set(q);
  bool iii = true;
  for (const auto& w : w_im2)
    if (rho_set.count(w) != q_set.count(w)) iii = false;
  for (const auto& w : q)
    if (!rho_set.count(w)) iii = false;
  v.add("q_equals_im2_cap_w_im_rho", iii);
  return v;
}

Verdict check_parity_set(const InvolutionDatum& datum, LatticeMode mode,
                         const OracleBudget& budget) {
  Verdict v;
  const RootSystem& rs = *datum.rs;
  RootClassification cl = validate(datum);
  std::vector<int> im_positive = dominant_imaginary_positive_system(rs, cl);
  SuperorthogonalSet b = superorthogonal_b(rs, cl, im_positive);
  const std::size_t m = b.roots.size();
  if (m > 20) throw budget_exceeded("parity enumeration above 2^20");

  IntMat theta_p = theta_on_lattice(rs, datum.theta, mode);
  IntegerLattice p_theta = fixed_lattice(theta_p);
  EpsilonSet from_nullspace = epsilon_set(rs, b.roots, p_theta, mode);

  // Spanning set: the basis, pairwise sums, the total sum, and the columns
  // of (1 + theta); all lie in the fixed lattice.
  std::vector<std::vector<Int>> spanning = p_theta.basis;
  for (std::size_t i = 0; i < p_theta.basis.size(); ++i)
    for (std::size_t j = i + 1; j < p_theta.basis.size(); ++j) {
      std::vector<Int> s(p_theta.basis[i]);
      for (std::size_t a = 0; a < s.size(); ++a) s[a] += p_theta.basis[j][a];
      spanning.push_back(std::move(s));
    }
  if (!p_theta.basis.empty()) {
    std::vector<Int> total(p_theta.basis[0].size(), 0);
    for (const auto& row : p_theta.basis)
      for (std::size_t a = 0; a < row.size(); ++a) total[a] += row[a];
    spanning.push_back(std::move(total));
  }
  for (std::size_t j = 0; j < theta_p.size(); ++j) {
    std::vector<Int> col(theta_p.size());
    for (std::size_t a = 0; a < theta_p.size(); ++a)
      col[a] = theta_p[a][j] + (a == j ? 1 : 0);
    spanning.push_back(std::move(col));
  }

  std::vector<std::vector<std::uint8_t>> brute;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (const auto& mu : spanning) {
      Int acc = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) acc += lattice_pairing(rs, mu, b.roots[i], mode);
      if (acc % 2 != 0) { ok = false; break; }
    }
    if (ok) {
      std::vector<std::uint8_t> eps(m);
      for (std::size_t i = 0; i < m; ++i) eps[i] = (mask >> i) & 1;
      brute.push_back(std::move(eps));
    }
  }
  std::sort(brute.begin(), brute.end());
  v.add("parity_nullspace_equals_enumeration", brute == from_nullspace.members,
        size_detail("enumerated vs nullspace", brute.size(),
                    from_nullspace.members.size()));
  return v;
}

Verdict check_total_group(const InvolutionDatum& datum, LatticeMode mode,
                          const OracleBudget& budget) {
  Verdict v;
  const RootSystem& rs = *datum.rs;
  RootClassification cl = validate(datum);
  auto w_all = enumerate_weyl(rs, budget);
  PermSet centralizer;
  for (const auto& w : w_all)
    if (perm_commute(w, cl.theta_perm)) centralizer.insert(w);

  RealWeylDecomposition dec;
  try {
    dec = compute(datum, mode);
  } catch (const invariant_violation& e) {
    v.add("total_group_structure", false, e.what());
    return v;
  }
  v.add("total_group_structure", true);
  std::vector<Perm> all_gens = dec.gens_c_theta;
  for (const auto* gs : {&dec.gens_re, &dec.gens_a, &dec.gens_im_c})
    all_gens.insert(all_gens.end(), gs->begin(), gs->end());
  auto total = enumerate_group(rs.size(), all_gens, budget.max_group_order);
  bool inside = true;
  for (const auto& w : total)
    if (!centralizer.count(w)) inside = false;
  v.add("total_inside_theta_centralizer", inside);
  v.add("total_order_equals_enumeration", total.size() == dec.total_order,
        size_detail("closure vs chain", total.size(), dec.total_order));

  PermSet total_set = to_set(total);
  bool lower = true;
  std::vector<Perm> lower_gens = dec.gens_c_theta;
  lower_gens.insert(lower_gens.end(), dec.gens_re.begin(), dec.gens_re.end());
  lower_gens.insert(lower_gens.end(), dec.gens_im_c.begin(), dec.gens_im_c.end());
  for (const auto& w :
       enumerate_group(rs.size(), lower_gens, budget.max_group_order))
    if (!total_set.count(w)) lower = false;
  v.add("total_contains_proven_factors", lower);
  return v;
}

Verdict check_definitional(const InvolutionDatum& datum,
                           const OracleBudget& budget) {
  Verdict v;
  for (auto& c : check_theta_centralizer_factorization(datum, budget).checks)
    v.checks.push_back(std::move(c));
  for (auto& c : check_imaginary_factorization(datum, budget).checks)
    v.checks.push_back(std::move(c));
  for (LatticeMode mode : {LatticeMode::weight, LatticeMode::root}) {
    Verdict p = check_parity_set(datum, mode, budget);
    for (auto& c : p.checks) {
      c.identity += std::string("_") + lattice_mode_name(mode);
      v.checks.push_back(std::move(c));
    }
  }
  return v;
}

Verdict check_all(const InvolutionDatum& datum, LatticeMode mode,
                  const OracleBudget& budget) {
  Verdict v = check_definitional(datum, budget);
  for (auto& c : check_total_group(datum, mode, budget).checks)
    v.checks.push_back(std::move(c));
  return v;
}

std::vector<Perm> automorphism_group(const RootSystem& rs,
                                     std::uint64_t max_order) {
  std::vector<Perm> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> e(rs.rank(), 0);
    e[i] = 1;
    gens.push_back(rs.reflection_perm(rs.index_of(e)));
  }
  Perm negation(rs.size());
  for (int i = 0; i < rs.size(); ++i) negation[i] = rs.negative_of(i);
  gens.push_back(std::move(negation));
  for (const auto& diagram_perm : diagram_automorphisms(rs.type())) {
    std::vector<std::vector<int>> m(rs.rank(), std::vector<int>(rs.rank(), 0));
    for (int j = 0; j < rs.rank(); ++j) m[diagram_perm[j]][j] = 1;
    gens.push_back(rs.root_permutation(m));
  }
  return enumerate_group(rs.size(), gens, max_order);
}

std::vector<Perm> involutions_in_automorphism_group(const RootSystem& rs,
                                                    std::uint64_t max_order) {
  std::vector<Perm> out;
  for (const auto& p : automorphism_group(rs, max_order))
    if (perm_is_identity(perm_compose(p, p))) out.push_back(p);
  return out;
}

namespace {

InvolutionDatum datum_from_involution(std::shared_ptr<const RootSystem> rs,
                                      const Perm& theta_perm,
                                      const std::vector<int>& im_simples,
                                      std::uint32_t sign_mask) {
  InvolutionDatum datum;
  datum.rs = rs;
  auto m = rs->matrix_of_perm(theta_perm);
  datum.theta.assign(rs->rank(), std::vector<int>(rs->rank()));
  for (int i = 0; i < rs->rank(); ++i)
    for (int j = 0; j < rs->rank(); ++j) datum.theta[i][j] = m[i][j];
  for (std::size_t k = 0; k < im_simples.size(); ++k) {
    GradingSeed seed;
    seed.root = rs->root(im_simples[k]);
    seed.sign = (sign_mask >> k) & 1 ? -1 : 1;
    datum.seeds.push_back(std::move(seed));
  }
  return datum;
}

std::vector<int> imaginary_simples(const RootSystem& rs, const Perm& theta_perm) {
  std::vector<int> im_pos;
  for (int i = 0; i < rs.size(); ++i)
    if (theta_perm[i] == i && rs.is_positive(i)) im_pos.push_back(i);
  return indecomposables(rs, im_pos);
}

}  // namespace

std::vector<InvolutionDatum> search_matching_datum(
    const CartanType& type, const std::array<std::uint64_t, 4>& target,
    LatticeMode mode, const OracleBudget& budget) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(type));
  if (type.rank > budget.max_rank)
    throw budget_exceeded("search rank above the enumeration bound");
  std::vector<InvolutionDatum> matches;
  for (const auto& theta_perm :
       involutions_in_automorphism_group(*rs, budget.max_group_order)) {
    auto im_simples = imaginary_simples(*rs, theta_perm);
    for (std::uint32_t mask = 0; mask < (1u << im_simples.size()); ++mask) {
      InvolutionDatum datum = datum_from_involution(rs, theta_perm, im_simples, mask);
      RealWeylDecomposition dec = compute(datum, mode);
      std::array<std::uint64_t, 4> orders{dec.order_c_theta, dec.order_re,
                                          dec.order_a, dec.order_im_c};
      if (orders == target) matches.push_back(std::move(datum));
    }
  }
  return matches;
}

InvolutionDatum fuzz_datum(std::shared_ptr<const RootSystem> rs,
                           std::mt19937_64& rng, const OracleBudget& budget) {
  auto involutions =
      involutions_in_automorphism_group(*rs, budget.max_group_order);
  std::uniform_int_distribution<std::size_t> pick(0, involutions.size() - 1);
  const Perm& theta_perm = involutions[pick(rng)];
  auto im_simples = imaginary_simples(*rs, theta_perm);
  std::uniform_int_distribution<std::uint32_t> bits(
      0, im_simples.empty() ? 0 : (1u << im_simples.size()) - 1);
  return datum_from_involution(rs, theta_perm, im_simples, bits(rng));
}

}  // namespace rwg
