#include "rwg/realweyl.hpp"

#include "rwg/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace rwg {

namespace {

// All elements of a small subgroup by breadth-first closure.
std::vector<Perm> closure(int degree, const std::vector<Perm>& gens,
                          std::uint64_t limit) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements{perm_identity(degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = perm_compose(g, elements[i]);
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw invariant_violation("factor_enumeration_budget",
                                    "factor too large to enumerate");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<std::vector<std::uint8_t>> gf2_row_basis(
    std::vector<std::vector<std::uint8_t>> rows) {
  std::vector<std::vector<std::uint8_t>> basis;
  if (rows.empty()) return basis;
  const std::size_t m = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) rows[i][j] ^= rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

void check_pairwise_trivial(int degree,
                            const std::vector<Perm>& gens_small,
                            const PermGroup& small_group,
                            const PermGroup& big_group,
                            const char* small_name, const char* big_name) {
  if (small_group.order() > 200000)
    throw invariant_violation("factor_enumeration_budget",
                              "intersection check exceeded the budget");
  for (const auto& w : closure(degree, gens_small, 200000)) {
    if (perm_is_identity(w)) continue;
    if (big_group.contains(w))
      throw invariant_violation(
          "factor_intersection_trivial",
          std::string(small_name) + " meets " + big_name + " nontrivially");
  }
}

}  // namespace

RealWeylDecomposition compute(const InvolutionDatum& datum, LatticeMode mode) {
  const RootSystem& rs = *datum.rs;
  const int degree = rs.size();

  RealWeylDecomposition dec;
  dec.type = rs.type();
  dec.lattice_mode = mode;

  RootClassification cl = validate(datum);

  Subsystem phi_c = compute_phi_c(datum, cl);
  ThetaSwapSplit split = split_theta_swapped(rs, phi_c.members, cl.theta_perm);

  ThetaFixedGenerators tf = theta_fixed_subgroup_decomposition(rs, cl, split);
  dec.gens_c_theta = tf.c_theta;
  dec.gens_re = tf.re;
  dec.gens_im_c = compact_imaginary_generators(rs, cl);

  std::vector<int> im_positive = dominant_imaginary_positive_system(rs, cl);
  dec.b = superorthogonal_b(rs, cl, im_positive);
  for (int i : dec.b.roots) dec.b_coords.push_back(rs.root(i));

  IntMat theta_p = theta_on_lattice(rs, datum.theta, mode);
  IntegerLattice p_theta = fixed_lattice(theta_p);
  dec.fixed_lattice_rank = static_cast<int>(p_theta.basis.size());
  dec.torsion_2rank = torsion_quotient_2rank(theta_p);
  dec.epsilon = epsilon_set(rs, dec.b.roots, p_theta, mode);

  // Candidate elements for A: one commuting involution per parity vector,
  // filtered by preservation of the compact imaginary roots. Fixing
  // rho_im_c is automatic for reflections in B and is asserted.
  auto rho2 = two_rho_im_c(rs, cl);
  std::vector<Perm> b_reflections;
  for (int i : dec.b.roots) b_reflections.push_back(rs.reflection_perm(i));
  auto product_of = [&](const std::vector<std::uint8_t>& eps) {
    Perm w = perm_identity(degree);
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (eps[i]) w = perm_compose(b_reflections[i], w);
    return w;
  };
  for (const auto& eps : dec.epsilon.members) {
    Perm w = product_of(eps);
    if (!q_membership(rs, w, rho2))
      throw invariant_violation("a_fixes_rho_im_c",
                                "parity candidate moves rho_im_c");
    if (w_im2_membership(rs, w, cl)) dec.a_members.push_back(eps);
  }
  dec.im2_filter_nontrivial = dec.a_members.size() != dec.epsilon.members.size();
  // The surviving set must still be a subgroup of GF(2)^m.
  {
    std::unordered_set<std::string> in_a;
    for (const auto& v : dec.a_members)
      in_a.insert(std::string(v.begin(), v.end()));
    for (const auto& x : dec.a_members)
      for (const auto& y : dec.a_members) {
        std::vector<std::uint8_t> z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ^ y[i];
        if (!in_a.count(std::string(z.begin(), z.end())))
          throw invariant_violation("a_xor_closed",
                                    "filtered parity set is not a subgroup");
      }
  }
  dec.a_basis = gf2_row_basis(dec.a_members);
  for (const auto& eps : dec.a_basis) dec.gens_a.push_back(product_of(eps));
  dec.order_a = static_cast<std::uint64_t>(dec.a_members.size());

  // Factor groups. Reuse stabilizer chains when generator lists coincide.
  PermGroup g_c_theta = PermGroup::generate(degree, dec.gens_c_theta);
  PermGroup g_re = PermGroup::generate(degree, dec.gens_re);
  PermGroup g_a = PermGroup::generate(degree, dec.gens_a);
  PermGroup g_im_c = PermGroup::generate(degree, dec.gens_im_c);
  dec.order_c_theta = g_c_theta.order();
  dec.order_re = g_re.order();
  dec.order_im_c = g_im_c.order();
  if (g_a.order() != dec.order_a)
    throw invariant_violation("a_faithful",
                              "parity vectors do not map injectively to A");

  std::vector<Perm> inner_gens = dec.gens_re;
  inner_gens.insert(inner_gens.end(), dec.gens_a.begin(), dec.gens_a.end());
  inner_gens.insert(inner_gens.end(), dec.gens_im_c.begin(), dec.gens_im_c.end());
  const PermGroup* inner = nullptr;
  PermGroup inner_store;
  if (dec.gens_re.empty() && dec.gens_a.empty()) {
    inner = &g_im_c;
  } else if (dec.gens_a.empty() && dec.gens_im_c.empty()) {
    inner = &g_re;
  } else {
    inner_store = PermGroup::generate(degree, inner_gens);
    inner = &inner_store;
  }

  const PermGroup* total = nullptr;
  PermGroup total_store;
  if (dec.gens_c_theta.empty()) {
    total = inner;
  } else {
    std::vector<Perm> all_gens = dec.gens_c_theta;
    all_gens.insert(all_gens.end(), inner_gens.begin(), inner_gens.end());
    total_store = PermGroup::generate(degree, all_gens);
    total = &total_store;
  }
  dec.total_order = total->order();

  // --- structural verification ---------------------------------------
  std::uint64_t product =
      dec.order_c_theta * dec.order_re * dec.order_a * dec.order_im_c;
  if (dec.total_order != product)
    throw invariant_violation("total_order_factorization",
                              "group order differs from the factor product");

  auto all_generators = {&dec.gens_c_theta, &dec.gens_re, &dec.gens_a,
                         &dec.gens_im_c};
  for (const auto* gens : all_generators)
    for (const auto& g : *gens) {
      if (!perm_commute(g, cl.theta_perm))
        throw invariant_violation("generators_commute_with_theta",
                                  "generator does not centralize theta");
      if (!is_weyl_permutation(rs, g))
        throw invariant_violation("generator_weyl_element",
                                  "generator is not an isometric root permutation");
    }

  for (const auto& a : dec.gens_a) {
    if (!perm_is_identity(perm_compose(a, a)))
      throw invariant_violation("a_elementary_abelian",
                                "generator of A is not an involution");
    for (const auto& b2 : dec.gens_a)
      if (!perm_commute(a, b2))
        throw invariant_violation("a_elementary_abelian",
                                  "generators of A do not commute");
    if (!w_im2_membership(rs, a, cl) || !q_membership(rs, a, rho2))
      throw invariant_violation("a_inside_q",
                                "generator of A leaves the stabilizer of "
                                "the compact positive system");
  }

  // Conjugation closure of the semidirect structure.
  for (const auto& g : dec.gens_c_theta) {
    Perm ginv = perm_inverse(g);
    for (const auto& h : inner_gens)
      if (!inner->contains(perm_compose(g, perm_compose(h, ginv))))
        throw invariant_violation("c_theta_normalizes_inner",
                                  "outer factor does not normalize re x (A x| im_c)");
  }
  for (const auto& a : dec.gens_a) {
    Perm ainv = perm_inverse(a);
    for (const auto& h : dec.gens_im_c)
      if (!g_im_c.contains(perm_compose(a, perm_compose(h, ainv))))
        throw invariant_violation("a_normalizes_im_c",
                                  "A does not normalize the compact factor");
  }

  // Pairwise trivial intersections; at most one factor of any pair is large.
  struct Factor {
    const char* name;
    const std::vector<Perm>* gens;
    const PermGroup* group;
  };
  Factor factors[] = {{"c_theta", &dec.gens_c_theta, &g_c_theta},
                      {"re", &dec.gens_re, &g_re},
                      {"a", &dec.gens_a, &g_a},
                      {"im_c", &dec.gens_im_c, &g_im_c}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Factor& small =
          factors[i].group->order() <= factors[j].group->order() ? factors[i]
                                                                 : factors[j];
      const Factor& big =
          factors[i].group->order() <= factors[j].group->order() ? factors[j]
                                                                 : factors[i];
      check_pairwise_trivial(degree, *small.gens, *small.group, *big.group,
                             small.name, big.name);
    }

  // Component types for the report, with the classical order formulas as an
  // independent check on the stabilizer chains of the subsystem factors.
  if (!cl.real_roots.empty()) {
    Subsystem sub = make_subsystem(rs, cl.real_roots, std::nullopt);
    dec.types_re = identify_type(sub);
    if (weyl_order_of(sub) != dec.order_re)
      throw invariant_violation("re_order_formula",
                                "chain order of the real factor differs from "
                                "the type formula");
  }
  if (!cl.imaginary_roots.empty())
    dec.types_im =
        identify_type(make_subsystem(rs, cl.imaginary_roots, std::nullopt));
  if (!cl.compact_imaginary.empty()) {
    Subsystem sub = make_subsystem(rs, cl.compact_imaginary, std::nullopt);
    dec.types_im_c = identify_type(sub);
    if (weyl_order_of(sub) != dec.order_im_c)
      throw invariant_violation("im_c_order_formula",
                                "chain order of the compact factor differs "
                                "from the type formula");
  }
  if (!phi_c.members.empty()) dec.types_c = identify_type(phi_c);

  return dec;
}

namespace {

nlohmann::ordered_json bits_json(const std::vector<std::vector<std::uint8_t>>& vs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : vs) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (auto b : v) row.push_back(static_cast<int>(b));
    arr.push_back(std::move(row));
  }
  return arr;
}

nlohmann::ordered_json types_json(const std::vector<CartanType>& ts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& t : ts) arr.push_back(t.str());
  return arr;
}

nlohmann::ordered_json gens_json(const std::vector<Perm>& gens) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& g : gens) arr.push_back(perm_cycles(g));
  return arr;
}

}  // namespace

std::string report_json(const RealWeylDecomposition& dec) {
  nlohmann::ordered_json j;
  j["type"] = dec.type.str();
  j["lattice"] = lattice_mode_name(dec.lattice_mode);
  j["orders"] = {{"c_theta", dec.order_c_theta},
                 {"re", dec.order_re},
                 {"a", dec.order_a},
                 {"im_c", dec.order_im_c}};
  j["total_order"] = dec.total_order;
  nlohmann::ordered_json b_arr = nlohmann::ordered_json::array();
  for (const auto& coords : dec.b_coords) b_arr.push_back(coords);
  j["superorthogonal_set"] = b_arr;
  j["epsilon_basis"] = bits_json(dec.epsilon.basis);
  j["epsilon_count"] = dec.epsilon.members.size();
  j["a_basis"] = bits_json(dec.a_basis);
  j["a_count"] = dec.a_members.size();
  j["im2_filter_nontrivial"] = dec.im2_filter_nontrivial;
  j["fixed_lattice_rank"] = dec.fixed_lattice_rank;
  j["torsion_2rank"] = dec.torsion_2rank;
  j["generators"] = {{"c_theta", gens_json(dec.gens_c_theta)},
                     {"re", gens_json(dec.gens_re)},
                     {"a", gens_json(dec.gens_a)},
                     {"im_c", gens_json(dec.gens_im_c)}};
  j["components"] = {{"re", types_json(dec.types_re)},
                     {"im", types_json(dec.types_im)},
                     {"im_c", types_json(dec.types_im_c)},
                     {"c", types_json(dec.types_c)}};
  return j.dump(2) + "\n";
}

std::string report_text(const RealWeylDecomposition& dec) {
  std::ostringstream os;
  os << "type:            " << dec.type.str() << "\n";
  os << "lattice:         " << lattice_mode_name(dec.lattice_mode) << "\n";
  os << "orders:          |C_theta| = " << dec.order_c_theta
     << ", |W_re| = " << dec.order_re << ", |A| = " << dec.order_a
     << ", |W_imc| = " << dec.order_im_c << "\n";
  os << "total order:     " << dec.total_order << "\n";
  os << "superorthogonal: " << dec.b.roots.size() << " root(s)\n";
  os << "epsilon count:   " << dec.epsilon.members.size() << " (A keeps "
     << dec.a_members.size() << ")\n";
  auto type_list = [](const std::vector<CartanType>& ts) {
    std::string s;
    for (const auto& t : ts) {
      if (!s.empty()) s += " x ";
      s += t.str();
    }
    return s.empty() ? std::string("-") : s;
  };
  os << "real part:       " << type_list(dec.types_re) << "\n";
  os << "imaginary part:  " << type_list(dec.types_im) << "\n";
  os << "compact part:    " << type_list(dec.types_im_c) << "\n";
  os << "complement part: " << type_list(dec.types_c) << "\n";
  return os.str();
}

}  // namespace rwg
