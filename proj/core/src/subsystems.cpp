#include "rwg/subsystems.hpp"

#include "rwg/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rwg {

namespace {

std::vector<char> mask_of(const RootSystem& rs, const std::vector<int>& idx) {
  std::vector<char> m(rs.size(), 0);
  for (int i : idx) m[i] = 1;
  return m;
}

// Greedy maximal linearly independent subset, in the given order.
std::vector<int> independent_subset(const RootSystem& rs, const std::vector<int>& idx) {
  std::vector<int> chosen;
  RatMat rows;
  for (int i : idx) {
    RatMat trial = rows;
    RatVec v(rs.rank());
    for (int a = 0; a < rs.rank(); ++a) v[a] = rs.root(i)[a];
    trial.push_back(v);
    if (rat_rank(trial) == trial.size()) {
      rows = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

bool cartan_matrices_match(const std::vector<std::vector<int>>& m,
                           const std::vector<std::vector<int>>& cand) {
  int n = static_cast<int>(m.size());
  if (static_cast<int>(cand.size()) != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int i, int img) {
    for (int j = 0; j < n; ++j) {
      if (perm[j] < 0) continue;
      if (m[i][j] != cand[img][perm[j]]) return false;
      if (m[j][i] != cand[perm[j]][img]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[img] || !consistent(i, img)) continue;
      perm[i] = img;
      used[img] = true;
      if (self(self, i + 1)) return true;
      used[img] = false;
      perm[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

CartanType identify_component_type(const RootSystem& rs,
                                   const std::vector<int>& simples,
                                   std::size_t component_root_count) {
  int k = static_cast<int>(simples.size());
  std::vector<std::vector<int>> m(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::int64_t num = 2 * rs.form(simples[i], simples[j]);
      std::int64_t den = rs.form(simples[j], simples[j]);
      m[i][j] = static_cast<int>(num / den);
    }
  static const Series all_series[] = {Series::A, Series::B, Series::C, Series::D,
                                      Series::E, Series::F, Series::G};
  for (Series s : all_series) {
    CartanType cand{s, k};
    if (!is_valid_type(cand)) continue;
    if (!cartan_matrices_match(m, cartan_matrix(cand))) continue;
    // Sanity: the member count must agree with the identified type.
    RootSystem ref = RootSystem::build(cand);
    if (static_cast<std::size_t>(ref.size()) != component_root_count)
      throw invariant_violation("component_type_count",
                                "root count disagrees with identified type " + cand.str());
    return cand;
  }
  throw invariant_violation("component_type_unknown",
                            "component Cartan matrix matches no finite type");
}

}  // namespace

bool is_closed_subsystem(const RootSystem& rs, const std::vector<int>& members) {
  auto m = mask_of(rs, members);
  for (int i : members) {
    if (!m[rs.negative_of(i)]) return false;
    for (int j : members) {
      std::vector<int> sum(rs.rank());
      for (int a = 0; a < rs.rank(); ++a) sum[a] = rs.root(i)[a] + rs.root(j)[a];
      int s = rs.index_of(sum);
      if (s >= 0 && !m[s]) return false;
    }
  }
  return true;
}

std::vector<int> indecomposables(const RootSystem& rs,
                                 const std::vector<int>& positive_members) {
  auto m = mask_of(rs, positive_members);
  std::vector<int> out;
  for (int i : positive_members) {
    bool decomposable = false;
    for (int j : positive_members) {
      std::vector<int> diff(rs.rank());
      for (int a = 0; a < rs.rank(); ++a) diff[a] = rs.root(i)[a] - rs.root(j)[a];
      int d = rs.index_of(diff);
      if (d >= 0 && m[d]) { decomposable = true; break; }
    }
    if (!decomposable) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> simple_roots_of(const RootSystem& rs,
                                 const std::vector<int>& members,
                                 const std::optional<RatVec>& positivity) {
  if (!is_closed_subsystem(rs, members))
    throw invariant_violation("subsystem_closed",
                              "member set is not closed under negation and addition");
  std::vector<int> positive;
  if (positivity) {
    RatVec root_v(rs.rank());
    for (int i : members) {
      for (int a = 0; a < rs.rank(); ++a) root_v[a] = rs.root(i)[a];
      Rat v = rs.form_rr(root_v, *positivity);
      if (v == 0)
        throw validation_error(errc::positivity_degenerate,
                               "positivity vector orthogonal to a member");
      if (v > 0) positive.push_back(i);
    }
  } else {
    for (int i : members)
      if (rs.is_positive(i)) positive.push_back(i);
  }
  if (2 * positive.size() != members.size())
    throw invariant_violation("positive_half", "positive half has wrong size");
  return indecomposables(rs, positive);
}

Subsystem make_subsystem(const RootSystem& rs, std::vector<int> members,
                         const std::optional<RatVec>& positivity) {
  std::sort(members.begin(), members.end());
  Subsystem sub;
  sub.rs = &rs;
  sub.members = members;
  sub.simple_roots = simple_roots_of(rs, members, positivity);

  // Orthogonality components.
  std::map<int, int> comp_of;
  int ncomp = 0;
  for (int i : members) {
    if (comp_of.count(i)) continue;
    int c = ncomp++;
    std::vector<int> stack{i};
    comp_of[i] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j : members) {
        if (comp_of.count(j) || rs.form(x, j) == 0) continue;
        comp_of[j] = c;
        stack.push_back(j);
      }
    }
  }
  sub.components.resize(ncomp);
  for (int i : members) sub.components[comp_of[i]].members.push_back(i);
  for (auto& comp : sub.components) {
    std::sort(comp.members.begin(), comp.members.end());
    std::vector<int> simples;
    for (int s : sub.simple_roots)
      if (comp_of[s] == comp_of[comp.members.front()]) simples.push_back(s);
    comp.type = identify_component_type(rs, simples, comp.members.size());
  }
  std::sort(sub.components.begin(), sub.components.end(),
            [](const Subsystem::Component& a, const Subsystem::Component& b) {
              return a.members.front() < b.members.front();
            });
  return sub;
}

std::vector<CartanType> identify_type(const Subsystem& sub) {
  std::vector<CartanType> out;
  for (const auto& c : sub.components) out.push_back(c.type);
  return out;
}

std::uint64_t weyl_order_of(const Subsystem& sub) {
  std::uint64_t order = 1;
  for (const auto& c : sub.components) order *= weyl_order(c.type);
  return order;
}

Subsystem compute_phi_c(const InvolutionDatum& datum, const RootClassification& cl) {
  const RootSystem& rs = *datum.rs;
  std::vector<std::int64_t> two_rho_re(rs.rank(), 0), two_rho_im(rs.rank(), 0);
  for (int i : cl.real_roots)
    if (rs.is_positive(i))
      for (int a = 0; a < rs.rank(); ++a) two_rho_re[a] += rs.root(i)[a];
  for (int i : cl.imaginary_roots)
    if (rs.is_positive(i))
      for (int a = 0; a < rs.rank(); ++a) two_rho_im[a] += rs.root(i)[a];

  std::vector<int> members;
  for (int i = 0; i < rs.size(); ++i)
    if (rs.form_iv(i, two_rho_re) == 0 && rs.form_iv(i, two_rho_im) == 0)
      members.push_back(i);

  auto m = mask_of(rs, members);
  for (int i : members) {
    if (!m[cl.theta_perm[i]])
      throw invariant_violation("phi_c_theta_invariant",
                                "orthogonal-complement system not theta-stable");
    if (cl.kind[i] != RootKind::complex_root)
      throw invariant_violation("phi_c_complex",
                                "real or imaginary root orthogonal to both Weyl vectors");
  }
  return make_subsystem(rs, members, std::nullopt);
}

ThetaSwapSplit split_theta_swapped(const RootSystem& rs,
                                   const std::vector<int>& phi_c_members,
                                   const std::vector<int>& theta_perm) {
  ThetaSwapSplit split;
  if (phi_c_members.empty()) return split;

  auto m = mask_of(rs, phi_c_members);
  for (int i : phi_c_members) {
    if (!m[theta_perm[i]] || theta_perm[i] == i ||
        theta_perm[i] == rs.negative_of(i))
      throw invariant_violation("swap_split_precondition",
                                "subsystem contains a real or imaginary root "
                                "or is not theta-stable");
  }

  // Basis of the +1 eigenspace of theta on the span of the members.
  std::vector<int> span_basis = independent_subset(rs, phi_c_members);
  const std::size_t s = span_basis.size();
  auto theta_mat = rs.matrix_of_perm(theta_perm);
  RatMat theta_minus_i_times_s(rs.rank(), RatVec(s, 0));
  for (int a = 0; a < rs.rank(); ++a)
    for (std::size_t c = 0; c < s; ++c) {
      Rat v = 0;
      for (int b = 0; b < rs.rank(); ++b)
        v += Rat(theta_mat[a][b]) * rs.root(span_basis[c])[b];
      v -= rs.root(span_basis[c])[a];
      theta_minus_i_times_s[a][c] = v;
    }
  RatMat x_kernel = rat_kernel(theta_minus_i_times_s);
  if (x_kernel.empty())
    throw invariant_violation("swap_split_eigenspace",
                              "theta has no fixed vectors on the span");
  RatMat eig_basis;
  for (const auto& x : x_kernel) {
    RatVec v(rs.rank(), 0);
    for (std::size_t c = 0; c < s; ++c)
      for (int a = 0; a < rs.rank(); ++a)
        v[a] += x[c] * rs.root(span_basis[c])[a];
    eig_basis.push_back(std::move(v));
  }

  // Regular vector: start from the projection of the Weyl vector onto the
  // +1 eigenspace, then walk integer perturbations until no member is
  // orthogonal.
  std::vector<int> pos_members;
  for (int i : phi_c_members)
    if (rs.is_positive(i)) pos_members.push_back(i);
  RatVec rho_c = rs.weyl_vector(pos_members);
  RatVec w(rs.rank(), 0);
  for (int a = 0; a < rs.rank(); ++a) {
    w[a] = rho_c[a];
    for (int b = 0; b < rs.rank(); ++b) w[a] += Rat(theta_mat[a][b]) * rho_c[b];
  }
  auto regular = [&](const RatVec& v) {
    RatVec root_v(rs.rank());
    for (int i : phi_c_members) {
      for (int a = 0; a < rs.rank(); ++a) root_v[a] = rs.root(i)[a];
      if (rs.form_rr(root_v, v) == 0) return false;
    }
    return true;
  };
  if (!regular(w)) {
    const std::size_t k = eig_basis.size();
    bool found = false;
    for (int radius = 1; radius <= 64 && !found; ++radius) {
      std::vector<int> c(k, -radius);
      while (true) {
        bool on_shell = false;
        for (std::size_t i = 0; i < k; ++i)
          if (c[i] == radius || c[i] == -radius) on_shell = true;
        if (on_shell) {
          RatVec v = w;
          for (std::size_t i = 0; i < k; ++i)
            for (int a = 0; a < rs.rank(); ++a) v[a] += Rat(c[i]) * eig_basis[i][a];
          if (regular(v)) {
            w = v;
            found = true;
            break;
          }
        }
        std::size_t pos = 0;
        while (pos < k && c[pos] == radius) c[pos++] = -radius;
        if (pos == k) break;
        ++c[pos];
      }
    }
    if (!found)
      throw invariant_violation("swap_split_regular_vector",
                                "no regular fixed vector found");
  }
  split.regular_vector = w;

  // Decompose into irreducible components and pair them under theta.
  std::map<int, int> comp_of;
  std::vector<std::vector<int>> comps;
  for (int i : phi_c_members) {
    if (comp_of.count(i)) continue;
    int c = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<int> stack{i};
    comp_of[i] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comps[c].push_back(x);
      for (int j : phi_c_members) {
        if (comp_of.count(j) || rs.form(x, j) == 0) continue;
        comp_of[j] = c;
        stack.push_back(j);
      }
    }
  }
  for (auto& comp : comps) std::sort(comp.begin(), comp.end());

  std::vector<int> partner(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<int> image;
    for (int i : comps[c]) image.push_back(theta_perm[i]);
    std::sort(image.begin(), image.end());
    int target = comp_of.at(image.front());
    if (comps[target] != image)
      throw invariant_violation("swap_split_component_image",
                                "theta image of a component is not a component");
    if (target == static_cast<int>(c))
      throw invariant_violation("swap_split_component_fixed",
                                "theta fixes an irreducible component");
    partner[c] = target;
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].front() < comps[partner[c]].front())
      split.psi1.insert(split.psi1.end(), comps[c].begin(), comps[c].end());
    else
      split.psi2.insert(split.psi2.end(), comps[c].begin(), comps[c].end());
  }
  std::sort(split.psi1.begin(), split.psi1.end());
  std::sort(split.psi2.begin(), split.psi2.end());

  std::vector<int> image1;
  for (int i : split.psi1) image1.push_back(theta_perm[i]);
  std::sort(image1.begin(), image1.end());
  if (image1 != split.psi2)
    throw invariant_violation("swap_split_exchange", "theta(psi1) != psi2");
  for (int i : split.psi1)
    for (int j : split.psi2)
      if (rs.form(i, j) != 0)
        throw invariant_violation("swap_split_orthogonal", "(psi1, psi2) != 0");
  return split;
}

std::vector<std::int64_t> two_rho_im_c(const RootSystem& rs,
                                       const RootClassification& cl) {
  std::vector<std::int64_t> v(rs.rank(), 0);
  for (int i : cl.compact_imaginary)
    if (rs.is_positive(i))
      for (int a = 0; a < rs.rank(); ++a) v[a] += rs.root(i)[a];
  return v;
}

std::vector<int> dominant_imaginary_positive_system(const RootSystem& rs,
                                                    const RootClassification& cl) {
  if (cl.imaginary_roots.empty()) return {};
  auto rho2 = two_rho_im_c(rs, cl);

  // Tie-break basis: first linearly independent positive imaginary roots in
  // root order.
  std::vector<int> pos_im;
  for (int i : cl.imaginary_roots)
    if (rs.is_positive(i)) pos_im.push_back(i);
  std::vector<int> basis = independent_subset(rs, pos_im);
  RatMat cols(rs.rank(), RatVec(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (int a = 0; a < rs.rank(); ++a) cols[a][c] = rs.root(basis[c])[a];
  SpanSolver solver(std::move(cols));

  std::vector<int> positive;
  for (int i : cl.imaginary_roots) {
    std::int64_t t = rs.form_iv(i, rho2);
    bool pos;
    if (t != 0) {
      pos = t > 0;
    } else {
      RatVec v(rs.rank()), x;
      for (int a = 0; a < rs.rank(); ++a) v[a] = rs.root(i)[a];
      if (!solver.solve(v, x))
        throw invariant_violation("imaginary_tiebreak_basis",
                                  "imaginary root outside the tie-break span");
      std::size_t first = 0;
      while (first < x.size() && x[first] == 0) ++first;
      if (first == x.size())
        throw invariant_violation("imaginary_tiebreak_basis", "zero root");
      pos = x[first] > 0;
    }
    if (pos) positive.push_back(i);
  }
  if (2 * positive.size() != cl.imaginary_roots.size())
    throw invariant_violation("imaginary_positive_half",
                              "dominance order did not split the imaginary roots");
  for (int i : positive)
    if (rs.form_iv(i, rho2) < 0)
      throw invariant_violation("imaginary_dominance",
                                "rho_im_c not dominant for the chosen system");
  return positive;
}

SuperorthogonalSet superorthogonal_b(const RootSystem& rs,
                                     const RootClassification& cl,
                                     const std::vector<int>& im_positive) {
  auto rho2 = two_rho_im_c(rs, cl);
  std::vector<int> ortho_positive;
  for (int i : im_positive)
    if (rs.form_iv(i, rho2) == 0) ortho_positive.push_back(i);

  SuperorthogonalSet b;
  b.roots = indecomposables(rs, ortho_positive);

  // Dominance of rho_im_c makes these exactly the imaginary simple roots
  // orthogonal to it; a mismatch means the positive system is wrong.
  {
    std::vector<int> from_full;
    for (int s : indecomposables(rs, im_positive))
      if (rs.form_iv(s, rho2) == 0) from_full.push_back(s);
    if (from_full != b.roots)
      throw invariant_violation("rho_orthogonal_basis",
                                "subsystem simple roots disagree with the "
                                "dominant system's simple roots");
  }

  for (int i : b.roots)
    if (cl.sign[i] >= 0)
      throw invariant_violation("superorthogonal_member_noncompact",
                                "member of the superorthogonal set is compact");
  if (!b.roots.empty()) {
    RatMat cols(rs.rank(), RatVec(b.roots.size()));
    for (std::size_t c = 0; c < b.roots.size(); ++c)
      for (int a = 0; a < rs.rank(); ++a) cols[a][c] = rs.root(b.roots[c])[a];
    SpanSolver solver(std::move(cols));
    std::vector<char> is_member(rs.size(), 0);
    for (int i : b.roots) {
      is_member[i] = 1;
      is_member[rs.negative_of(i)] = 1;
    }
    RatVec v(rs.rank());
    for (int i = 0; i < rs.size(); ++i) {
      for (int a = 0; a < rs.rank(); ++a) v[a] = rs.root(i)[a];
      if (solver.in_span(v) && !is_member[i])
        throw invariant_violation("superorthogonal_span",
                                  "extra root inside the span of the set");
    }
  }
  return b;
}

}  // namespace rwg
