#include "rwg/involution.hpp"

#include "rwg/error.hpp"
#include "rwg/subsystems.hpp"

#include <algorithm>

namespace rwg {

namespace {

void check_involution_matrix(const RootSystem& rs,
                             const std::vector<std::vector<int>>& theta) {
  const int n = rs.rank();
  if (static_cast<int>(theta.size()) != n)
    throw validation_error(errc::theta_not_involution, "theta has wrong shape");
  for (const auto& row : theta)
    if (static_cast<int>(row.size()) != n)
      throw validation_error(errc::theta_not_involution, "theta has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = 0;
      for (int k = 0; k < n; ++k)
        v += static_cast<long long>(theta[i][k]) * theta[k][j];
      if (v != (i == j ? 1 : 0))
        throw validation_error(errc::theta_not_involution,
                               "theta squared is not the identity");
    }
  const auto& f = rs.form_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          v += static_cast<long long>(theta[a][i]) * f[a][b] * theta[b][j];
      if (v != f[i][j])
        throw validation_error(errc::theta_not_isometry,
                               "theta does not preserve the bilinear form");
    }
}

}  // namespace

RootClassification validate(const InvolutionDatum& datum) {
  const RootSystem& rs = *datum.rs;
  const int total = rs.size();

  check_involution_matrix(rs, datum.theta);
  RootClassification cl;
  cl.theta_perm = rs.root_permutation(datum.theta);

  cl.kind.resize(total);
  cl.sign.assign(total, 0);
  for (int i = 0; i < total; ++i) {
    if (cl.theta_perm[i] == i)
      cl.kind[i] = RootKind::imaginary;
    else if (cl.theta_perm[i] == rs.negative_of(i))
      cl.kind[i] = RootKind::real;
    else
      cl.kind[i] = RootKind::complex_root;
  }
  for (int i = 0; i < total; ++i) {
    switch (cl.kind[i]) {
      case RootKind::real: cl.real_roots.push_back(i); break;
      case RootKind::imaginary: cl.imaginary_roots.push_back(i); break;
      case RootKind::complex_root: cl.complex_roots.push_back(i); break;
    }
  }

  // Multiplicative grading: a sign character of the lattice spanned by the
  // imaginary roots, determined by its values on the simple roots of the
  // imaginary subsystem and pinned down by the seeds over GF(2).
  std::vector<int> im_pos;
  for (int i : cl.imaginary_roots)
    if (rs.is_positive(i)) im_pos.push_back(i);
  std::vector<int> im_simples = indecomposables(rs, im_pos);
  const std::size_t k = im_simples.size();

  std::unique_ptr<SpanSolver> expand;
  if (k > 0) {
    RatMat cols(rs.rank(), RatVec(k));
    for (std::size_t c = 0; c < k; ++c)
      for (int a = 0; a < rs.rank(); ++a) cols[a][c] = rs.root(im_simples[c])[a];
    expand = std::make_unique<SpanSolver>(std::move(cols));
  }
  auto coords_mod2 = [&](int root_idx) {
    RatVec v(rs.rank());
    for (int a = 0; a < rs.rank(); ++a) v[a] = rs.root(root_idx)[a];
    RatVec x;
    if (!expand || !expand->solve(v, x))
      throw invariant_violation("imaginary_subsystem_basis",
                                "imaginary root outside the span of its simple roots");
    std::vector<std::uint8_t> bits(k);
    for (std::size_t c = 0; c < k; ++c) {
      if (!is_integral(x[c]))
        throw invariant_violation("imaginary_subsystem_basis",
                                  "non-integral expansion of an imaginary root");
      bits[c] = static_cast<std::uint8_t>(
          static_cast<unsigned>(abs(numerator(x[c])) % 2));
    }
    return bits;
  };

  // GF(2) system: rows = seeds, unknowns = sign bits on the simple roots.
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint8_t> rhs;
  for (const auto& seed : datum.seeds) {
    int idx = rs.index_of(seed.root);
    if (idx < 0 || (seed.sign != 1 && seed.sign != -1))
      throw validation_error(errc::seed_root_invalid,
                             "grading seed is not a (root, +-1) pair");
    if (cl.kind[idx] != RootKind::imaginary)
      throw validation_error(errc::seed_root_not_imaginary,
                             "grading seed on a non-imaginary root");
    rows.push_back(coords_mod2(idx));
    rhs.push_back(seed.sign < 0 ? 1 : 0);
  }
  std::vector<std::uint8_t> bits(k, 0);
  {
    std::size_t r = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (std::size_t c = 0; c < k && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      std::swap(rhs[p], rhs[r]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) rows[i][j] ^= rows[r][j];
        rhs[i] ^= rhs[r];
      }
      pivot_of_col[c] = static_cast<int>(r);
      ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rhs[i] != 0)
        throw validation_error(errc::grading_inconsistent,
                               "grading seeds contradict multiplicativity");
    if (r < k)
      throw validation_error(errc::grading_underdetermined,
                             "grading seeds leave some imaginary root unsigned");
    for (std::size_t c = 0; c < k; ++c) bits[c] = rhs[pivot_of_col[c]];
  }
  for (int i : cl.imaginary_roots) {
    auto co = coords_mod2(i);
    std::uint8_t b = 0;
    for (std::size_t c = 0; c < k; ++c) b ^= static_cast<std::uint8_t>(co[c] & bits[c]);
    cl.sign[i] = b ? -1 : 1;
    (b ? cl.noncompact_imaginary : cl.compact_imaginary).push_back(i);
  }

  std::vector<int> re_pos;
  for (int i : cl.real_roots)
    if (rs.is_positive(i)) re_pos.push_back(i);
  cl.rho_re = rs.weyl_vector(re_pos);
  cl.rho_im = rs.weyl_vector(im_pos);

  // Structural consequences that must hold for every valid datum.
  for (int i : cl.real_roots)
    for (int j : cl.imaginary_roots)
      if (rs.form(i, j) != 0)
        throw invariant_violation("real_imaginary_orthogonal",
                                  "a real root pairs nontrivially with an imaginary root");
  for (int i = 0; i < total; ++i) {
    int ni = rs.negative_of(i);
    if (cl.kind[i] != cl.kind[ni] || cl.sign[i] != cl.sign[ni])
      throw invariant_violation("negation_symmetry",
                                "classification not stable under negation");
    if (cl.theta_perm[rs.negative_of(i)] != rs.negative_of(cl.theta_perm[i]))
      throw invariant_violation("theta_linear",
                                "theta permutation does not commute with negation");
  }
  for (std::size_t a = 0; a < cl.imaginary_roots.size(); ++a)
    for (std::size_t b = a; b < cl.imaginary_roots.size(); ++b) {
      int i = cl.imaginary_roots[a], j = cl.imaginary_roots[b];
      std::vector<int> sum(rs.rank());
      for (int t = 0; t < rs.rank(); ++t) sum[t] = rs.root(i)[t] + rs.root(j)[t];
      int s = rs.index_of(sum);
      if (s < 0) continue;
      if (cl.kind[s] != RootKind::imaginary || cl.sign[s] != cl.sign[i] * cl.sign[j])
        throw invariant_violation("grading_multiplicative",
                                  "sign(a+b) != sign(a) * sign(b) on imaginary roots");
    }
  return cl;
}

InvolutionDatum from_vogan(const VoganDiagram& diagram) {
  require_valid_type(diagram.type);
  const int n = diagram.type.rank;
  const auto& p = diagram.involution;
  if (static_cast<int>(p.size()) != n)
    throw validation_error(errc::descriptor_malformed,
                           "diagram involution has wrong length");
  std::vector<bool> hit(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || hit[x])
      throw validation_error(errc::descriptor_malformed,
                             "diagram involution is not a permutation");
    hit[x] = true;
  }
  for (int i = 0; i < n; ++i)
    if (p[p[i]] != i)
      throw validation_error(errc::descriptor_malformed,
                             "diagram involution has order > 2");
  auto c = cartan_matrix(diagram.type);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[p[i]][p[j]] != c[i][j])
        throw validation_error(errc::descriptor_malformed,
                               "permutation is not a diagram automorphism");
  for (int node : diagram.painted) {
    if (node < 0 || node >= n)
      throw validation_error(errc::descriptor_malformed, "painted node out of range");
    if (p[node] != node)
      throw validation_error(errc::descriptor_malformed,
                             "painted node not fixed by the involution");
  }

  InvolutionDatum datum;
  datum.rs = std::make_shared<RootSystem>(RootSystem::build(diagram.type));
  datum.theta.assign(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) datum.theta[p[j]][j] = 1;
  for (int i = 0; i < n; ++i) {
    if (p[i] != i) continue;
    GradingSeed seed;
    seed.root.assign(n, 0);
    seed.root[i] = 1;
    bool painted = std::find(diagram.painted.begin(), diagram.painted.end(), i) !=
                   diagram.painted.end();
    seed.sign = painted ? -1 : 1;
    datum.seeds.push_back(std::move(seed));
  }
  return datum;
}

}  // namespace rwg
