#include "rwg/lattice.hpp"

#include "rwg/error.hpp"

#include <algorithm>

namespace rwg {

namespace {

IntMat int_identity(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t rows_of(const IntMat& m) { return m.size(); }
std::size_t cols_of(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& m) {
  const std::size_t rows = rows_of(m), cols = cols_of(m);
  HnfResult res{m, int_identity(rows)};
  IntMat& h = res.h;
  IntMat& u = res.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd sweep: repeatedly reduce the column below r by its smallest entry
    while (true) {
      std::size_t pivot = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        if (pivot == rows || abs(h[i][c]) < abs(h[pivot][c])) pivot = i;
      }
      if (pivot == rows) break;  // column is zero from r down
      if (pivot != r) {
        std::swap(h[pivot], h[r]);
        std::swap(u[pivot], u[r]);
      }
      if (h[r][c] < 0) {
        for (auto& x : h[r]) x = -x;
        for (auto& x : u[r]) x = -x;
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];  // truncated; leaves |rem| < pivot
        if (q != 0) {
          add_row_multiple(h, i, r, q);
          add_row_multiple(u, i, r, q);
        }
        if (h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][c] == 0) continue;
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      // floor division
      Int a = h[i][c], b = h[r][c];
      q = a / b;
      if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
      if (q != 0) {
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
      }
    }
    ++r;
  }
  return res;
}

SnfResult smith_normal_form(const IntMat& m) {
  const std::size_t rows = rows_of(m), cols = cols_of(m);
  SnfResult res{m, int_identity(rows), int_identity(cols)};
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;

  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) s[i][dst] -= q * s[i][src];
    for (std::size_t i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(s[i][a], s[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
  };
  auto col_negate = [&](std::size_t a) {
    for (std::size_t i = 0; i < rows; ++i) s[i][a] = -s[i][a];
    for (std::size_t i = 0; i < cols; ++i) v[i][a] = -v[i][a];
  };

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      // locate smallest nonzero entry of the trailing submatrix
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s[i][j] == 0) continue;
          if (pi == rows || abs(s[i][j]) < abs(s[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // trailing block zero
      if (pi != t) {
        std::swap(s[pi], s[t]);
        std::swap(u[pi], u[t]);
      }
      if (pj != t) col_swap(pj, t);
      if (s[t][t] < 0) col_negate(t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        Int q = s[i][t] / s[t][t];
        if (q != 0) {
          add_row_multiple(s, i, t, q);
          add_row_multiple(u, i, t, q);
        }
        if (s[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        Int q = s[t][j] / s[t][t];
        if (q != 0) col_op(j, t, q);
        if (s[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      bool row_clean = true, col_clean = true;
      for (std::size_t i = t + 1; i < rows && row_clean; ++i)
        if (s[i][t] != 0) row_clean = false;
      for (std::size_t j = t + 1; j < cols && col_clean; ++j)
        if (s[t][j] != 0) col_clean = false;
      if (!row_clean || !col_clean) continue;

      // divisibility: s[t][t] must divide the trailing block
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (s[i][j] % s[t][t] != 0) {
            // fold the offending row into row t and redo
            add_row_multiple(s, t, i, Int(-1));
            add_row_multiple(u, t, i, Int(-1));
            fixed = false;
          }
      if (fixed) break;
    }
  }
  return res;
}

IntMat integer_kernel(const IntMat& m) {
  // Kernel as row vectors of the transpose problem: rows x of u with
  // x * m^T = 0, i.e. m x^T = 0.
  const std::size_t rows = rows_of(m), cols = cols_of(m);
  IntMat mt(cols, std::vector<Int>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) mt[j][i] = m[i][j];
  HnfResult hr = hermite_normal_form(mt);
  IntMat kernel;
  for (std::size_t i = 0; i < cols; ++i) {
    bool zero = std::all_of(hr.h[i].begin(), hr.h[i].end(),
                            [](const Int& x) { return x == 0; });
    if (zero) kernel.push_back(hr.u[i]);
  }
  if (kernel.empty()) return kernel;
  return hermite_normal_form(kernel).h;
}

Int mat_det(const IntMat& m) {
  // Bareiss fraction-free elimination.
  IntMat a = m;
  const std::size_t n = rows_of(a);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

const char* lattice_mode_name(LatticeMode mode) {
  return mode == LatticeMode::weight ? "weight" : "root";
}

IntMat theta_on_lattice(const RootSystem& rs,
                        const std::vector<std::vector<int>>& theta,
                        LatticeMode mode) {
  const int n = rs.rank();
  if (mode == LatticeMode::root) {
    IntMat out(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] = theta[i][j];
    return out;
  }
  // weight coords: conjugate by the change of basis m = C^T c.
  RatMat t(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = theta[i][j];
  RatMat wb(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wb[i][j] = rs.weight_basis()[i][j];
  RatMat conj = rat_mul(rat_mul(wb, t), rat_inverse(wb));
  if (!is_integral(conj))
    throw invariant_violation("theta_weight_integral",
                              "theta is not integral on the weight lattice");
  IntMat out(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = numerator(conj[i][j]);
  return out;
}

IntegerLattice fixed_lattice(const IntMat& theta_on_p) {
  const std::size_t n = rows_of(theta_on_p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int v = 0;
      for (std::size_t k = 0; k < n; ++k) v += theta_on_p[i][k] * theta_on_p[k][j];
      if (v != (i == j ? 1 : 0))
        throw validation_error(errc::theta_not_involution,
                               "lattice action is not an involution");
    }
  IntMat diff = theta_on_p;
  for (std::size_t i = 0; i < n; ++i) diff[i][i] -= 1;
  IntegerLattice lat;
  lat.ambient_rank = static_cast<int>(n);
  lat.basis = integer_kernel(diff);
  return lat;
}

int torsion_quotient_2rank(const IntMat& theta_on_p) {
  IntegerLattice fixed = fixed_lattice(theta_on_p);
  const std::size_t n = rows_of(theta_on_p), k = fixed.basis.size();
  if (k == 0) return 0;

  // Coordinates of the (1+theta) e_j generators in the fixed basis.
  RatMat cols(n, RatVec(k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < k; ++c) cols[a][c] = Rat(fixed.basis[c][a]);
  SpanSolver solver(std::move(cols));

  IntMat coords;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec g(n), x;
    for (std::size_t a = 0; a < n; ++a)
      g[a] = Rat(theta_on_p[a][j]) + (a == j ? 1 : 0);
    if (!solver.solve(g, x) || !is_integral(x))
      throw invariant_violation("image_lattice_in_fixed",
                                "(1+theta)P not inside the fixed lattice");
    std::vector<Int> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = numerator(x[c]);
    coords.push_back(std::move(row));
  }
  SnfResult snf = smith_normal_form(coords);
  int rank2 = 0;
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < k; ++t) {
    const Int& d = snf.s[t][t];
    if (d == 0) continue;
    ++nonzero;
    if (d == 2)
      ++rank2;
    else if (d != 1)
      throw invariant_violation("torsion_elementary_2group",
                                "invariant factor outside {1, 2}");
  }
  if (nonzero != k)
    throw invariant_violation("torsion_finite_quotient",
                              "(1+theta)P has lower rank than the fixed lattice");
  return rank2;
}

EpsilonSet gf2_nullspace(const std::vector<std::vector<std::uint8_t>>& rows_in,
                         std::size_t m) {
  auto rows = rows_in;
  std::vector<int> pivot_col;
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
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;

  EpsilonSet e;
  e.m = m;
  for (std::size_t free_c = 0; free_c < m; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<std::uint8_t> v(m, 0);
    v[free_c] = 1;
    for (std::size_t t = 0; t < pivot_col.size(); ++t)
      v[pivot_col[t]] = rows[t][free_c];
    e.basis.push_back(std::move(v));
  }
  const std::size_t dim = e.basis.size();
  if (dim > 20)
    throw budget_exceeded("parity solution space too large to enumerate");
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    std::vector<std::uint8_t> v(m, 0);
    for (std::size_t b = 0; b < dim; ++b)
      if (mask & (std::size_t{1} << b))
        for (std::size_t j = 0; j < m; ++j) v[j] ^= e.basis[b][j];
    e.members.push_back(std::move(v));
  }
  std::sort(e.members.begin(), e.members.end());
  return e;
}

Int lattice_pairing(const RootSystem& rs, const std::vector<Int>& mu, int beta,
                    LatticeMode mode) {
  if (mode == LatticeMode::weight) return rs.pairing_weight(mu, beta);
  // root coords: 2 (mu, beta) / (beta, beta)
  Int acc = 0;
  const auto& f = rs.form_matrix();
  for (int a = 0; a < rs.rank(); ++a) {
    if (mu[a] == 0) continue;
    Int row = 0;
    for (int b = 0; b < rs.rank(); ++b) row += Int(f[a][b]) * rs.root(beta)[b];
    acc += mu[a] * row;
  }
  acc *= 2;
  Int q, r;
  boost::multiprecision::divide_qr(acc, Int(rs.form(beta, beta)), q, r);
  if (r != 0)
    throw invariant_violation("root_pairing_integral",
                              "non-integral coroot pairing on the root lattice");
  return q;
}

EpsilonSet epsilon_set(const RootSystem& rs, const std::vector<int>& b_roots,
                       const IntegerLattice& p_theta, LatticeMode mode) {
  const std::size_t m = b_roots.size();
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& mu : p_theta.basis) {
    std::vector<std::uint8_t> row(m);
    for (std::size_t i = 0; i < m; ++i) {
      Int p = lattice_pairing(rs, mu, b_roots[i], mode);
      row[i] = static_cast<std::uint8_t>(p % 2 != 0);
    }
    rows.push_back(std::move(row));
  }
  return gf2_nullspace(rows, m);
}

}  // namespace rwg
