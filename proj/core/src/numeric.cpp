#include "rwg/numeric.hpp"

#include <stdexcept>

namespace rwg {

RatMat rat_identity(std::size_t n) {
  RatMat m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatVec rat_mul_vec(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) out[i] += a[i][j] * v[j];
  return out;
}

RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat out(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

bool rat_equal(const RatMat& a, const RatMat& b) { return a == b; }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c];
    for (std::size_t j = 0; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMat rat_inverse(const RatMat& a) {
  std::size_t n = a.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("rat_inverse: singular matrix");
  RatMat out(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

RatVec rat_solve(const RatMat& a, const RatVec& b) {
  return rat_mul_vec(rat_inverse(a), b);
}

RatMat rat_kernel(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  RatMat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, 0);
    v[free_c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rat_rank(RatMat a) { return rref(a).size(); }

bool is_integral(const Rat& r) { return denominator(r) == 1; }

bool is_integral(const RatVec& v) {
  for (const auto& r : v)
    if (!is_integral(r)) return false;
  return true;
}

bool is_integral(const RatMat& m) {
  for (const auto& row : m)
    if (!is_integral(row)) return false;
  return true;
}

SpanSolver::SpanSolver(RatMat basis_columns) {
  nrows_ = basis_columns.size();
  ncols_ = nrows_ ? basis_columns[0].size() : 0;
  // Row-reduce [A | I]; the right block records the row operations so we can
  // replay them on arbitrary right-hand sides.
  reduced_.assign(nrows_, RatVec(ncols_ + nrows_, 0));
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) reduced_[i][j] = basis_columns[i][j];
    reduced_[i][ncols_ + i] = 1;
  }
  std::size_t r = 0;
  pivot_rows_.assign(ncols_, -1);
  for (std::size_t c = 0; c < ncols_ && r < nrows_; ++c) {
    std::size_t p = r;
    while (p < nrows_ && reduced_[p][c] == 0) ++p;
    if (p == nrows_)
      throw std::invalid_argument("SpanSolver: columns not independent");
    std::swap(reduced_[p], reduced_[r]);
    Rat inv = reduced_[r][c];
    for (auto& x : reduced_[r]) x /= inv;
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (i == r || reduced_[i][c] == 0) continue;
      Rat f = reduced_[i][c];
      for (std::size_t j = 0; j < ncols_ + nrows_; ++j)
        reduced_[i][j] -= f * reduced_[r][j];
    }
    pivot_rows_[c] = static_cast<int>(r);
    ++r;
  }
}

bool SpanSolver::solve(const RatVec& v, RatVec& out) const {
  // Replay recorded row ops on v, then read coordinates off pivot rows and
  // check the remaining rows vanish.
  RatVec ev(nrows_, 0);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t k = 0; k < nrows_; ++k)
      if (reduced_[i][ncols_ + k] != 0) ev[i] += reduced_[i][ncols_ + k] * v[k];
  out.assign(ncols_, 0);
  for (std::size_t c = 0; c < ncols_; ++c) out[c] = ev[pivot_rows_[c]];
  for (std::size_t i = ncols_; i < nrows_; ++i)
    if (ev[i] != 0) return false;
  return true;
}

bool SpanSolver::in_span(const RatVec& v) const {
  RatVec tmp;
  return solve(v, tmp);
}

}  // namespace rwg
