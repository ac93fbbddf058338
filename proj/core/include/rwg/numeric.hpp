#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace rwg {

// Arbitrary precision integers and rationals. All core arithmetic is exact;
// there is no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntMat = std::vector<std::vector<Int>>;

RatMat rat_identity(std::size_t n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mul_vec(const RatMat& a, const RatVec& v);
RatMat rat_transpose(const RatMat& a);
bool rat_equal(const RatMat& a, const RatMat& b);

/// Inverse of a square rational matrix. Throws std::invalid_argument if
/// the matrix is singular.
RatMat rat_inverse(const RatMat& a);

/// Solve a * x = b for x (a square, invertible).
RatVec rat_solve(const RatMat& a, const RatVec& b);

/// Basis of the nullspace { x : a * x = 0 } of an m x n rational matrix,
/// returned as rows. Deterministic (free columns in ascending order).
RatMat rat_kernel(const RatMat& a);

std::size_t rat_rank(RatMat a);

bool is_integral(const Rat& r);
bool is_integral(const RatVec& v);
bool is_integral(const RatMat& m);

/// Column echelon solver for repeated solves against a fixed full-column-rank
/// matrix: coordinates of v in the span of the columns of `basis`.
/// Throws std::invalid_argument when v lies outside the span.
class SpanSolver {
public:
  explicit SpanSolver(RatMat basis_columns);
  std::size_t dimension() const { return ncols_; }
  /// Coordinate vector x with basis * x = v, or empty if v not in the span.
  bool solve(const RatVec& v, RatVec& out) const;
  bool in_span(const RatVec& v) const;

private:
  RatMat reduced_;               // row echelon of [basis | I]
  std::vector<int> pivot_rows_;  // pivot row of column j
  std::size_t nrows_, ncols_;
};

}  // namespace rwg
