#pragma once

#include "rwg/numeric.hpp"
#include "rwg/rootsys.hpp"

#include <cstdint>
#include <vector>

namespace rwg {

/// Row-style Hermite normal form: h = u * m with u unimodular, h in row
/// echelon staircase with positive pivots and reduced entries above them.
/// Deterministic pivoting: smallest nonzero absolute value, ties by position.
struct HnfResult {
  IntMat h;
  IntMat u;
};
HnfResult hermite_normal_form(const IntMat& m);

/// Smith normal form: s = u * m * v, s diagonal with d_1 | d_2 | ... >= 0.
struct SnfResult {
  IntMat s;
  IntMat u;
  IntMat v;
};
SnfResult smith_normal_form(const IntMat& m);

/// Basis (rows) of { x in Z^n : m x = 0 }, HNF-canonicalized. The integer
/// kernel of a matrix is automatically saturated.
IntMat integer_kernel(const IntMat& m);

Int mat_det(const IntMat& m);

struct IntegerLattice {
  int ambient_rank = 0;
  IntMat basis;  // rows, linearly independent
};

enum class LatticeMode { weight, root };
const char* lattice_mode_name(LatticeMode mode);

/// theta's action on the chosen lattice: in root mode the simple-root-basis
/// matrix itself; in weight mode conjugated into fundamental-weight
/// coordinates (integral because theta preserves the weight lattice).
IntMat theta_on_lattice(const RootSystem& rs,
                        const std::vector<std::vector<int>>& theta,
                        LatticeMode mode);

/// Saturated basis of the fixed sublattice { mu : theta(mu) = mu }.
/// Throws validation_error when theta_on_p is not an integral involution.
IntegerLattice fixed_lattice(const IntMat& theta_on_p);

/// Rank r with P^theta / (1+theta)P isomorphic to (Z/2)^r, via the Smith
/// form of the generators of (1+theta)P written in P^theta coordinates.
int torsion_quotient_2rank(const IntMat& theta_on_p);

/// A linear subspace of GF(2)^m: the solution set of the parity conditions.
struct EpsilonSet {
  std::size_t m = 0;
  std::vector<std::vector<std::uint8_t>> basis;    // deterministic order
  std::vector<std::vector<std::uint8_t>> members;  // all 2^dim, lexicographic
};

/// Nullspace of a GF(2) matrix given by rows, fully enumerated.
EpsilonSet gf2_nullspace(const std::vector<std::vector<std::uint8_t>>& rows,
                         std::size_t m);

/// The parity set E: epsilon in {0,1}^m with
/// sum_i epsilon_i <mu, b_i^vee> = 0 (mod 2) for all mu in P^theta,
/// computed as the GF(2) nullspace over a basis of P^theta.
EpsilonSet epsilon_set(const RootSystem& rs, const std::vector<int>& b_roots,
                       const IntegerLattice& p_theta, LatticeMode mode);

/// <mu, beta^vee> for mu a lattice vector in the coordinates of `mode`.
Int lattice_pairing(const RootSystem& rs, const std::vector<Int>& mu,
                    int beta, LatticeMode mode);

}  // namespace rwg
