#pragma once

#include "rwg/involution.hpp"
#include "rwg/lattice.hpp"
#include "rwg/subsystems.hpp"
#include "rwg/weylperm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rwg {

/// Generators and orders of the four factors of the real Weyl group
/// W = C_theta x| (W_re x (A x| W_imc)) together with the data that
/// produced A.
struct RealWeylDecomposition {
  CartanType type{Series::A, 1};
  LatticeMode lattice_mode = LatticeMode::weight;

  std::vector<Perm> gens_c_theta;
  std::vector<Perm> gens_re;
  std::vector<Perm> gens_a;
  std::vector<Perm> gens_im_c;

  std::uint64_t order_c_theta = 1;
  std::uint64_t order_re = 1;
  std::uint64_t order_a = 1;
  std::uint64_t order_im_c = 1;
  std::uint64_t total_order = 1;

  SuperorthogonalSet b;
  std::vector<std::vector<int>> b_coords;  // members of b in simple-root coords
  EpsilonSet epsilon;  // the full parity solution set
  std::vector<std::vector<std::uint8_t>> a_members;  // filtered subset of E
  std::vector<std::vector<std::uint8_t>> a_basis;
  bool im2_filter_nontrivial = false;

  int fixed_lattice_rank = 0;
  int torsion_2rank = 0;  // diagnostic: P^theta / (1+theta)P = (Z/2)^r

  std::vector<CartanType> types_re, types_im, types_im_c, types_c;
};

/// Run the whole pipeline on a validated datum: classify roots, split the
/// orthogonal-complement system, choose the dominance-compatible imaginary
/// positive system, build the superorthogonal set and the parity set, filter
/// it to A, and assemble the four factors with verified structure.
/// Structural failures raise invariant_violation naming the broken identity.
RealWeylDecomposition compute(const InvolutionDatum& datum,
                              LatticeMode mode = LatticeMode::weight);

/// Deterministic serializations. Identical decompositions yield
/// byte-identical output.
std::string report_json(const RealWeylDecomposition& dec);
std::string report_text(const RealWeylDecomposition& dec);

}  // namespace rwg
