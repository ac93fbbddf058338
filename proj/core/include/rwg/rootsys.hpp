#pragma once

#include "rwg/cartan.hpp"
#include "rwg/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace rwg {

/// Immutable table of the roots of a simple type, with exact arithmetic.
///
/// Roots are stored in simple-root coordinates, positives first (graded by
/// height, ties broken lexicographically), then the negatives in matching
/// order: root(i + num_positive()) == -root(i). The bilinear form is the
/// Cartan matrix symmetrized with the minimal positive integer diagonal,
/// so all form values are integers. Construction is single threaded; a
/// built RootSystem is safe for concurrent readers.
class RootSystem {
public:
  static RootSystem build(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }

  const std::vector<int>& root(int i) const { return roots_[i]; }
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  bool is_positive(int i) const { return i < num_positive(); }
  int negative_of(int i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  /// Index of a root given by coordinates, or -1 when not a root.
  int index_of(const std::vector<int>& coords) const;

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Symmetrized form on the simple-root basis: (alpha_i, alpha_j).
  const std::vector<std::vector<std::int64_t>>& form_matrix() const { return form_; }
  /// Change of basis simple-root coords -> fundamental-weight coords
  /// (the transpose of the Cartan matrix).
  const std::vector<std::vector<int>>& weight_basis() const { return weight_basis_; }

  /// (root_i, root_j), exact integer.
  std::int64_t form(int i, int j) const { return root_form_[i][j]; }
  /// (root_i, v) for an integer vector v in simple-root coordinates.
  std::int64_t form_iv(int i, const std::vector<std::int64_t>& v) const;
  /// (u, v) for rational vectors in simple-root coordinates.
  Rat form_rr(const RatVec& u, const RatVec& v) const;

  /// <mu, beta^vee> = 2 (mu, beta) / (beta, beta) for mu in simple-root
  /// coordinates.
  Rat pairing(const RatVec& mu, int beta) const;
  /// Same pairing for mu given in fundamental-weight coordinates; exact,
  /// and integral whenever mu is integral (mu then lies in the weight
  /// lattice). Throws invariant_violation if the division is not exact.
  Int pairing_weight(const std::vector<Int>& mu_weight, int beta) const;

  /// Half sum of the given roots, exact rationals.
  RatVec weyl_vector(const std::vector<int>& positive_subset) const;

  /// s_alpha(mu) = mu - <mu, alpha^vee> alpha.
  RatVec reflect(int alpha, const RatVec& mu) const;

  /// The reflection s_alpha as a permutation of root indices.
  std::vector<int> reflection_perm(int alpha) const;

  /// Convert a root-preserving linear map (acting on column vectors of
  /// simple-root coordinates) to the permutation p with
  /// root(p[i]) = map * root(i). Throws validation_error
  /// (errc::theta_not_root_map) when some image is not a root.
  std::vector<int> root_permutation(const RatMat& linear_map) const;
  std::vector<int> root_permutation(const std::vector<std::vector<int>>& map) const;

  /// Linear map (integer matrix, column action) induced by a permutation of
  /// root indices; the permutation must come from a linear map.
  std::vector<std::vector<int>> matrix_of_perm(const std::vector<int>& perm) const;

  RatVec to_weight_coords(const RatVec& simple_coords) const;
  RatVec from_weight_coords(const RatVec& weight_coords) const;

  /// 2 * rho for the global positive system, integer coordinates.
  const std::vector<std::int64_t>& two_rho() const { return two_rho_; }

private:
  RootSystem() = default;

  CartanType type_{Series::A, 1};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> weight_basis_;
  std::vector<std::int64_t> symmetrizer_;  // d_i with (a_i, a_j) = d_j c_ij
  std::vector<std::vector<std::int64_t>> form_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<std::int64_t>> root_form_;  // (root_i, root_j)
  std::map<std::vector<int>, int> index_;
  std::vector<std::int64_t> two_rho_;
  RatMat weight_basis_inv_;
};

}  // namespace rwg
