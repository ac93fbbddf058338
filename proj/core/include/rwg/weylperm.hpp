#pragma once

#include "rwg/involution.hpp"
#include "rwg/rootsys.hpp"
#include "rwg/subsystems.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rwg {

/// Permutations of root indices, stored as image arrays.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool perm_is_identity(const Perm& p);
/// Composition applying b first: (a * b)(x) = a(b(x)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
bool perm_commute(const Perm& a, const Perm& b);
/// Cycle notation on 0-based points, e.g. "(0 3)(1 4)"; identity is "()".
std::string perm_cycles(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Check the Weyl-element requirements: the permutation commutes with root
/// negation, is induced by a linear map sending roots to roots, and
/// preserves the form.
bool is_weyl_permutation(const RootSystem& rs, const Perm& p);

/// Permutation group with a base and strong generating set built by a
/// deterministic incremental Schreier-Sims. Immutable once built; order and
/// membership queries are safe from concurrent readers.
class PermGroup {
public:
  static PermGroup generate(int degree, const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  const std::vector<Perm>& generators() const { return input_gens_; }
  std::size_t base_length() const { return levels_.size(); }

private:
  struct Level {
    int base = -1;
    std::vector<int> gens;  // indices into strong_
    std::vector<int> orbit;
    std::vector<int> pos;  // point -> orbit position or -1
    std::vector<Perm> transversal;      // orbit position -> u, u(base) = point
    std::vector<Perm> transversal_inv;
    std::vector<std::pair<int, int>> pending;  // (orbit position, local gen idx)
  };

  int degree_ = 0;
  std::vector<Perm> input_gens_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void add_strong(const Perm& h, std::size_t level);
  void grow_orbit(std::size_t level, std::size_t new_gen_local);
  void process_all();
};

/// Generator lists for the three factors of the centralizer of theta in
/// W(Phi): products s_a s_{theta(a)} over simple roots of one swapped half
/// of the orthogonal-complement system, and the simple reflections of the
/// real and imaginary subsystems.
struct ThetaFixedGenerators {
  std::vector<Perm> c_theta;
  std::vector<Perm> re;
  std::vector<Perm> im;
};
ThetaFixedGenerators theta_fixed_subgroup_decomposition(
    const RootSystem& rs, const RootClassification& cl,
    const ThetaSwapSplit& split);

/// Simple reflections of the compact imaginary subsystem.
std::vector<Perm> compact_imaginary_generators(const RootSystem& rs,
                                               const RootClassification& cl);

/// Does w map the compact imaginary roots onto themselves?
bool w_im2_membership(const RootSystem& rs, const Perm& w,
                      const RootClassification& cl);

/// Does w fix rho_im_c (given as 2 * rho in simple-root coordinates)?
bool q_membership(const RootSystem& rs, const Perm& w,
                  const std::vector<std::int64_t>& two_rho_im_c);

}  // namespace rwg
