#pragma once

#include "rwg/involution.hpp"
#include "rwg/numeric.hpp"
#include "rwg/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rwg {

/// A closed subsystem of root indices together with derived structure.
struct Subsystem {
  const RootSystem* rs = nullptr;
  std::vector<int> members;       // sorted root indices, closed under negation
  std::vector<int> simple_roots;  // positive members, indecomposable
  struct Component {
    std::vector<int> members;
    CartanType type;
  };
  std::vector<Component> components;
};

/// Indecomposable elements of a set of positive roots: those not expressible
/// as a sum of two members. For a closed subsystem with a valid positive half
/// this is its set of simple roots.
std::vector<int> indecomposables(const RootSystem& rs,
                                 const std::vector<int>& positive_members);

/// Simple roots of a subsystem. `positivity` selects the positive half by
/// sign of the pairing; when absent, the global positive system is inherited.
/// Throws validation_error(errc::positivity_degenerate) when the vector
/// vanishes on a member, invariant_violation when `members` is not closed.
std::vector<int> simple_roots_of(const RootSystem& rs,
                                 const std::vector<int>& members,
                                 const std::optional<RatVec>& positivity);

/// Assemble a Subsystem: simple roots, orthogonal components, and the
/// Cartan type of each component.
Subsystem make_subsystem(const RootSystem& rs, std::vector<int> members,
                         const std::optional<RatVec>& positivity);

/// Cartan types of the irreducible components of `sub`, via permutation
/// matching of the component Cartan matrices against the candidate types.
std::vector<CartanType> identify_type(const Subsystem& sub);

/// Product of the classical Weyl orders of the components.
std::uint64_t weyl_order_of(const Subsystem& sub);

/// Verify `members` is closed under negation and root addition.
bool is_closed_subsystem(const RootSystem& rs, const std::vector<int>& members);

/// The roots orthogonal to both rho_re and rho_im. Always theta-invariant
/// and disjoint from the real and imaginary roots.
Subsystem compute_phi_c(const InvolutionDatum& datum, const RootClassification& cl);

/// Orthogonal splitting of a theta-invariant subsystem without real or
/// imaginary roots into two halves exchanged by theta.
struct ThetaSwapSplit {
  std::vector<int> psi1;
  std::vector<int> psi2;
  RatVec regular_vector;  // theta-fixed, nonorthogonal to every member
};
ThetaSwapSplit split_theta_swapped(const RootSystem& rs,
                                   const std::vector<int>& phi_c_members,
                                   const std::vector<int>& theta_perm);

/// 2 * rho of the compact imaginary roots (inherited positivity), integer
/// coordinates in the simple-root basis.
std::vector<std::int64_t> two_rho_im_c(const RootSystem& rs,
                                       const RootClassification& cl);

/// Positive system of the imaginary roots making rho_im_c dominant:
/// order by the pairing with rho_im_c, ties broken by the first nonzero
/// coordinate with respect to a basis chosen from the positive imaginary
/// roots in root order. Deterministic.
std::vector<int> dominant_imaginary_positive_system(const RootSystem& rs,
                                                    const RootClassification& cl);

/// A set of roots whose rational span contains no roots besides +-members.
struct SuperorthogonalSet {
  std::vector<int> roots;  // sorted root indices
};

/// Simple roots of { imaginary a : (a, rho_im_c) = 0 } inside the dominant
/// imaginary positive system. Every member is noncompact and the set is
/// superorthogonal; both facts are verified by scanning, and violations
/// raise invariant_violation.
SuperorthogonalSet superorthogonal_b(const RootSystem& rs,
                                     const RootClassification& cl,
                                     const std::vector<int>& im_positive);

}  // namespace rwg
