#pragma once

#include "rwg/involution.hpp"
#include "rwg/lattice.hpp"
#include "rwg/realweyl.hpp"
#include "rwg/weylperm.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rwg {

/// Limits for exhaustive enumeration.
struct OracleBudget {
  std::uint64_t max_group_order = 200000;
  int max_rank = 4;
};

/// Breadth-first closure of a generating set. Throws budget_exceeded when
/// the group outgrows max_order.
std::vector<Perm> enumerate_group(int degree, const std::vector<Perm>& gens,
                                  std::uint64_t max_order);

/// All elements of W(Phi) as root permutations; the classical order formula
/// is consulted first and budget_exceeded raised when it is over budget.
std::vector<Perm> enumerate_weyl(const RootSystem& rs, const OracleBudget& budget);

struct CheckResult {
  std::string identity;
  bool pass = false;
  std::string detail;  // witness description on failure
};

struct Verdict {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  void add(std::string identity, bool pass, std::string detail = "");
};

/// Definitional check of the factorization of the centralizer of theta in
/// W(Phi): enumerate { w : w theta = theta w } and compare elementwise with
/// the product of the constructed factors, including normality and trivial
/// intersections.
Verdict check_theta_centralizer_factorization(const InvolutionDatum& datum,
                                              const OracleBudget& budget);

/// Definitional check of the structure of the imaginary factors: the
/// superorthogonal set is noncompact and superorthogonal, the stabilizer of
/// the compact positive system complements the compact Weyl group inside
/// the compact-set preserver, and that stabilizer equals the preserver
/// intersected with the Weyl group of the rho-orthogonal imaginary roots.
Verdict check_imaginary_factorization(const InvolutionDatum& datum,
                                      const OracleBudget& budget);

/// The GF(2) nullspace computed over a lattice basis equals the brute-force
/// enumeration of all 2^m parity vectors against a spanning set.
Verdict check_parity_set(const InvolutionDatum& datum, LatticeMode mode,
                         const OracleBudget& budget);

/// The assembled total group sits between the product of the proven-lower
/// factors and the enumerated centralizer of theta.
Verdict check_total_group(const InvolutionDatum& datum, LatticeMode mode,
                          const OracleBudget& budget);

/// The three definitional checks. These hold for every consistent datum,
/// realizable by a real form or not.
Verdict check_definitional(const InvolutionDatum& datum,
                           const OracleBudget& budget);

/// Definitional checks plus the total-group sandwich. The sandwich asserts
/// the semidirect structure of the assembled group, which can fail honestly
/// on consistent data not realizable by any real form.
Verdict check_all(const InvolutionDatum& datum, LatticeMode mode,
                  const OracleBudget& budget);

/// The automorphism group of the root system: closure of the simple
/// reflections, negation, and the diagram automorphisms, as permutations.
std::vector<Perm> automorphism_group(const RootSystem& rs,
                                     std::uint64_t max_order);

/// All involutions (identity included) in the automorphism group,
/// deterministic order.
std::vector<Perm> involutions_in_automorphism_group(const RootSystem& rs,
                                                    std::uint64_t max_order);

/// Exhaustive search over involutions and gradings for data whose computed
/// order quadruple (|C_theta|, |W_re|, |A|, |W_imc|) equals `target`.
/// An empty result is a valid outcome.
std::vector<InvolutionDatum> search_matching_datum(
    const CartanType& type, const std::array<std::uint64_t, 4>& target,
    LatticeMode mode, const OracleBudget& budget);

/// Random valid datum: a uniformly chosen involution of the automorphism
/// group plus a uniform grading character of the imaginary root lattice.
InvolutionDatum fuzz_datum(std::shared_ptr<const RootSystem> rs,
                           std::mt19937_64& rng, const OracleBudget& budget);

}  // namespace rwg
