#pragma once

#include "rwg/numeric.hpp"
#include "rwg/rootsys.hpp"

#include <memory>
#include <vector>

namespace rwg {

/// A root (by coordinates) together with the sign of theta on its root
/// vector: +1 compact, -1 noncompact.
struct GradingSeed {
  std::vector<int> root;
  int sign = 1;
};

/// The combinatorial encoding of a real form with a theta-stable Cartan
/// subalgebra: an integral involution of the root lattice plus a
/// multiplicative +-1 grading of the imaginary roots, given by seeds.
/// `theta` acts on column vectors of simple-root coordinates.
struct InvolutionDatum {
  std::shared_ptr<const RootSystem> rs;
  std::vector<std::vector<int>> theta;
  std::vector<GradingSeed> seeds;
};

enum class RootKind : std::uint8_t { real, imaginary, complex_root };

struct RootClassification {
  std::vector<int> theta_perm;     // theta as a permutation of root indices
  std::vector<RootKind> kind;      // per root index
  std::vector<int> sign;           // +-1 for imaginary roots, 0 otherwise
  std::vector<int> real_roots;     // sorted index lists
  std::vector<int> imaginary_roots;
  std::vector<int> complex_roots;
  std::vector<int> compact_imaginary;
  std::vector<int> noncompact_imaginary;
  RatVec rho_re;  // Weyl vector of the real roots, inherited positivity
  RatVec rho_im;  // Weyl vector of the imaginary roots, inherited positivity

  bool is_imaginary(int i) const { return kind[i] == RootKind::imaginary; }
  bool is_real(int i) const { return kind[i] == RootKind::real; }
  bool is_compact(int i) const { return kind[i] == RootKind::imaginary && sign[i] > 0; }
};

/// Check every structural requirement on (theta, seeds) and classify the
/// roots: real when theta(a) = -a, imaginary when theta(a) = a, complex
/// otherwise; imaginary signs extended multiplicatively from the seeds.
/// Throws validation_error with a distinct code per failure mode.
RootClassification validate(const InvolutionDatum& datum);

/// Dynkin diagram with an order-<=2 automorphism and painted (noncompact)
/// fixed nodes. Node indices are 0-based.
struct VoganDiagram {
  CartanType type;
  std::vector<int> involution;  // permutation of 0..rank-1
  std::vector<int> painted;     // fixed nodes carrying sign -1
};

/// Linear extension of the diagram involution, with seeds +1 / -1 on the
/// unpainted / painted fixed simple roots. Throws validation_error when the
/// permutation is not a diagram automorphism of order <= 2 or a painted node
/// is not fixed.
InvolutionDatum from_vogan(const VoganDiagram& diagram);

}  // namespace rwg
