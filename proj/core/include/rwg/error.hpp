#pragma once

#include <stdexcept>
#include <string>

namespace rwg {

/// Reasons an input datum can be rejected. Each maps to a distinct,
/// machine-readable name so callers can script against failures.
enum class errc {
  invalid_cartan_type,
  theta_not_integral,
  theta_not_involution,
  theta_not_root_map,
  theta_not_isometry,
  seed_root_invalid,
  seed_root_not_imaginary,
  grading_inconsistent,
  grading_underdetermined,
  positivity_degenerate,
  descriptor_malformed,
  unknown_catalog_id,
};

const char* errc_name(errc code);

/// Bad input: the datum does not describe a valid (theta, grading) pair.
class validation_error : public std::runtime_error {
public:
  validation_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

/// A structural identity that must hold mathematically failed to hold.
/// Always indicates an internal bug or a corrupted intermediate result;
/// `identity()` names the violated identity.
class invariant_violation : public std::logic_error {
public:
  invariant_violation(std::string identity, const std::string& detail)
      : std::logic_error(identity + ": " + detail),
        identity_(std::move(identity)) {}
  const std::string& identity() const { return identity_; }

private:
  std::string identity_;
};

/// An exhaustive enumeration was requested beyond the configured budget.
class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rwg
