#pragma once

#include <optional>

#include "hsymp/connection.hpp"

namespace hsymp {

/// One flag per defining or derived identity of an affine-symplectic
/// triple, with the first failing basis indices when an identity fails.
struct ValidationReport {
  // Hypotheses on each connection and on the pair.
  CheckOutcome nabla_affine;
  CheckOutcome nabla_prime_affine;
  CheckOutcome nabla_omega_compatible;
  CheckOutcome nabla_prime_omega_compatible;
  CheckOutcome pair_compatible;

  // Consequences of the hypotheses. These cannot fail when the
  // hypotheses hold; a failure here marks an internal inconsistency.
  CheckOutcome nabla_products_vanish;
  CheckOutcome nabla_prime_products_vanish;
  CheckOutcome pair_mirror_compatible;
  CheckOutcome pair_anticommute;

  bool hypotheses_pass() const {
    return nabla_affine.pass && nabla_prime_affine.pass && nabla_omega_compatible.pass &&
           nabla_prime_omega_compatible.pass && pair_compatible.pass;
  }
  bool derived_pass() const {
    return nabla_products_vanish.pass && nabla_prime_products_vanish.pass &&
           pair_mirror_compatible.pass && pair_anticommute.pass;
  }
  /// True exactly when a derived identity failed although the hypotheses
  /// hold, which is impossible for a correct implementation.
  bool internal_inconsistency() const { return hypotheses_pass() && !derived_pass(); }
};

class AffineSymplecticData;
struct ValidationOutcome;
ValidationOutcome validate_data(const Connection& nabla, const Connection& nabla_prime,
                                const SymplecticForm& omega);

/// A validated triple (D, D', w): both connections affine and compatible
/// with w, and the pair mutually compatible. Construction goes through
/// validate_data / require_valid, so holding a value of this type is the
/// proof of validity.
class AffineSymplecticData {
 public:
  std::size_t dim() const { return omega_.dim(); }
  const Connection& nabla() const { return nabla_; }
  const Connection& nabla_prime() const { return nabla_prime_; }
  const SymplecticForm& omega() const { return omega_; }

 private:
  friend struct ValidationOutcome;
  friend ValidationOutcome validate_data(const Connection& nabla,
                                         const Connection& nabla_prime,
                                         const SymplecticForm& omega);
  AffineSymplecticData(Connection n, Connection np, SymplecticForm w)
      : nabla_(std::move(n)), nabla_prime_(std::move(np)), omega_(std::move(w)) {}

  Connection nabla_;
  Connection nabla_prime_;
  SymplecticForm omega_;
};

/// Result of validate_data. Shape problems (dimension mismatch, odd
/// dimension) throw input_error; the form is already non-degenerate and
/// antisymmetric by construction. Failed equations are reported, not
/// thrown. A derived identity failing while the hypotheses pass throws
/// internal_error.
struct ValidationOutcome {
  ValidationReport report;
  std::optional<AffineSymplecticData> data;  // present iff hypotheses pass
};

/// validate_data that insists on success: throws input_error with the
/// first failed identity otherwise.
AffineSymplecticData require_valid(const Connection& nabla, const Connection& nabla_prime,
                                   const SymplecticForm& omega);

}  // namespace hsymp
