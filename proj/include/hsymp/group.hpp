#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hsymp/affine_data.hpp"
#include "hsymp/linalg.hpp"

namespace hsymp {

/// Point of the double group in the global chart: the pair (x, x') with
/// both halves of the data dimension m.
struct GroupElement {
  RatVec x;
  RatVec x_prime;

  bool operator==(const GroupElement& o) const = default;
};

GroupElement identity_element(std::size_t m);
GroupElement negate(const GroupElement& p);

/// alpha(x', y) = y + D'_y x' - 1/2 D'_y D_y x'  (the left action of the
/// primed half on the unprimed half).
RatVec action_alpha(const AffineSymplecticData& data, const RatVec& x_prime, const RatVec& y);

/// beta(x', y) = x' - D_{x'} y - 1/2 D_{x'} D'_{x'} y  (the right action
/// of the unprimed half on the primed half).
RatVec action_beta(const AffineSymplecticData& data, const RatVec& x_prime, const RatVec& y);

/// (x, x') . (y, y') = (x + alpha(x', y), beta(x', y) + y').
GroupElement group_multiply(const AffineSymplecticData& data, const GroupElement& p,
                            const GroupElement& q);

/// Two-sided inverse: (alpha(-x', -x), beta(-x', -x)).
GroupElement group_inverse(const AffineSymplecticData& data, const GroupElement& p);

/// Exact Jacobian of the left translation r -> p . r at r = q, from the
/// closed-form partial derivatives of the product polynomials. Blocks in
/// the chart order (unprimed, primed):
///   d(first)/dy' = 0,  d(second)/dy' = Id,
///   d(first)/dy  = Id + D'_{x'} - 1/2 (D'_{D_y x'} + D'_y D_{x'}),
///   d(second)/dy = -D_{x'} - 1/2 D_{x'} D'_{x'}.
RatMatrix left_translation_jacobian(const AffineSymplecticData& data, const GroupElement& p,
                                    const GroupElement& q);

struct AuditFailure {
  std::string axiom;
  std::string detail;
};

struct AuditReport {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<AuditFailure> failures;  // capped; first few are enough to debug
};

/// Exhaustive exact audit of the group axioms on the supplied sample
/// triples plus, when requested, the documented basis grid: every chart
/// basis vector scaled by {-1, 1, 2}. Verifies associativity, identity,
/// two-sided inverses, the action axioms of alpha and beta, and both
/// action compatibility conditions. Any failure means the input data is
/// not what validation said it was, so the caller should treat it as an
/// internal error.
AuditReport double_group_audit(const AffineSymplecticData& data,
                               std::span<const std::array<GroupElement, 3>> samples,
                               bool include_basis_grid = true);

}  // namespace hsymp
