#pragma once

#include "hsymp/affine_data.hpp"
#include "hsymp/group.hpp"
#include "hsymp/linalg.hpp"

namespace hsymp {

/// Family on data dimension 4n (group dimension 8n) whose double group is
/// 2-step nilpotent with flat metric and a 4n-dimensional centre.
struct KodairaParams {
  std::size_t n = 1;
};

/// Three-parameter family on data dimension 4 (group dimension 8); the
/// metric is flat exactly when b = c, and the group is 3-step nilpotent
/// otherwise.
struct ThreeStepParams {
  Rational a, b, c;
};

/// D_{e_i} e_i = e_{i+1} for odd i in the first half, D'_{e_i} e_i =
/// e_{i+1} for odd i in the second half, zero otherwise, with the
/// canonical form on R^{4n}.
AffineSymplecticData kodaira_data(const KodairaParams& p);

AffineSymplecticData threestep_data(const ThreeStepParams& p);

/// Degenerate double data with D' = 0; the bracket collapses to the
/// semidirect form [(x,x'),(y,y')] = (0, D_x y' - D_y x'). The given
/// connection must be affine and compatible with the form.
AffineSymplecticData affA_data(const Connection& c, const SymplecticForm& w);

/// Components of the left-invariant coframe at p in the global chart:
/// row a holds the coordinates of the a-th dual frame form. Computed as
/// the inverse of the left-translation differential at the identity.
RatMatrix coframe_at_point(const AffineSymplecticData& data, const GroupElement& p);

/// The invariant metric in chart coordinates at p: the algebra metric
/// pulled back through the coframe.
RatMatrix metric_at_point(const AffineSymplecticData& data, const GroupElement& p);

}  // namespace hsymp
