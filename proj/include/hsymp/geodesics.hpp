#pragma once

#include <vector>

#include "hsymp/affine_data.hpp"
#include "hsymp/linalg.hpp"

namespace hsymp {

/// Geodesic through the identity with initial value (a0, b0) in the
/// algebra, written in the two chart halves. The curve is affine in t:
/// a(t) = a_coef t + a0, b(t) = b_coef t + b0, defined for every real t.
struct GeodesicCurve {
  RatVec a0, b0;
  RatVec a_coef, b_coef;

  RatVec a_at(const Rational& t) const { return add(scale(t, a_coef), a0); }
  RatVec b_at(const Rational& t) const { return add(scale(t, b_coef), b0); }
};

/// Closed-form geodesic:
///   a(t) = (-D_{a0} a0 - D'_{a0} b0) t + a0,
///   b(t) = (-D_{a0} b0 - D'_{b0} b0) t + b0.
/// The residual of the defining first-order system
///   da/dt = -D_a a - D'_b a,   db/dt = -D_a b - D'_b b
/// is verified to vanish identically as a polynomial in t (coefficients
/// of t^0, t^1, t^2, exactly); a nonzero residual is an internal error.
GeodesicCurve geodesic_closed_form(const AffineSymplecticData& data, const RatVec& a0,
                                   const RatVec& b0);

struct TrajectoryPoint {
  double t;
  std::vector<double> a, b;
};

/// Classical fourth-order Runge-Kutta integration of the first-order
/// geodesic system in double precision, fixed step. Intended for
/// cross-validation against the exact closed form.
std::vector<TrajectoryPoint> geodesic_numeric(const AffineSymplecticData& data,
                                              const RatVec& a0, const RatVec& b0,
                                              double t_end, double step);

/// Max-norm distance between a sampled trajectory and the closed form
/// evaluated (in exact arithmetic, then rounded) at the sample times.
double max_deviation(const std::vector<TrajectoryPoint>& samples, const GeodesicCurve& curve);

}  // namespace hsymp
