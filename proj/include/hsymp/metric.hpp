#pragma once

#include <vector>

#include "hsymp/affine_data.hpp"
#include "hsymp/forms.hpp"
#include "hsymp/lie_algebra.hpp"

namespace hsymp {

/// Neutral metric on the double algebra: g((x,x'),(y,y')) = -w(x,y') + w(x',y).
struct Metric {
  RatMatrix matrix;

  Rational eval(const RatVec& u, const RatVec& v) const;
};

/// Builds g and asserts the structural identities it is guaranteed to
/// satisfy: symmetry, invariance under J, anti-invariance under E, and
/// recovery of the three two-forms as g(J.,.), g(E.,.), g(JE.,.).
/// Failures are internal errors.
Metric build_metric(const AffineSymplecticData& data);

/// Exact signature by congruence diagonalization; (m, m) for a valid
/// triple of data dimension m.
Signature metric_signature(const Metric& g);

/// Left-invariant connection presented by one operator per basis vector.
struct MetricConnection {
  std::size_t dim = 0;                 // 2m
  std::vector<RatMatrix> basis_ops;    // basis_ops[a] = D^g_{b_a}

  RatMatrix op(const RatVec& v) const;
  RatVec apply(const RatVec& u, const RatVec& v) const;
};

/// Levi-Civita connection of the neutral metric. On the double algebra it
/// acts blockwise as D_x + D'_{x'} on each half. The closed form is
/// cross-checked against the Koszul formula for left-invariant fields and
/// against torsion-freeness, metric compatibility and parallelism of J
/// and E; any mismatch is an internal error.
MetricConnection levi_civita(const AffineSymplecticData& data);

}  // namespace hsymp
