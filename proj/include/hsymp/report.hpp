#pragma once

#include <string>

#include "hsymp/affine_data.hpp"
#include "hsymp/geodesics.hpp"
#include "hsymp/json_io.hpp"

namespace hsymp {

struct PipelineResult {
  /// False when the triple failed validation; the report then carries the
  /// per-identity diagnostics and nothing else.
  bool input_valid = false;
  ordered_json report;
};

ordered_json validation_to_json(const ValidationReport& r);

/// Runs the full verification pipeline: validation, bracket construction,
/// Jacobi, nilpotency, centre (with its kernel characterization), the
/// three two-forms and their closedness, integrability of J and E, the
/// metric with its signature and recovery identities, the Levi-Civita
/// cross-checks, curvature and its structural identity, Ricci, the
/// flatness equivalences, the abelian-structure conditions, and a
/// completeness witness from closed-form geodesics. The report is fully
/// deterministic: equal inputs give byte-identical serializations.
///
/// Identities that are mathematically guaranteed on validated data throw
/// internal_error when violated.
PipelineResult run_verification(const Connection& nabla, const Connection& nabla_prime,
                                const SymplecticForm& omega);

/// Header `t,a_1..a_m,b_1..b_m`, one sample per line, shortest
/// round-trip double formatting.
void write_geodesic_csv(const std::string& path, const std::vector<TrajectoryPoint>& samples);

}  // namespace hsymp
