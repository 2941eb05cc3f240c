#include "hsymp/affine_data.hpp"

#include <sstream>

#include "hsymp/errors.hpp"

namespace hsymp {

ValidationOutcome validate_data(const Connection& nabla, const Connection& nabla_prime,
                                const SymplecticForm& omega) {
  const std::size_t m = omega.dim();
  if (nabla.dim() != m || nabla_prime.dim() != m)
    throw input_error("connections and form must share one dimension");
  if (m % 2 != 0) throw input_error("dimension must be even");

  ValidationOutcome out;
  ValidationReport& r = out.report;
  r.nabla_affine = check_affine(nabla);
  r.nabla_prime_affine = check_affine(nabla_prime);
  r.nabla_omega_compatible = check_omega_compat(nabla, omega);
  r.nabla_prime_omega_compatible = check_omega_compat(nabla_prime, omega);
  r.pair_compatible = check_pair(nabla, nabla_prime);

  r.nabla_products_vanish = check_products_vanish(nabla);
  r.nabla_prime_products_vanish = check_products_vanish(nabla_prime);
  r.pair_mirror_compatible = check_pair_mirror(nabla, nabla_prime);
  r.pair_anticommute = check_pair_anticommute(nabla, nabla_prime);

  if (r.internal_inconsistency())
    throw internal_error("derived identity failed on data whose hypotheses hold");
  if (r.hypotheses_pass())
    out.data = AffineSymplecticData(nabla, nabla_prime, omega);
  return out;
}

AffineSymplecticData require_valid(const Connection& nabla, const Connection& nabla_prime,
                                   const SymplecticForm& omega) {
  ValidationOutcome out = validate_data(nabla, nabla_prime, omega);
  if (!out.data) {
    const ValidationReport& r = out.report;
    std::ostringstream msg;
    msg << "affine-symplectic data invalid:";
    if (!r.nabla_affine.pass) msg << " nabla is not affine;";
    if (!r.nabla_prime_affine.pass) msg << " nabla' is not affine;";
    if (!r.nabla_omega_compatible.pass) msg << " nabla is not omega-compatible;";
    if (!r.nabla_prime_omega_compatible.pass) msg << " nabla' is not omega-compatible;";
    if (!r.pair_compatible.pass) msg << " the pair is not compatible;";
    throw input_error(msg.str());
  }
  return *out.data;
}

}  // namespace hsymp
