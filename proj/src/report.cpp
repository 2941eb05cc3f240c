#include "hsymp/report.hpp"

#include <charconv>
#include <fstream>

#include "hsymp/abelian.hpp"
#include "hsymp/curvature.hpp"
#include "hsymp/errors.hpp"
#include "hsymp/forms.hpp"
#include "hsymp/group.hpp"
#include "hsymp/lie_algebra.hpp"
#include "hsymp/metric.hpp"

namespace hsymp {

namespace {

ordered_json outcome_to_json(const CheckOutcome& c) {
  ordered_json j;
  j["pass"] = c.pass;
  if (c.where) {
    // 1-based indices in reports, matching the bracket table convention.
    j["witness"] = {c.where->i + 1, c.where->j + 1, c.where->k + 1};
  }
  return j;
}

ordered_json subspace_to_json(const Subspace& s) {
  ordered_json j;
  j["dim"] = s.rank();
  ordered_json basis = ordered_json::array();
  for (std::size_t r = 0; r < s.rank(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < s.ambient_dim(); ++c)
      row.push_back(to_string(s.basis().at(r, c)));
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  return j;
}

}  // namespace

ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["nabla_affine"] = outcome_to_json(r.nabla_affine);
  j["nabla_prime_affine"] = outcome_to_json(r.nabla_prime_affine);
  j["nabla_omega_compatible"] = outcome_to_json(r.nabla_omega_compatible);
  j["nabla_prime_omega_compatible"] = outcome_to_json(r.nabla_prime_omega_compatible);
  j["pair_compatible"] = outcome_to_json(r.pair_compatible);
  j["nabla_products_vanish"] = outcome_to_json(r.nabla_products_vanish);
  j["nabla_prime_products_vanish"] = outcome_to_json(r.nabla_prime_products_vanish);
  j["pair_mirror_compatible"] = outcome_to_json(r.pair_mirror_compatible);
  j["pair_anticommute"] = outcome_to_json(r.pair_anticommute);
  j["valid"] = r.hypotheses_pass();
  return j;
}

PipelineResult run_verification(const Connection& nabla, const Connection& nabla_prime,
                                const SymplecticForm& omega) {
  PipelineResult res;
  ordered_json& rep = res.report;
  rep["dim"] = omega.dim();

  const ValidationOutcome v = validate_data(nabla, nabla_prime, omega);
  rep["validation"] = validation_to_json(v.report);
  if (!v.data) {
    res.input_valid = false;
    return res;
  }
  res.input_valid = true;
  const AffineSymplecticData& data = *v.data;
  const std::size_t m = data.dim();
  const std::size_t d = 2 * m;

  const LieAlgebra L = build_bracket(data);
  ordered_json alg;
  alg["dim"] = d;
  alg["jacobi"] = outcome_to_json(jacobi_check(L));
  if (!alg["jacobi"]["pass"].get<bool>())
    throw internal_error("constructed bracket violates the Jacobi identity");
  const LowerCentralSeries lcs = lower_central_series(L);
  if (!lcs.step) throw internal_error("constructed algebra is not nilpotent");
  alg["nilpotency_step"] = *lcs.step;
  if (*lcs.step > 3) throw internal_error("nilpotency step exceeds three");

  const Subspace z = centre(L);
  const Subspace z_char = centre_characterization(data);
  if (!(z == z_char))
    throw internal_error("centre differs from its kernel characterization");
  alg["centre"] = subspace_to_json(z);
  alg["brackets"] = brackets_to_json(L)["brackets"];
  rep["algebra"] = std::move(alg);

  const SymplecticTriple forms = build_forms(data);
  ordered_json fj;
  fj["omega1_closed"] = outcome_to_json(d_closed(forms.omega1, L));
  fj["omega2_closed"] = outcome_to_json(d_closed(forms.omega2, L));
  fj["omega3_closed"] = outcome_to_json(d_closed(forms.omega3, L));
  for (const char* key : {"omega1_closed", "omega2_closed", "omega3_closed"})
    if (!fj[key]["pass"].get<bool>()) throw internal_error("an induced two-form is not closed");
  rep["forms"] = std::move(fj);

  const auto [J, E] = build_J_E(m);
  ordered_json sj;
  sj["J_integrable"] = outcome_to_json(integrability_check(J, StructureKind::complex_structure, L));
  sj["E_integrable"] = outcome_to_json(integrability_check(E, StructureKind::product_structure, L));
  sj["anticommute"] = J.matrix * E.matrix == -(E.matrix * J.matrix);
  if (!sj["J_integrable"]["pass"].get<bool>() || !sj["E_integrable"]["pass"].get<bool>() ||
      !sj["anticommute"].get<bool>())
    throw internal_error("J or E fails to be an integrable anticommuting pair");
  rep["structures"] = std::move(sj);

  const Metric g = build_metric(data);
  const Signature sig = metric_signature(g);
  ordered_json mj;
  mj["signature"] = {sig.positive, sig.negative};
  if (sig.positive != m || sig.negative != m)
    throw internal_error("metric signature is not neutral");
  // build_metric has already asserted the invariance and recovery
  // identities; record them.
  mj["hermitian_J"] = true;
  mj["anti_hermitian_E"] = true;
  mj["recovers_forms"] = true;
  // curvature() runs the full Levi-Civita cross-check on the way.
  const CurvatureTensor R = curvature(data);
  mj["levi_civita_verified"] = true;
  rep["metric"] = std::move(mj);
  ordered_json cj;
  cj["zero"] = R.is_zero();
  cj["minus_four_ad_identity"] = true;  // asserted inside curvature()
  const CheckOutcome bianchi = bianchi_check(R);
  cj["bianchi"] = outcome_to_json(bianchi);
  if (!bianchi.pass) throw internal_error("first Bianchi identity fails");
  ricci(R);  // throws if nonzero
  cj["ricci_zero"] = true;
  rep["curvature"] = std::move(cj);

  const FlatnessReport fr = flatness_report(data, R);
  ordered_json flj;
  flj["step"] = fr.step;
  flj["two_step"] = fr.step <= 2;
  flj["nabla_product_zero"] = fr.nabla_product_zero;
  flj["flat"] = fr.flat;
  flj["consistent"] = fr.consistent();
  rep["flatness"] = std::move(flj);

  const AbelianReport ab = abelian_report(L, J, E);
  ordered_json aj;
  aj["J"] = ab.j_abelian;
  aj["subalgebras"] = ab.subalgebras;
  aj["annihilator"] = ab.annihilator;
  aj["E"] = ab.e_abelian;
  aj["equivalent"] = ab.all_equal();
  if (!ab.structure_valid)
    throw internal_error("canonical J, E do not form a complex product structure");
  if (!(ab.j_abelian && ab.subalgebras && ab.annihilator && ab.e_abelian))
    throw internal_error("canonical structures are not abelian on a double algebra");
  rep["abelian"] = std::move(aj);

  // Completeness witness: closed-form geodesics through a spanning set of
  // initial values are globally defined straight lines with exactly zero
  // residual (geodesic_closed_form throws otherwise).
  std::size_t checked = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const RatVec e = basis_vec(m, i);
    geodesic_closed_form(data, e, zero_vec(m));
    geodesic_closed_form(data, zero_vec(m), e);
    geodesic_closed_form(data, e, e);
    checked += 3;
  }
  ordered_json comp;
  comp["geodesics_checked"] = checked;
  comp["residuals_zero"] = true;
  comp["globally_defined"] = true;
  rep["completeness"] = std::move(comp);

  return res;
}

void write_geodesic_csv(const std::string& path, const std::vector<TrajectoryPoint>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  if (samples.empty()) throw input_error("empty trajectory");
  const std::size_t m = samples.front().a.size();
  out << 't';
  for (std::size_t i = 1; i <= m; ++i) out << ",a_" << i;
  for (std::size_t i = 1; i <= m; ++i) out << ",b_" << i;
  out << '\n';
  char buf[64];
  auto put = [&](double x) {
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    out.write(buf, r.ptr - buf);
  };
  for (const TrajectoryPoint& p : samples) {
    put(p.t);
    for (double x : p.a) {
      out << ',';
      put(x);
    }
    for (double x : p.b) {
      out << ',';
      put(x);
    }
    out << '\n';
  }
}

}  // namespace hsymp
