#include "hsymp/geodesics.hpp"

#include <cmath>
#include <cstddef>

#include "hsymp/errors.hpp"

namespace hsymp {

GeodesicCurve geodesic_closed_form(const AffineSymplecticData& data, const RatVec& a0,
                                   const RatVec& b0) {
  const std::size_t m = data.dim();
  if (a0.size() != m || b0.size() != m)
    throw input_error("initial condition has wrong dimension");
  const Connection& n = data.nabla();
  const Connection& np = data.nabla_prime();

  GeodesicCurve c;
  c.a0 = a0;
  c.b0 = b0;
  c.a_coef = scale(Rational(-1), add(n.apply(a0, a0), np.apply(a0, b0)));
  c.b_coef = scale(Rational(-1), add(n.apply(a0, b0), np.apply(b0, b0)));

  // Residual of the affine curve in the first-order system, collected by
  // powers of t. Bilinearity turns each equation into three exact vector
  // identities.
  const RatVec& A = c.a_coef;
  const RatVec& B = c.b_coef;
  const RatVec r0 = add(A, add(n.apply(a0, a0), np.apply(b0, a0)));
  const RatVec r1 = add(add(n.apply(A, a0), n.apply(a0, A)),
                        add(np.apply(B, a0), np.apply(b0, A)));
  const RatVec r2 = add(n.apply(A, A), np.apply(B, A));
  const RatVec s0 = add(B, add(n.apply(a0, b0), np.apply(b0, b0)));
  const RatVec s1 = add(add(n.apply(A, b0), n.apply(a0, B)),
                        add(np.apply(B, b0), np.apply(b0, B)));
  const RatVec s2 = add(n.apply(A, B), np.apply(B, B));
  if (!is_zero(r0) || !is_zero(r1) || !is_zero(r2) || !is_zero(s0) || !is_zero(s1) ||
      !is_zero(s2))
    throw internal_error("closed-form geodesic has a nonzero residual");
  return c;
}

namespace {

/// Double-precision copy of a connection's nonzero coefficients.
struct SparseBilinear {
  struct Entry {
    std::size_t k, i, j;
    double value;
  };
  std::vector<Entry> entries;
  std::size_t dim;

  explicit SparseBilinear(const Connection& c) : dim(c.dim()) {
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          if (sgn(c.gamma(k, i, j)) != 0)
            entries.push_back({k, i, j, c.gamma(k, i, j).get_d()});
  }

  void accumulate(const std::vector<double>& x, const std::vector<double>& y,
                  std::vector<double>& out) const {
    for (const Entry& e : entries) out[e.k] += e.value * x[e.i] * y[e.j];
  }
};

}  // namespace

std::vector<TrajectoryPoint> geodesic_numeric(const AffineSymplecticData& data,
                                              const RatVec& a0, const RatVec& b0,
                                              double t_end, double step) {
  const std::size_t m = data.dim();
  if (a0.size() != m || b0.size() != m)
    throw input_error("initial condition has wrong dimension");
  if (!(step > 0.0)) throw input_error("step must be positive");

  const SparseBilinear n(data.nabla());
  const SparseBilinear np(data.nabla_prime());

  auto rhs = [&](const std::vector<double>& s) {
    std::vector<double> a(s.begin(), s.begin() + m), b(s.begin() + m, s.end());
    std::vector<double> da(m, 0.0), db(m, 0.0);
    n.accumulate(a, a, da);
    np.accumulate(b, a, da);
    n.accumulate(a, b, db);
    np.accumulate(b, b, db);
    std::vector<double> out(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      out[i] = -da[i];
      out[m + i] = -db[i];
    }
    return out;
  };

  std::vector<double> state(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    state[i] = a0[i].get_d();
    state[m + i] = b0[i].get_d();
  }

  const auto steps = static_cast<std::size_t>(std::llround(t_end / step));
  std::vector<TrajectoryPoint> out;
  out.reserve(steps + 1);
  auto record = [&](double t, const std::vector<double>& s) {
    out.push_back({t, std::vector<double>(s.begin(), s.begin() + m),
                   std::vector<double>(s.begin() + m, s.end())});
  };
  record(0.0, state);
  for (std::size_t k = 1; k <= steps; ++k) {
    const std::vector<double> k1 = rhs(state);
    std::vector<double> tmp(2 * m);
    for (std::size_t i = 0; i < 2 * m; ++i) tmp[i] = state[i] + 0.5 * step * k1[i];
    const std::vector<double> k2 = rhs(tmp);
    for (std::size_t i = 0; i < 2 * m; ++i) tmp[i] = state[i] + 0.5 * step * k2[i];
    const std::vector<double> k3 = rhs(tmp);
    for (std::size_t i = 0; i < 2 * m; ++i) tmp[i] = state[i] + step * k3[i];
    const std::vector<double> k4 = rhs(tmp);
    for (std::size_t i = 0; i < 2 * m; ++i)
      state[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    record(static_cast<double>(k) * step, state);
  }
  return out;
}

double max_deviation(const std::vector<TrajectoryPoint>& samples, const GeodesicCurve& curve) {
  double worst = 0.0;
  for (const TrajectoryPoint& p : samples) {
    Rational t;
    mpq_set_d(t.get_mpq_t(), p.t);  // exact double-to-rational conversion
    const RatVec a = curve.a_at(t);
    const RatVec b = curve.b_at(t);
    for (std::size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::fabs(p.a[i] - a[i].get_d()));
    for (std::size_t i = 0; i < b.size(); ++i)
      worst = std::max(worst, std::fabs(p.b[i] - b[i].get_d()));
  }
  return worst;
}

}  // namespace hsymp
