#include "hsymp/families.hpp"

#include "hsymp/errors.hpp"
#include "hsymp/metric.hpp"

namespace hsymp {

AffineSymplecticData kodaira_data(const KodairaParams& p) {
  if (p.n == 0) throw input_error("family parameter n must be positive");
  const std::size_t m = 4 * p.n;
  std::vector<Rational> nab(m * m * m), nabp(m * m * m);
  auto idx = [m](std::size_t k, std::size_t i, std::size_t j) { return (k * m + i) * m + j; };
  for (std::size_t i = 0; i < 2 * p.n; i += 2) nab[idx(i + 1, i, i)] = 1;
  for (std::size_t i = 2 * p.n; i < 4 * p.n; i += 2) nabp[idx(i + 1, i, i)] = 1;
  return require_valid(Connection(m, std::move(nab)), Connection(m, std::move(nabp)),
                       SymplecticForm::canonical(m));
}

namespace {

// Column-action matrices of the three-parameter family: entry (k, j) of
// block i is the k-th component of D_{e_{i+1}} e_{j+1}.
std::vector<Rational> threestep_nabla() {
  const long m1[16] = {1, 0, 1, 0, 0, -1, 0, 1, -1, 0, -1, 0, 0, -1, 0, 1};
  const long m2[16] = {0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, -1, 0, -1, 0};
  std::vector<Rational> c(4 * 4 * 4);
  auto put = [&](std::size_t i, const long* block, long sign) {
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) c[(k * 4 + i) * 4 + j] = sign * block[k * 4 + j];
  };
  put(0, m1, 1);
  put(1, m2, 1);
  put(2, m1, 1);
  put(3, m2, -1);
  return c;
}

std::vector<Rational> threestep_nabla_prime(const Rational& a, const Rational& b,
                                            const Rational& c) {
  const Rational n1[16] = {a, 0, a, 0,  b,  -a, c,  a, -a, 0, -a, 0, c, -a, -b + 2 * c, a};
  const Rational n2[16] = {0, 0, 0, 0,  -a, 0,  -a, 0, 0,  0, 0,  0, -a, 0, -a, 0};
  const Rational n3[16] = {a, 0, a, 0,  c,  -a, -b + 2 * c, a,
                           -a, 0, -a, 0, -b + 2 * c, -a, -2 * b + 3 * c, a};
  std::vector<Rational> out(4 * 4 * 4);
  auto put = [&](std::size_t i, const Rational* block, int sign) {
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        out[(k * 4 + i) * 4 + j] = sign > 0 ? block[k * 4 + j] : -block[k * 4 + j];
  };
  put(0, n1, 1);
  put(1, n2, 1);
  put(2, n3, 1);
  put(3, n2, -1);
  return out;
}

}  // namespace

AffineSymplecticData threestep_data(const ThreeStepParams& p) {
  return require_valid(Connection(4, threestep_nabla()),
                       Connection(4, threestep_nabla_prime(p.a, p.b, p.c)),
                       SymplecticForm::canonical(4));
}

AffineSymplecticData affA_data(const Connection& c, const SymplecticForm& w) {
  if (!check_affine(c).pass) throw input_error("connection is not affine");
  if (!check_omega_compat(c, w).pass)
    throw input_error("connection is not compatible with the form");
  return require_valid(c, Connection(c.dim()), w);
}

RatMatrix coframe_at_point(const AffineSymplecticData& data, const GroupElement& p) {
  const RatMatrix frame = left_translation_jacobian(data, p, identity_element(data.dim()));
  const auto inv = inverse(frame);
  if (!inv)
    throw internal_error("left-translation differential is singular");
  return *inv;
}

RatMatrix metric_at_point(const AffineSymplecticData& data, const GroupElement& p) {
  const RatMatrix theta = coframe_at_point(data, p);
  const RatMatrix g = build_metric(data).matrix;
  return theta.transpose() * g * theta;
}

}  // namespace hsymp
