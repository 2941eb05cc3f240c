#include "hsymp/group.hpp"

#include <sstream>

#include "hsymp/errors.hpp"

namespace hsymp {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

Rational half() { return Rational(1, 2); }

}  // namespace

GroupElement identity_element(std::size_t m) { return {zero_vec(m), zero_vec(m)}; }

GroupElement negate(const GroupElement& p) {
  return {scale(Rational(-1), p.x), scale(Rational(-1), p.x_prime)};
}

RatVec action_alpha(const AffineSymplecticData& data, const RatVec& x_prime, const RatVec& y) {
  const Connection& n = data.nabla();
  const Connection& np = data.nabla_prime();
  const RatVec lin = np.apply(y, x_prime);
  const RatVec quad = np.apply(y, n.apply(y, x_prime));
  RatVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + lin[i] - half() * quad[i];
  return out;
}

RatVec action_beta(const AffineSymplecticData& data, const RatVec& x_prime, const RatVec& y) {
  const Connection& n = data.nabla();
  const Connection& np = data.nabla_prime();
  const RatVec lin = n.apply(x_prime, y);
  const RatVec quad = n.apply(x_prime, np.apply(x_prime, y));
  RatVec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x_prime[i] - lin[i] - half() * quad[i];
  return out;
}

GroupElement group_multiply(const AffineSymplecticData& data, const GroupElement& p,
                            const GroupElement& q) {
  const std::size_t m = data.dim();
  if (p.x.size() != m || p.x_prime.size() != m || q.x.size() != m || q.x_prime.size() != m)
    throw input_error("group element has wrong dimension");
  return {add(p.x, action_alpha(data, p.x_prime, q.x)),
          add(action_beta(data, p.x_prime, q.x), q.x_prime)};
}

GroupElement group_inverse(const AffineSymplecticData& data, const GroupElement& p) {
  const GroupElement n = negate(p);
  return {action_alpha(data, n.x_prime, n.x), action_beta(data, n.x_prime, n.x)};
}

RatMatrix left_translation_jacobian(const AffineSymplecticData& data, const GroupElement& p,
                                    const GroupElement& q) {
  const std::size_t m = data.dim();
  const Connection& n = data.nabla();
  const Connection& np = data.nabla_prime();

  const RatMatrix op_xp = n.op(p.x_prime);
  const RatMatrix opp_xp = np.op(p.x_prime);
  const RatMatrix id = RatMatrix::identity(m);

  // d alpha(x', .)/dy at y = q.x. The quadratic term D'_y D_y x'
  // differentiates, using symmetry of both connections, into
  // D'_{D_y x'} + D'_y D_{x'}.
  const RatVec n_y_xp = n.apply(q.x, p.x_prime);
  const RatMatrix j11 =
      id + opp_xp - half() * (np.op(n_y_xp) + np.op(q.x) * op_xp);
  const RatMatrix j21 = -(op_xp + half() * (op_xp * opp_xp));

  RatMatrix jac(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      jac.at(i, j) = j11.at(i, j);
      jac.at(m + i, j) = j21.at(i, j);
    }
    jac.at(m + i, m + i) = 1;
  }
  return jac;
}

namespace {

struct Auditor {
  const AffineSymplecticData& data;
  AuditReport report;

  void fail(const std::string& axiom, const std::string& detail) {
    report.pass = false;
    if (report.failures.size() < kMaxReportedFailures) report.failures.push_back({axiom, detail});
  }

  void expect(bool ok, const char* axiom, std::size_t a, std::size_t b, std::size_t c) {
    ++report.checks;
    if (ok) return;
    std::ostringstream d;
    d << "sample (" << a << ", " << b << ", " << c << ")";
    fail(axiom, d.str());
  }

  void check_triple(const GroupElement& p, const GroupElement& q, const GroupElement& r,
                    std::size_t ia, std::size_t ib, std::size_t ic) {
    const GroupElement pq = group_multiply(data, p, q);
    const GroupElement qr = group_multiply(data, q, r);
    expect(group_multiply(data, pq, r) == group_multiply(data, p, qr), "associativity", ia, ib, ic);
  }

  void check_unary(const GroupElement& p, std::size_t ia) {
    const std::size_t m = data.dim();
    const GroupElement e = identity_element(m);
    expect(group_multiply(data, p, e) == p, "right identity", ia, 0, 0);
    expect(group_multiply(data, e, p) == p, "left identity", ia, 0, 0);
    const GroupElement inv = group_inverse(data, p);
    expect(group_multiply(data, p, inv) == e, "right inverse", ia, 0, 0);
    expect(group_multiply(data, inv, p) == e, "left inverse", ia, 0, 0);
  }

  // alpha is a left action, beta a right action, and the two interlock.
  // The slots are varied independently by the caller: `a` and `b` are
  // points of the primed half, `u` and `v` of the unprimed one.
  void check_actions(const RatVec& a, const RatVec& b, const RatVec& u, const RatVec& v,
                     std::size_t ia, std::size_t ib, std::size_t ic) {
    const std::size_t m = data.dim();
    const RatVec zero = zero_vec(m);
    expect(action_alpha(data, zero, v) == v, "alpha identity", ia, ib, ic);
    expect(is_zero(action_alpha(data, a, zero)), "alpha fixes origin", ia, ib, ic);
    expect(action_alpha(data, add(a, b), v) ==
               action_alpha(data, a, action_alpha(data, b, v)),
           "alpha additivity", ia, ib, ic);
    expect(action_beta(data, a, zero) == a, "beta identity", ia, ib, ic);
    expect(is_zero(action_beta(data, zero, v)), "beta fixes origin", ia, ib, ic);
    expect(action_beta(data, a, add(u, v)) ==
               action_beta(data, action_beta(data, a, u), v),
           "beta additivity", ia, ib, ic);
    expect(action_alpha(data, a, add(u, v)) ==
               add(action_alpha(data, a, u),
                   action_alpha(data, action_beta(data, a, u), v)),
           "alpha-beta compatibility", ia, ib, ic);
    expect(action_beta(data, add(a, b), u) ==
               add(action_beta(data, a, action_alpha(data, b, u)),
                   action_beta(data, b, u)),
           "beta-alpha compatibility", ia, ib, ic);
  }
};

}  // namespace

AuditReport double_group_audit(const AffineSymplecticData& data,
                               std::span<const std::array<GroupElement, 3>> samples,
                               bool include_basis_grid) {
  const std::size_t m = data.dim();
  Auditor auditor{data, {}};

  if (include_basis_grid) {
    const long scales[] = {-1, 1, 2};
    std::vector<GroupElement> grid;
    for (std::size_t mu = 0; mu < 2 * m; ++mu)
      for (long s : scales) {
        GroupElement p = identity_element(m);
        if (mu < m)
          p.x[mu] = s;
        else
          p.x_prime[mu - m] = s;
        grid.push_back(std::move(p));
      }

    for (std::size_t a = 0; a < grid.size(); ++a) auditor.check_unary(grid[a], a);

    // Associativity over the full grid cube. With the multiplication
    // table precomputed each triple costs two products.
    std::vector<std::vector<GroupElement>> table(grid.size());
    for (std::size_t a = 0; a < grid.size(); ++a) {
      table[a].reserve(grid.size());
      for (std::size_t b = 0; b < grid.size(); ++b)
        table[a].push_back(group_multiply(data, grid[a], grid[b]));
    }
    for (std::size_t a = 0; a < grid.size(); ++a)
      for (std::size_t b = 0; b < grid.size(); ++b)
        for (std::size_t c = 0; c < grid.size(); ++c)
          auditor.expect(group_multiply(data, table[a][b], grid[c]) ==
                             group_multiply(data, grid[a], table[b][c]),
                         "associativity", a, b, c);

    // Action axioms take arguments in the chart halves; scan the scaled
    // half-bases.
    std::vector<RatVec> half;
    for (std::size_t mu = 0; mu < m; ++mu)
      for (long s : scales) {
        RatVec v = zero_vec(m);
        v[mu] = s;
        half.push_back(std::move(v));
      }
    // Two passes so every identity sees all three of its argument slots
    // varied independently over the grid.
    for (std::size_t a = 0; a < half.size(); ++a)
      for (std::size_t b = 0; b < half.size(); ++b)
        for (std::size_t c = 0; c < half.size(); ++c) {
          auditor.check_actions(half[a], half[b], half[b], half[c], a, b, c);
          auditor.check_actions(half[a], half[c], half[b], half[c], a, c, b);
        }
  }

  std::size_t idx = 0;
  for (const auto& [p, q, r] : samples) {
    auditor.check_unary(p, idx);
    auditor.check_triple(p, q, r, idx, 0, 0);
    auditor.check_actions(p.x_prime, q.x_prime, q.x, r.x, idx, 0, 0);
    ++idx;
  }
  return auditor.report;
}

}  // namespace hsymp
