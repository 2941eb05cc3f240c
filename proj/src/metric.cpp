#include "hsymp/metric.hpp"

#include "hsymp/errors.hpp"

namespace hsymp {

Rational Metric::eval(const RatVec& u, const RatVec& v) const {
  const std::size_t n = matrix.rows();
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(matrix.at(i, j)) != 0 && sgn(v[j]) != 0) s += u[i] * matrix.at(i, j) * v[j];
  }
  return s;
}

Metric build_metric(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const RatMatrix& w = data.omega().matrix();
  RatMatrix g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& wij = w.at(i, j);
      if (sgn(wij) == 0) continue;
      g.at(i, m + j) = -wij;  // g(e_i, f_j) = -w(e_i, e_j)
      g.at(m + i, j) = wij;   // g(f_i, e_j) =  w(e_i, e_j)
    }
  Metric metric{std::move(g)};

  if (!metric.matrix.is_symmetric()) throw internal_error("metric matrix not symmetric");
  const auto [J, E] = build_J_E(m);
  const RatMatrix& G = metric.matrix;
  if (J.matrix.transpose() * G * J.matrix != G)
    throw internal_error("metric is not J-invariant");
  if (E.matrix.transpose() * G * E.matrix != -G)
    throw internal_error("metric is not E-anti-invariant");
  const SymplecticTriple forms = build_forms(data);
  if (forms.omega1.matrix != J.matrix.transpose() * G)
    throw internal_error("omega1 is not recovered as g(J.,.)");
  if (forms.omega2.matrix != E.matrix.transpose() * G)
    throw internal_error("omega2 is not recovered as g(E.,.)");
  if (forms.omega3.matrix != (J.matrix * E.matrix).transpose() * G)
    throw internal_error("omega3 is not recovered as g(JE.,.)");
  return metric;
}

Signature metric_signature(const Metric& g) { return congruence_signature(g.matrix); }

RatMatrix MetricConnection::op(const RatVec& v) const {
  RatMatrix out(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (sgn(v[a]) == 0) continue;
    out = out + v[a] * basis_ops[a];
  }
  return out;
}

RatVec MetricConnection::apply(const RatVec& u, const RatVec& v) const {
  RatVec out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (sgn(u[a]) == 0) continue;
    const RatVec w = basis_ops[a] * v;
    for (std::size_t k = 0; k < dim; ++k)
      if (sgn(w[k]) != 0) out[k] += u[a] * w[k];
  }
  return out;
}

namespace {

RatMatrix block_diag_pair(const RatMatrix& p) {
  const std::size_t m = p.rows();
  RatMatrix out(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(p.at(i, j)) == 0) continue;
      out.at(i, j) = p.at(i, j);
      out.at(m + i, m + j) = p.at(i, j);
    }
  return out;
}

}  // namespace

MetricConnection levi_civita(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const std::size_t d = 2 * m;

  MetricConnection conn;
  conn.dim = d;
  conn.basis_ops.reserve(d);
  for (std::size_t i = 0; i < m; ++i)
    conn.basis_ops.push_back(block_diag_pair(data.nabla().basis_op(i)));
  for (std::size_t i = 0; i < m; ++i)
    conn.basis_ops.push_back(block_diag_pair(data.nabla_prime().basis_op(i)));

  const LieAlgebra L = build_bracket(data);
  const Metric g = build_metric(data);

  // Torsion-freeness against the bracket.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const RatVec lhs = sub(conn.basis_ops[a].col(b), conn.basis_ops[b].col(a));
      if (lhs != L.bracket_basis(a, b))
        throw internal_error("Levi-Civita candidate has torsion");
    }

  // Metric compatibility in the left-invariant sense:
  // g(D_u v, w) + g(v, D_u w) = 0.
  for (std::size_t a = 0; a < d; ++a) {
    const RatMatrix& P = conn.basis_ops[a];
    const RatMatrix skew = P.transpose() * g.matrix + g.matrix * P;
    if (!skew.is_zero()) throw internal_error("Levi-Civita candidate is not metric");
  }

  // Koszul reconstruction: 2 g(D_a b, w) = g([a,b],w) - g([b,w],a) + g([w,a],b).
  const auto ginv = inverse(g.matrix);
  if (!ginv) throw internal_error("metric matrix not invertible");
  for (std::size_t a = 0; a < d; ++a) {
    const RatVec ba = basis_vec(d, a);
    for (std::size_t b = 0; b < d; ++b) {
      const RatVec bb = basis_vec(d, b);
      RatVec rhs(d);
      for (std::size_t w = 0; w < d; ++w) {
        const RatVec bw = basis_vec(d, w);
        Rational s = g.eval(L.bracket_basis(a, b), bw);
        s -= g.eval(L.bracket_basis(b, w), ba);
        s += g.eval(L.bracket_basis(w, a), bb);
        rhs[w] = s / 2;
      }
      if (*ginv * rhs != conn.basis_ops[a].col(b))
        throw internal_error("Koszul formula disagrees with the blockwise connection");
    }
  }

  // J and E are parallel.
  const auto [J, E] = build_J_E(m);
  for (std::size_t a = 0; a < d; ++a) {
    if (conn.basis_ops[a] * J.matrix != J.matrix * conn.basis_ops[a])
      throw internal_error("J is not parallel");
    if (conn.basis_ops[a] * E.matrix != E.matrix * conn.basis_ops[a])
      throw internal_error("E is not parallel");
  }
  return conn;
}

}  // namespace hsymp
