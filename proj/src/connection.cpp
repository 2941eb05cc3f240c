#include "hsymp/connection.hpp"

#include <utility>

#include "hsymp/errors.hpp"

namespace hsymp {

Connection::Connection(std::size_t dim) : dim_(dim), coeffs_(dim * dim * dim) {
  if (dim == 0) throw input_error("connection dimension must be positive");
}

Connection::Connection(std::size_t dim, std::vector<Rational> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  if (dim == 0) throw input_error("connection dimension must be positive");
  if (coeffs_.size() != dim * dim * dim)
    throw input_error("connection coefficient array has wrong shape");
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(gamma(k, i, j)) != 0) nonzero_.push_back({k, i, j, gamma(k, i, j)});
}

RatVec Connection::apply(const RatVec& x, const RatVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw input_error("connection argument has wrong dimension");
  RatVec out(dim_);
  for (const Entry& e : nonzero_) {
    if (sgn(x[e.i]) == 0 || sgn(y[e.j]) == 0) continue;
    out[e.k] += e.value * x[e.i] * y[e.j];
  }
  return out;
}

RatMatrix Connection::basis_op(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < dim_; ++j) m.at(k, j) = gamma(k, i, j);
  return m;
}

RatMatrix Connection::op(const RatVec& v) const {
  if (v.size() != dim_) throw input_error("connection argument has wrong dimension");
  RatMatrix m(dim_, dim_);
  for (const Entry& e : nonzero_)
    if (sgn(v[e.i]) != 0) m.at(e.k, e.j) += e.value * v[e.i];
  return m;
}

bool Connection::is_zero() const { return nonzero_.empty(); }

SymplecticForm::SymplecticForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw input_error("symplectic form matrix must be square");
  if (!matrix_.is_antisymmetric())
    throw input_error("symplectic form matrix must be antisymmetric");
  if (sgn(det(matrix_)) == 0) throw input_error("symplectic form is degenerate");
}

SymplecticForm SymplecticForm::canonical(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0)
    throw input_error("canonical symplectic form needs positive even dimension");
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    m.at(i, i + 1) = 1;
    m.at(i + 1, i) = -1;
  }
  return SymplecticForm(std::move(m));
}

Rational SymplecticForm::eval(const RatVec& u, const RatVec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n)
    throw input_error("symplectic form argument has wrong dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& w = matrix_.at(i, j);
      if (sgn(w) != 0 && sgn(v[j]) != 0) s += u[i] * w * v[j];
    }
  }
  return s;
}

CheckOutcome check_affine(const Connection& c) {
  const std::size_t m = c.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (c.gamma(k, i, j) != c.gamma(k, j, i)) return {false, Witness{i, j, k}};
  std::vector<RatMatrix> ops;
  ops.reserve(m);
  for (std::size_t i = 0; i < m; ++i) ops.push_back(c.basis_op(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (ops[i] * ops[j] != ops[j] * ops[i]) return {false, Witness{i, j, 0}};
  return {};
}

CheckOutcome check_omega_compat(const Connection& c, const SymplecticForm& w) {
  const std::size_t m = c.dim();
  if (w.dim() != m) throw input_error("connection and form dimensions differ");
  for (std::size_t i = 0; i < m; ++i) {
    const RatMatrix op = c.basis_op(i);
    // w(D_{e_i} e_j, e_k) = sum_l gamma(l,i,j) w(l,k)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t l = 0; l < m; ++l) {
          if (sgn(op.at(l, j)) != 0) lhs += op.at(l, j) * w.matrix().at(l, k);
          if (sgn(op.at(l, k)) != 0) rhs += op.at(l, k) * w.matrix().at(l, j);
        }
        if (lhs != rhs) return {false, Witness{i, j, k}};
      }
  }
  return {};
}

namespace {

CheckOutcome pairwise_ops(const Connection& c1, const Connection& c2,
                          bool swap_indices_on_rhs, int rhs_sign) {
  const std::size_t m = c1.dim();
  if (c2.dim() != m) throw input_error("connection dimensions differ");
  std::vector<RatMatrix> a, b;
  a.reserve(m);
  b.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    a.push_back(c1.basis_op(i));
    b.push_back(c2.basis_op(i));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const RatMatrix lhs = a[i] * b[j];
      const RatMatrix rhs = swap_indices_on_rhs ? a[j] * b[i] : b[j] * a[i];
      if (lhs != (rhs_sign < 0 ? -rhs : rhs)) return {false, Witness{i, j, 0}};
    }
  return {};
}

}  // namespace

CheckOutcome check_pair(const Connection& c1, const Connection& c2) {
  return pairwise_ops(c1, c2, /*swap_indices_on_rhs=*/true, +1);
}

CheckOutcome check_products_vanish(const Connection& c) {
  const std::size_t m = c.dim();
  std::vector<RatMatrix> ops;
  ops.reserve(m);
  for (std::size_t i = 0; i < m; ++i) ops.push_back(c.basis_op(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(ops[i] * ops[j]).is_zero()) return {false, Witness{i, j, 0}};
  return {};
}

CheckOutcome check_pair_mirror(const Connection& c1, const Connection& c2) {
  // D'_x D_y = D'_y D_x reads as check_pair with the roles exchanged.
  return pairwise_ops(c2, c1, /*swap_indices_on_rhs=*/true, +1);
}

CheckOutcome check_pair_anticommute(const Connection& c1, const Connection& c2) {
  return pairwise_ops(c1, c2, /*swap_indices_on_rhs=*/false, -1);
}

}  // namespace hsymp
