#include "hsymp/lie_algebra.hpp"

#include <utility>

#include "hsymp/errors.hpp"

namespace hsymp {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {
  if (dim == 0) throw input_error("Lie algebra dimension must be positive");
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> constants)
    : dim_(dim), c_(std::move(constants)) {
  if (dim == 0) throw input_error("Lie algebra dimension must be positive");
  if (c_.size() != dim * dim * dim)
    throw input_error("structure constant array has wrong shape");
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(cst(k, i, j)) != 0) nonzero_.push_back({k, i, j, cst(k, i, j)});
}

RatVec LieAlgebra::bracket(const RatVec& u, const RatVec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw input_error("bracket argument has wrong dimension");
  RatVec out(dim_);
  for (const Entry& e : nonzero_) {
    if (sgn(u[e.i]) == 0 || sgn(v[e.j]) == 0) continue;
    out[e.k] += e.value * u[e.i] * v[e.j];
  }
  return out;
}

RatVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  RatVec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = cst(k, i, j);
  return out;
}

RatMatrix LieAlgebra::ad(const RatVec& v) const {
  RatMatrix m(dim_, dim_);
  for (const Entry& e : nonzero_)
    if (sgn(v[e.i]) != 0) m.at(e.k, e.j) += e.value * v[e.i];
  return m;
}

RatMatrix LieAlgebra::ad_basis(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < dim_; ++j) m.at(k, j) = cst(k, i, j);
  return m;
}

LieAlgebra build_bracket(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const std::size_t d = 2 * m;
  std::vector<Rational> c(d * d * d);
  auto cref = [&](std::size_t k, std::size_t i, std::size_t j) -> Rational& {
    return c[(k * d + i) * d + j];
  };
  // Only mixed pairs bracket nontrivially:
  // [e_i, f_j] = (-D'_{e_i} e_j, D_{e_i} e_j).
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& gp = data.nabla_prime().gamma(k, i, j);
        const Rational& g = data.nabla().gamma(k, i, j);
        if (sgn(gp) != 0) {
          cref(k, i, m + j) = -gp;
          cref(k, m + j, i) = gp;
        }
        if (sgn(g) != 0) {
          cref(m + k, i, m + j) = g;
          cref(m + k, m + j, i) = -g;
        }
      }
    }
  }
  return LieAlgebra(d, std::move(c));
}

CheckOutcome jacobi_check(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const RatVec lhs = L.bracket_basis(i, j);
      const RatVec rhs = L.bracket_basis(j, i);
      for (std::size_t k = 0; k < d; ++k)
        if (lhs[k] != -rhs[k]) return {false, Witness{i, j, 0}};
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVec bij = L.bracket_basis(i, j);
      for (std::size_t k = j + 1; k < d; ++k) {
        RatVec s = L.bracket(bij, basis_vec(d, k));
        s = add(s, L.bracket(L.bracket_basis(j, k), basis_vec(d, i)));
        s = add(s, L.bracket(L.bracket_basis(k, i), basis_vec(d, j)));
        if (!is_zero(s)) return {false, Witness{i, j, k}};
      }
    }
  return {};
}

Subspace Subspace::span(const std::vector<RatVec>& vectors, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  if (vectors.empty()) {
    s.basis_ = RatMatrix(0, ambient_dim);
    return s;
  }
  s.basis_ = rref(from_rows(vectors));
  return s;
}

Subspace Subspace::whole(std::size_t n) {
  Subspace s;
  s.ambient_ = n;
  s.basis_ = RatMatrix::identity(n);
  return s;
}

bool Subspace::contains(const RatVec& v) const {
  if (hsymp::is_zero(v)) return true;
  std::vector<RatVec> rows;
  rows.reserve(basis_.rows() + 1);
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  rows.push_back(v);
  return rref(from_rows(rows)).rows() == basis_.rows();
}

LowerCentralSeries lower_central_series(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  LowerCentralSeries out;
  out.terms.push_back(Subspace::whole(d));
  for (std::size_t iter = 1; iter <= d + 1; ++iter) {
    const Subspace& prev = out.terms.back();
    std::vector<RatVec> gens;
    for (std::size_t r = 0; r < prev.basis().rows(); ++r) {
      const RatVec v = prev.basis().row(r);
      for (std::size_t j = 0; j < d; ++j) {
        RatVec b = L.bracket(v, basis_vec(d, j));
        if (!is_zero(b)) gens.push_back(std::move(b));
      }
    }
    const Subspace next = Subspace::span(gens, d);
    if (next.is_zero()) {
      out.terms.push_back(next);
      out.step = iter;
      return out;
    }
    if (next == prev) return out;  // stabilized nonzero: not nilpotent
    out.terms.push_back(next);
  }
  return out;  // cannot happen for a finite-dimensional algebra
}

Subspace centre(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  // v is central iff [v, b_j] = 0 for every j; stack the maps
  // v -> [v, b_j] and take the common kernel.
  RatMatrix stacked(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) stacked.at(j * d + k, l) = L.cst(k, l, j);
  const RatMatrix ns = nullspace(stacked);
  std::vector<RatVec> rows;
  rows.reserve(ns.rows());
  for (std::size_t i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
  return Subspace::span(rows, d);
}

Subspace centre_characterization(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const std::size_t d = 2 * m;
  // (x, x') is central iff the four operators D_x, D_{x'}, D'_x, D'_{x'}
  // all vanish. Each condition is linear in the pair (x, x').
  RatMatrix stacked(4 * m * m, d);
  std::size_t row = 0;
  for (int which = 0; which < 4; ++which) {
    const Connection& c = which < 2 ? data.nabla() : data.nabla_prime();
    const std::size_t offset = (which % 2 == 0) ? 0 : m;  // acts on x or on x'
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t l = 0; l < m; ++l) stacked.at(row, offset + l) = c.gamma(k, l, j);
        ++row;
      }
  }
  const RatMatrix ns = nullspace(stacked);
  std::vector<RatVec> rows;
  rows.reserve(ns.rows());
  for (std::size_t i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
  return Subspace::span(rows, d);
}

}  // namespace hsymp
