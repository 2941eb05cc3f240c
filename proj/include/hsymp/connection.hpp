#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsymp/linalg.hpp"

namespace hsymp {

/// Basis indices pinpointing where a check failed. `k` is the component
/// (or third index) when the check involves one; otherwise it is zero.
struct Witness {
  std::size_t i = 0, j = 0, k = 0;
};

struct CheckOutcome {
  bool pass = true;
  std::optional<Witness> where;
};

/// Constant-coefficient connection on R^m: a bilinear map (x, y) -> D_x y
/// stored as gamma(k, i, j) = k-th component of D_{e_i} e_j.
///
/// Immutable after construction; a sparse index over the nonzero
/// coefficients is built once and makes apply() cheap for the sparse
/// connections that dominate in practice.
class Connection {
 public:
  explicit Connection(std::size_t dim);  // zero connection
  Connection(std::size_t dim, std::vector<Rational> coeffs);

  std::size_t dim() const { return dim_; }

  const Rational& gamma(std::size_t k, std::size_t i, std::size_t j) const {
    return coeffs_[(k * dim_ + i) * dim_ + j];
  }

  /// D_x y by bilinear contraction.
  RatVec apply(const RatVec& x, const RatVec& y) const;

  /// Matrix of the operator D_{e_i} (rows = output component, cols = argument).
  RatMatrix basis_op(std::size_t i) const;

  /// Matrix of the operator D_v = sum_i v_i D_{e_i}.
  RatMatrix op(const RatVec& v) const;

  bool is_zero() const;
  bool operator==(const Connection& o) const {
    return dim_ == o.dim_ && coeffs_ == o.coeffs_;
  }

 private:
  struct Entry {
    std::size_t k, i, j;
    Rational value;
  };
  std::size_t dim_;
  std::vector<Rational> coeffs_;
  std::vector<Entry> nonzero_;
};

/// Non-degenerate antisymmetric bilinear form; both properties are
/// enforced at construction.
class SymplecticForm {
 public:
  explicit SymplecticForm(RatMatrix matrix);

  /// e^1 ^ e^2 + e^3 ^ e^4 + ... on R^m, m even.
  static SymplecticForm canonical(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const RatMatrix& matrix() const { return matrix_; }
  Rational eval(const RatVec& u, const RatVec& v) const;

  bool operator==(const SymplecticForm& o) const { return matrix_ == o.matrix_; }

 private:
  RatMatrix matrix_;
};

/// Affine structure test: D_x y = D_y x and D_x D_y = D_y D_x on all
/// basis pairs. The witness carries (i, j, component) for a symmetry
/// failure and (i, j, 0) for a commutation failure.
CheckOutcome check_affine(const Connection& c);

/// w(D_x y, z) = w(D_x z, y) on all basis triples.
CheckOutcome check_omega_compat(const Connection& c, const SymplecticForm& w);

/// Pair compatibility D_x D'_y = D_y D'_x on all basis pairs.
CheckOutcome check_pair(const Connection& c1, const Connection& c2);

/// D_x D_y = 0 on all basis pairs (a consequence of affinity plus
/// compatibility with a symplectic form; checked independently).
CheckOutcome check_products_vanish(const Connection& c);

/// Mirrored pair compatibility D'_x D_y = D'_y D_x.
CheckOutcome check_pair_mirror(const Connection& c1, const Connection& c2);

/// Anticommutation D_x D'_y = -D'_y D_x.
CheckOutcome check_pair_anticommute(const Connection& c1, const Connection& c2);

}  // namespace hsymp
