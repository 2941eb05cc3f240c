#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsymp/affine_data.hpp"
#include "hsymp/linalg.hpp"

namespace hsymp {

/// Lie algebra on R^d presented by structure constants cst(k, i, j) =
/// k-th component of [b_i, b_j]. For algebras produced by build_bracket
/// the basis is (e_1..e_m, f_1..f_m) with e_i = (e_i, 0), f_i = (0, e_i)
/// and d = 2m.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim);  // abelian
  LieAlgebra(std::size_t dim, std::vector<Rational> constants);

  std::size_t dim() const { return dim_; }

  const Rational& cst(std::size_t k, std::size_t i, std::size_t j) const {
    return c_[(k * dim_ + i) * dim_ + j];
  }

  RatVec bracket(const RatVec& u, const RatVec& v) const;
  RatVec bracket_basis(std::size_t i, std::size_t j) const;

  /// Matrix of ad_v = [v, .].
  RatMatrix ad(const RatVec& v) const;
  RatMatrix ad_basis(std::size_t i) const;

  bool is_abelian() const { return nonzero_.empty(); }
  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  struct Entry {
    std::size_t k, i, j;
    Rational value;
  };
  std::size_t dim_;
  std::vector<Rational> c_;
  std::vector<Entry> nonzero_;
};

/// The double Lie algebra of a validated triple:
///   [(x, x'), (y, y')] = (D'_y x' - D'_x y',  D_x y' - D_y x').
/// Both halves R^m + 0 and 0 + R^m come out abelian by construction.
LieAlgebra build_bracket(const AffineSymplecticData& data);

/// Antisymmetry on all pairs, then the Jacobi identity on all basis
/// triples, exactly. The witness is (i, j, 0) for an antisymmetry
/// failure and (i, j, k) for a Jacobi failure.
CheckOutcome jacobi_check(const LieAlgebra& L);

/// Subspace of R^n held as a reduced-row-echelon basis, so equal
/// subspaces compare equal as values.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  bool contains(const RatVec& v) const;
  bool is_zero() const { return basis_.rows() == 0; }
  bool operator==(const Subspace& o) const = default;

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;  // rref rows
};

struct LowerCentralSeries {
  /// terms[0] = whole algebra, terms[t] = [g, terms[t-1]], until the
  /// series stabilizes. The trailing term of a nilpotent algebra is zero.
  std::vector<Subspace> terms;
  /// First t with terms[t] = 0; empty when the series stabilizes nonzero.
  std::optional<std::size_t> step;
  bool nilpotent() const { return step.has_value(); }
};

LowerCentralSeries lower_central_series(const LieAlgebra& L);

/// Centre as the common kernel of all ad matrices.
Subspace centre(const LieAlgebra& L);

/// The centre of a built double algebra characterized through the input
/// connections: pairs (x, x') with D_x = D_{x'} = D'_x = D'_{x'} = 0.
/// Must coincide with centre(build_bracket(data)).
Subspace centre_characterization(const AffineSymplecticData& data);

}  // namespace hsymp
