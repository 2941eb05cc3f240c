#include "hsymp/curvature.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hsymp/errors.hpp"

namespace hsymp {

RatMatrix CurvatureTensor::pair_matrix(std::size_t i, std::size_t j) const {
  if (i == j) return RatMatrix(dim_, dim_);
  const bool flip = i > j;
  const auto it = blocks_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == blocks_.end()) return RatMatrix(dim_, dim_);
  return flip ? -it->second : it->second;
}

Rational CurvatureTensor::entry(std::size_t l, std::size_t k, std::size_t i,
                                std::size_t j) const {
  if (i == j) return Rational(0);
  const bool flip = i > j;
  const auto it = blocks_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == blocks_.end()) return Rational(0);
  return flip ? Rational(-it->second.at(l, k)) : it->second.at(l, k);
}

void CurvatureTensor::set_pair(std::size_t i, std::size_t j, RatMatrix block) {
  blocks_.emplace(std::make_pair(i, j), std::move(block));
}

CurvatureTensor curvature(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const std::size_t d = 2 * m;
  const LieAlgebra L = build_bracket(data);
  const MetricConnection conn = levi_civita(data);

  // The connection operators are block-diagonal with equal blocks, so the
  // commutator part can be computed on m x m blocks; the bracket part is
  // a short linear combination of connection operators.
  std::vector<RatMatrix> half_ops;
  half_ops.reserve(d);
  for (std::size_t i = 0; i < m; ++i) half_ops.push_back(data.nabla().basis_op(i));
  for (std::size_t i = 0; i < m; ++i) half_ops.push_back(data.nabla_prime().basis_op(i));

  CurvatureTensor R(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      RatMatrix half = half_ops[i] * half_ops[j] - half_ops[j] * half_ops[i];
      const RatVec br = L.bracket_basis(i, j);
      for (std::size_t a = 0; a < d; ++a)
        if (sgn(br[a]) != 0) half = half - br[a] * half_ops[a];

      RatMatrix block(d, d);
      bool nonzero = false;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          if (sgn(half.at(r, c)) == 0) continue;
          block.at(r, c) = half.at(r, c);
          block.at(m + r, m + c) = half.at(r, c);
          nonzero = true;
        }

      // Structural identity: R(b_i, b_j) = -4 ad_{[b_i, b_j]}.
      if (block != Rational(-4) * L.ad(br))
        throw internal_error("curvature does not equal -4 ad of the bracket");
      if (nonzero) R.set_pair(i, j, std::move(block));
    }
  return R;
}

RatMatrix ricci(const CurvatureTensor& R) {
  const std::size_t d = R.dim();
  // Ric(u_b, u_c) = sum_a (R(u_a, u_b) u_c)^a; only stored blocks
  // contribute, in both index orders.
  RatMatrix ric(d, d);
  for (const auto& [key, block] : R.blocks()) {
    const auto [i, j] = key;
    for (std::size_t c = 0; c < d; ++c) {
      ric.at(j, c) += block.at(i, c);   // (a, b) = (i, j)
      ric.at(i, c) -= block.at(j, c);   // (a, b) = (j, i)
    }
  }
  if (!ric.is_zero()) throw internal_error("Ricci tensor is not zero");
  return ric;
}

RatMatrix ricci(const AffineSymplecticData& data) { return ricci(curvature(data)); }

CheckOutcome bianchi_check(const CurvatureTensor& R) {
  const std::size_t d = R.dim();
  // Collect the triples {i, j, k} that touch at least one nonzero block.
  std::set<std::array<std::size_t, 3>> triples;
  for (const auto& [key, block] : R.blocks()) {
    (void)block;
    const auto [i, j] = key;
    for (std::size_t k = 0; k < d; ++k) {
      if (k == i || k == j) continue;
      std::array<std::size_t, 3> t{i, j, k};
      std::sort(t.begin(), t.end());
      triples.insert(t);
    }
  }
  for (const auto& [i, j, k] : triples) {
    const RatMatrix a = R.pair_matrix(i, j);
    const RatMatrix b = R.pair_matrix(j, k);
    const RatMatrix c = R.pair_matrix(k, i);
    for (std::size_t l = 0; l < d; ++l) {
      Rational s = a.at(l, k);
      s += b.at(l, i);
      s += c.at(l, j);
      if (sgn(s) != 0) return {false, Witness{i, j, k}};
    }
  }
  return {};
}

FlatnessReport flatness_report(const AffineSymplecticData& data, const CurvatureTensor& R) {
  const std::size_t m = data.dim();
  const LieAlgebra L = build_bracket(data);

  FlatnessReport rep;
  const LowerCentralSeries lcs = lower_central_series(L);
  if (!lcs.step)
    throw internal_error("double algebra is not nilpotent");
  rep.step = *lcs.step;
  // D_x D'_y = 0 for all basis pairs, checked directly.
  rep.nabla_product_zero = true;
  for (std::size_t i = 0; i < m && rep.nabla_product_zero; ++i) {
    const RatMatrix a = data.nabla().basis_op(i);
    for (std::size_t j = 0; j < m; ++j)
      if (!(a * data.nabla_prime().basis_op(j)).is_zero()) {
        rep.nabla_product_zero = false;
        break;
      }
  }
  rep.flat = R.is_zero();
  if (!rep.consistent())
    throw internal_error("flatness conditions disagree");

  if (rep.flat) {
    // In the flat case the maps (x,x') -> D^g_{(x,x')}(y,y'), linear in
    // (y,y'), must square to zero; equivalently the basis family below
    // anticommutes and each member squares to zero.
    const std::size_t d = 2 * m;
    std::vector<RatMatrix> fam;
    fam.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
      const RatVec y = b < m ? basis_vec(m, b) : zero_vec(m);
      const RatVec yp = b < m ? zero_vec(m) : basis_vec(m, b - m);
      RatMatrix t(d, d);
      const RatMatrix oy = data.nabla().op(y), opy = data.nabla_prime().op(y);
      const RatMatrix oyp = data.nabla().op(yp), opyp = data.nabla_prime().op(yp);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          t.at(r, c) = oy.at(r, c);
          t.at(r, m + c) = opy.at(r, c);
          t.at(m + r, c) = oyp.at(r, c);
          t.at(m + r, m + c) = opyp.at(r, c);
        }
      fam.push_back(std::move(t));
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b)
        if (!(fam[a] * fam[b] + fam[b] * fam[a]).is_zero())
          throw internal_error("flat-case connection transformations do not square to zero");
  }
  return rep;
}

FlatnessReport flatness_report(const AffineSymplecticData& data) {
  return flatness_report(data, curvature(data));
}

}  // namespace hsymp
