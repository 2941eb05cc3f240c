#pragma once

#include <map>
#include <utility>

#include "hsymp/affine_data.hpp"
#include "hsymp/lie_algebra.hpp"
#include "hsymp/metric.hpp"

namespace hsymp {

/// Curvature of the Levi-Civita connection with the convention
/// R(u,v) = D_u D_v - D_v D_u - D_{[u,v]}, held per ordered basis pair.
/// Only the nonzero pair matrices are stored; entry(l,k,i,j) is the
/// l-component of R(b_i, b_j) b_k.
class CurvatureTensor {
 public:
  using BlockMap = std::map<std::pair<std::size_t, std::size_t>, RatMatrix>;

  CurvatureTensor(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  /// R(b_i, b_j) as a matrix; antisymmetry in (i, j) is built in.
  RatMatrix pair_matrix(std::size_t i, std::size_t j) const;
  Rational entry(std::size_t l, std::size_t k, std::size_t i, std::size_t j) const;
  bool is_zero() const { return blocks_.empty(); }

  /// Stored nonzero blocks, keyed by i < j.
  const BlockMap& blocks() const { return blocks_; }

  void set_pair(std::size_t i, std::size_t j, RatMatrix block);  // i < j, nonzero

 private:
  std::size_t dim_;
  BlockMap blocks_;
};

/// Computes R on all basis pairs and verifies the structural identity
/// R(u, v) = -4 ad_{[u,v]} exactly; a mismatch is an internal error.
CurvatureTensor curvature(const AffineSymplecticData& data);

/// Ricci tensor as the trace contraction Ric(u, v) = tr(w -> R(w, u) v).
/// Guaranteed to vanish; a nonzero result is an internal error. The
/// returned matrix is therefore always zero and is returned for
/// inspection symmetry with the other operations.
RatMatrix ricci(const CurvatureTensor& R);
RatMatrix ricci(const AffineSymplecticData& data);

/// First Bianchi identity on all basis triples. Only triples touching a
/// nonzero block can contribute, so the scan is proportional to the
/// support of R.
CheckOutcome bianchi_check(const CurvatureTensor& R);

struct FlatnessReport {
  std::size_t step = 0;            // nilpotency step of the double algebra
  bool nabla_product_zero = false; // D_x D'_y = 0 for all basis x, y
  bool flat = false;               // R = 0
  bool consistent() const { return (step <= 2) == nabla_product_zero && nabla_product_zero == flat; }
};

/// Evaluates the three equivalent flatness conditions independently and
/// asserts that they agree; disagreement is an internal error. In the
/// flat case additionally verifies that the transformations
/// (x,x') -> D^g_{(x,x')}(y,y') square to zero. The overload taking a
/// precomputed tensor avoids recomputing it.
FlatnessReport flatness_report(const AffineSymplecticData& data, const CurvatureTensor& R);
FlatnessReport flatness_report(const AffineSymplecticData& data);

}  // namespace hsymp
