#pragma once

#include "hsymp/affine_data.hpp"
#include "hsymp/lie_algebra.hpp"
#include "hsymp/linalg.hpp"

namespace hsymp {

/// Antisymmetric bilinear form on the double algebra.
struct TwoForm {
  RatMatrix matrix;

  Rational eval(const RatVec& u, const RatVec& v) const;
  bool non_degenerate() const { return sgn(det(matrix)) != 0; }
};

struct SymplecticTriple {
  TwoForm omega1;  // w(x,y) + w(x',y')
  TwoForm omega2;  // -w(x,y') + w(y,x')
  TwoForm omega3;  // w(x,y) - w(x',y')
};

/// The three canonical forms induced on R^m + R^m by the base form.
/// All three are non-degenerate (this is asserted; with a valid input it
/// cannot fail).
SymplecticTriple build_forms(const AffineSymplecticData& data);

/// Chevalley-Eilenberg differential test:
/// d w (x,y,z) = w(x,[y,z]) + w(y,[z,x]) + w(z,[x,y]) on all basis
/// triples. Witness is the first triple where it is nonzero.
CheckOutcome d_closed(const TwoForm& form, const LieAlgebra& L);

struct Endomorphism {
  RatMatrix matrix;

  RatVec apply(const RatVec& v) const { return matrix * v; }
  bool operator==(const Endomorphism& o) const = default;
};

/// The complex structure J(x, y) = (-y, x) and the product structure
/// E(x, y) = (x, -y) of the double decomposition, on dimension 2m.
std::pair<Endomorphism, Endomorphism> build_J_E(std::size_t m);

enum class StructureKind { complex_structure, product_structure };

/// Nijenhuis-type integrability on all basis pairs:
///   product:  S[u,v] = [Su,v] + [u,Sv] - S[Su,Sv]
///   complex:  S[u,v] = [Su,v] + [u,Sv] + S[Su,Sv]
/// Requires S^2 = Id (product) or S^2 = -Id (complex); that precondition
/// is checked and violated input is an input error.
CheckOutcome integrability_check(const Endomorphism& S, StructureKind kind,
                                 const LieAlgebra& L);

}  // namespace hsymp
