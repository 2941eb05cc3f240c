#pragma once

#include "hsymp/forms.hpp"
#include "hsymp/lie_algebra.hpp"

namespace hsymp {

/// [Jx, Jy] = [x, y] on all basis pairs.
CheckOutcome abelian_J(const LieAlgebra& L, const Endomorphism& J);

/// [Ex, Ey] = -[x, y] on all basis pairs.
CheckOutcome abelian_E(const LieAlgebra& L, const Endomorphism& E);

/// Both eigenspaces of E are abelian subalgebras. A bracket of two
/// eigenvectors that leaves the eigenspace marks E as non-integrable and
/// fails the check with the offending pair.
CheckOutcome subalgebras_abelian(const LieAlgebra& L, const Endomorphism& E);

/// For every functional annihilating one eigenspace of E, its
/// differential (df)(x ^ y) = -f([x, y]) vanishes on both diagonal blocks
/// eigenspace x eigenspace.
CheckOutcome annihilator_condition(const LieAlgebra& L, const Endomorphism& E);

/// The four conditions evaluated independently. They are provably
/// equivalent whenever {J, E} is a complex product structure on L
/// (J^2 = -Id, E^2 = Id, JE = -EJ, both integrable, L a Lie algebra);
/// `structure_valid` records whether that hypothesis holds. On a valid
/// structure a disagreement between the four is an internal error; on an
/// invalid one the report is purely informational.
struct AbelianReport {
  bool j_abelian = false;
  bool subalgebras = false;
  bool annihilator = false;
  bool e_abelian = false;
  bool structure_valid = false;

  bool all_equal() const {
    return j_abelian == subalgebras && subalgebras == annihilator && annihilator == e_abelian;
  }
};

AbelianReport abelian_report(const LieAlgebra& L, const Endomorphism& J,
                             const Endomorphism& E);

}  // namespace hsymp
