#include "hsymp/abelian.hpp"

#include "hsymp/errors.hpp"

namespace hsymp {

CheckOutcome abelian_J(const LieAlgebra& L, const Endomorphism& J) {
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const RatVec ji = J.matrix.col(i);
    for (std::size_t j = i + 1; j < d; ++j) {
      if (L.bracket(ji, J.matrix.col(j)) != L.bracket_basis(i, j))
        return {false, Witness{i, j, 0}};
    }
  }
  return {};
}

CheckOutcome abelian_E(const LieAlgebra& L, const Endomorphism& E) {
  const std::size_t d = L.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const RatVec ei = E.matrix.col(i);
    for (std::size_t j = i + 1; j < d; ++j) {
      if (L.bracket(ei, E.matrix.col(j)) != scale(Rational(-1), L.bracket_basis(i, j)))
        return {false, Witness{i, j, 0}};
    }
  }
  return {};
}

namespace {

Subspace eigenspace(const Endomorphism& E, int sign) {
  const std::size_t d = E.matrix.rows();
  const RatMatrix shifted =
      sign > 0 ? E.matrix - RatMatrix::identity(d) : E.matrix + RatMatrix::identity(d);
  const RatMatrix ns = nullspace(shifted);
  std::vector<RatVec> rows;
  rows.reserve(ns.rows());
  for (std::size_t i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
  return Subspace::span(rows, d);
}

}  // namespace

CheckOutcome subalgebras_abelian(const LieAlgebra& L, const Endomorphism& E) {
  for (int sign : {+1, -1}) {
    const Subspace eig = eigenspace(E, sign);
    for (std::size_t i = 0; i < eig.rank(); ++i)
      for (std::size_t j = i + 1; j < eig.rank(); ++j) {
        const RatVec br = L.bracket(eig.basis().row(i), eig.basis().row(j));
        if (!eig.contains(br)) return {false, Witness{i, j, 0}};  // not even a subalgebra
        if (!is_zero(br)) return {false, Witness{i, j, 0}};
      }
  }
  return {};
}

CheckOutcome annihilator_condition(const LieAlgebra& L, const Endomorphism& E) {
  const std::size_t d = L.dim();
  const Subspace plus = eigenspace(E, +1);
  const Subspace minus = eigenspace(E, -1);

  // Annihilator of a subspace = kernel of pairing against its basis.
  auto annihilator = [](const Subspace& s) { return nullspace(s.basis()); };

  for (const Subspace* target : {&plus, &minus}) {
    const RatMatrix ann = annihilator(*target);
    for (std::size_t f = 0; f < ann.rows(); ++f) {
      const RatVec functional = ann.row(f);
      // (df)(x ^ y) = -f([x, y]) must vanish for x, y in one eigenspace.
      for (const Subspace* block : {&plus, &minus}) {
        const RatMatrix& basis = block->basis();
        for (std::size_t i = 0; i < basis.rows(); ++i)
          for (std::size_t j = i + 1; j < basis.rows(); ++j) {
            const RatVec br = L.bracket(basis.row(i), basis.row(j));
            Rational pairing = 0;
            for (std::size_t k = 0; k < d; ++k)
              if (sgn(functional[k]) != 0 && sgn(br[k]) != 0) pairing += functional[k] * br[k];
            if (sgn(pairing) != 0) return {false, Witness{i, j, f}};
          }
      }
    }
  }
  return {};
}

AbelianReport abelian_report(const LieAlgebra& L, const Endomorphism& J,
                             const Endomorphism& E) {
  const std::size_t d = L.dim();
  AbelianReport rep;
  rep.j_abelian = abelian_J(L, J).pass;
  rep.subalgebras = subalgebras_abelian(L, E).pass;
  rep.annihilator = annihilator_condition(L, E).pass;
  rep.e_abelian = abelian_E(L, E).pass;

  const RatMatrix id = RatMatrix::identity(d);
  bool valid = J.matrix * J.matrix == -id && E.matrix * E.matrix == id &&
               J.matrix * E.matrix == -(E.matrix * J.matrix) && jacobi_check(L).pass;
  if (valid) {
    // Integrability needs the almost-structure preconditions established
    // above, so it is only queried on that branch.
    valid = integrability_check(J, StructureKind::complex_structure, L).pass &&
            integrability_check(E, StructureKind::product_structure, L).pass &&
            eigenspace(E, +1).rank() == d / 2;
  }
  rep.structure_valid = valid;

  if (rep.structure_valid && !rep.all_equal())
    throw internal_error("abelian-structure conditions disagree on a complex product structure");
  return rep;
}

}  // namespace hsymp
