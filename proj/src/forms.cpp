#include "hsymp/forms.hpp"

#include "hsymp/errors.hpp"

namespace hsymp {

Rational TwoForm::eval(const RatVec& u, const RatVec& v) const {
  const std::size_t n = matrix.rows();
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(matrix.at(i, j)) != 0 && sgn(v[j]) != 0) s += u[i] * matrix.at(i, j) * v[j];
  }
  return s;
}

SymplecticTriple build_forms(const AffineSymplecticData& data) {
  const std::size_t m = data.dim();
  const RatMatrix& w = data.omega().matrix();
  RatMatrix m1(2 * m, 2 * m), m2(2 * m, 2 * m), m3(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& wij = w.at(i, j);
      if (sgn(wij) == 0) continue;
      m1.at(i, j) = wij;
      m1.at(m + i, m + j) = wij;
      m2.at(i, m + j) = -wij;
      m2.at(m + i, j) = -wij;
      m3.at(i, j) = wij;
      m3.at(m + i, m + j) = -wij;
    }
  SymplecticTriple t{{std::move(m1)}, {std::move(m2)}, {std::move(m3)}};
  if (!t.omega1.non_degenerate() || !t.omega2.non_degenerate() || !t.omega3.non_degenerate())
    throw internal_error("induced two-form degenerate although the base form is not");
  return t;
}

CheckOutcome d_closed(const TwoForm& form, const LieAlgebra& L) {
  const std::size_t d = L.dim();
  if (form.matrix.rows() != d) throw input_error("form and algebra dimensions differ");
  for (std::size_t i = 0; i < d; ++i) {
    const RatVec bi = basis_vec(d, i);
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVec bj = basis_vec(d, j);
      for (std::size_t k = j + 1; k < d; ++k) {
        const RatVec bk = basis_vec(d, k);
        Rational s = form.eval(bi, L.bracket_basis(j, k));
        s += form.eval(bj, L.bracket_basis(k, i));
        s += form.eval(bk, L.bracket_basis(i, j));
        if (sgn(s) != 0) return {false, Witness{i, j, k}};
      }
    }
  }
  return {};
}

std::pair<Endomorphism, Endomorphism> build_J_E(std::size_t m) {
  RatMatrix j(2 * m, 2 * m), e(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j.at(i, m + i) = -1;  // J f_i = -e_i
    j.at(m + i, i) = 1;   // J e_i = f_i
    e.at(i, i) = 1;
    e.at(m + i, m + i) = -1;
  }
  return {Endomorphism{std::move(j)}, Endomorphism{std::move(e)}};
}

CheckOutcome integrability_check(const Endomorphism& S, StructureKind kind,
                                 const LieAlgebra& L) {
  const std::size_t d = L.dim();
  if (S.matrix.rows() != d || S.matrix.cols() != d)
    throw input_error("endomorphism and algebra dimensions differ");
  const RatMatrix square = S.matrix * S.matrix;
  const RatMatrix expected_square = kind == StructureKind::complex_structure
                                        ? -RatMatrix::identity(d)
                                        : RatMatrix::identity(d);
  if (square != expected_square)
    throw input_error("endomorphism is not an (almost) structure of the requested kind");

  const int sign = kind == StructureKind::complex_structure ? +1 : -1;
  for (std::size_t i = 0; i < d; ++i) {
    const RatVec si = S.matrix.col(i);
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVec sj = S.matrix.col(j);
      const RatVec lhs = S.apply(L.bracket_basis(i, j));
      RatVec rhs = add(L.bracket(si, basis_vec(d, j)), L.bracket(basis_vec(d, i), sj));
      const RatVec nested = S.apply(L.bracket(si, sj));
      rhs = sign > 0 ? add(rhs, nested) : sub(rhs, nested);
      if (lhs != rhs) return {false, Witness{i, j, 0}};
    }
  }
  return {};
}

}  // namespace hsymp
