#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsymp/curvature.hpp"
#include "hsymp/families.hpp"
#include "hsymp/forms.hpp"
#include "hsymp/geodesics.hpp"
#include "hsymp/metric.hpp"
#include "oracle_helpers.hpp"

using namespace hsymp;

namespace {

AffineSymplecticData threestep(long a, long b, long c) {
  return threestep_data({rat(a), rat(b), rat(c)});
}

TwoForm wedge(std::size_t d, std::size_t i, std::size_t j) {
  RatMatrix m(d, d);
  m.at(i, j) = 1;
  m.at(j, i) = -1;
  return {std::move(m)};
}

}  // namespace

TEST_CASE("build_forms") {
  const auto data = threestep(0, 1, 0);
  const SymplecticTriple t = build_forms(data);

  SUBCASE("omega1 pairs within each half") {
    RatMatrix expected(8, 8);
    for (std::size_t i : {0u, 2u, 4u, 6u}) {
      expected.at(i, i + 1) = 1;
      expected.at(i + 1, i) = -1;
    }
    CHECK(t.omega1.matrix == expected);
  }
  SUBCASE("omega2 vanishes on the unprimed half") {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(t.omega2.matrix.at(i, j) == 0);
  }
  SUBCASE("omega3 restricted to the primed half is minus the base form") {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(t.omega3.matrix.at(4 + i, 4 + j) == -data.omega().matrix().at(i, j));
  }
  SUBCASE("all three are antisymmetric and non-degenerate") {
    for (const TwoForm* f : {&t.omega1, &t.omega2, &t.omega3}) {
      CHECK(f->matrix.is_antisymmetric());
      CHECK(f->non_degenerate());
    }
  }
}

TEST_CASE("d_closed") {
  SUBCASE("the three induced forms are closed on every family checked") {
    for (const auto& data : {threestep(0, 1, 0), threestep(2, -1, 1), kodaira_data({1})}) {
      const LieAlgebra L = build_bracket(data);
      const SymplecticTriple t = build_forms(data);
      CHECK(d_closed(t.omega1, L).pass);
      CHECK(d_closed(t.omega2, L).pass);
      CHECK(d_closed(t.omega3, L).pass);
    }
  }
  SUBCASE("any form is closed on an abelian algebra") {
    const LieAlgebra abelian(8);
    oracle::Rng rng(55);
    RatMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) {
        m.at(i, j) = rng.rational();
        m.at(j, i) = -m.at(i, j);
      }
    CHECK(d_closed(TwoForm{std::move(m)}, abelian).pass);
  }
  SUBCASE("on the two-step algebra e^1^f^2 is closed but e^2^f^2 is not") {
    const LieAlgebra L = build_bracket(kodaira_data({1}));
    CHECK(d_closed(wedge(8, 0, 5), L).pass);
    const CheckOutcome out = d_closed(wedge(8, 1, 5), L);
    CHECK(!out.pass);
    REQUIRE(out.where);
    CHECK(out.where->i == 0);
    CHECK(out.where->j == 1);
    CHECK(out.where->k == 4);
  }
}

TEST_CASE("J and E") {
  const auto [J, E] = build_J_E(4);
  const RatMatrix id = RatMatrix::identity(8);
  CHECK(J.matrix * J.matrix == -id);
  CHECK(E.matrix * E.matrix == id);
  CHECK(J.matrix * E.matrix == -(E.matrix * J.matrix));
  const RatMatrix je = J.matrix * E.matrix;
  CHECK(je * je == -id);
  CHECK(J.apply(basis_vec(8, 0)) == basis_vec(8, 4));                     // J e1 = f1
  CHECK(J.apply(basis_vec(8, 4)) == scale(rat(-1), basis_vec(8, 0)));     // J f1 = -e1
  CHECK(E.apply(basis_vec(8, 1)) == basis_vec(8, 1));
  CHECK(E.apply(basis_vec(8, 5)) == scale(rat(-1), basis_vec(8, 5)));
}

TEST_CASE("integrability_check") {
  const auto [J, E] = build_J_E(4);
  SUBCASE("J and E are integrable on validated-data algebras") {
    for (const auto& data : {threestep(0, 1, 0), threestep(3, 1, -2), kodaira_data({1})}) {
      const LieAlgebra L = build_bracket(data);
      CHECK(integrability_check(J, StructureKind::complex_structure, L).pass);
      CHECK(integrability_check(E, StructureKind::product_structure, L).pass);
    }
  }
  SUBCASE("anything is integrable on the abelian algebra") {
    const LieAlgebra abelian(8);
    CHECK(integrability_check(J, StructureKind::complex_structure, abelian).pass);
    CHECK(integrability_check(E, StructureKind::product_structure, abelian).pass);
  }
  SUBCASE("wrong square is an input error") {
    const LieAlgebra abelian(8);
    CHECK_THROWS_AS(integrability_check(J, StructureKind::product_structure, abelian),
                    input_error);
  }
}

TEST_CASE("build_metric") {
  const auto data = threestep(0, 1, 0);
  const Metric g = build_metric(data);

  SUBCASE("matrix of the canonical base form") {
    // g = 2(-e^1.f^2 + e^2.f^1 - e^3.f^4 + e^4.f^3) as a symmetric matrix.
    RatMatrix expected(8, 8);
    auto put = [&expected](std::size_t i, std::size_t j, long v) {
      expected.at(i, j) = v;
      expected.at(j, i) = v;
    };
    put(0, 5, -1);
    put(1, 4, 1);
    put(2, 7, -1);
    put(3, 6, 1);
    CHECK(g.matrix == expected);
  }
  SUBCASE("both halves are isotropic") {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(g.matrix.at(i, j) == 0);
        CHECK(g.matrix.at(4 + i, 4 + j) == 0);
      }
  }
  SUBCASE("neutral signature by exact congruence") {
    const Signature s = metric_signature(g);
    CHECK(s.positive == 4);
    CHECK(s.negative == 4);
    CHECK(s.zero == 0);
  }
  SUBCASE("invariance and recovery identities") {
    const auto [J, E] = build_J_E(4);
    const SymplecticTriple t = build_forms(data);
    CHECK(J.matrix.transpose() * g.matrix * J.matrix == g.matrix);
    CHECK(E.matrix.transpose() * g.matrix * E.matrix == -g.matrix);
    CHECK(t.omega1.matrix == J.matrix.transpose() * g.matrix);
    CHECK(t.omega2.matrix == E.matrix.transpose() * g.matrix);
    CHECK(t.omega3.matrix == (J.matrix * E.matrix).transpose() * g.matrix);
  }
}

TEST_CASE("levi_civita") {
  SUBCASE("two-step family n=1 table") {
    const MetricConnection conn = levi_civita(kodaira_data({1}));
    // Nonzero values: D_{e1}e1 = e2, D_{e1}f1 = f2, D_{f3}e3 = e4, D_{f3}f3 = f4.
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t j = 0; j < 8; ++j) {
        RatVec expected(8);
        if (a == 0 && j == 0) expected[1] = 1;
        if (a == 0 && j == 4) expected[5] = 1;
        if (a == 6 && j == 2) expected[3] = 1;
        if (a == 6 && j == 6) expected[7] = 1;
        CHECK(conn.basis_ops[a].col(j) == expected);
      }
  }
  SUBCASE("zero connections give the zero connection") {
    const auto data = require_valid(Connection(4), Connection(4), SymplecticForm::canonical(4));
    const MetricConnection conn = levi_civita(data);
    for (const RatMatrix& op : conn.basis_ops) CHECK(op.is_zero());
  }
  SUBCASE("independent Koszul oracle agrees at (0,1,0)") {
    const auto data = threestep(0, 1, 0);
    const MetricConnection conn = levi_civita(data);
    const LieAlgebra L = build_bracket(data);
    const Metric g = build_metric(data);
    const auto ginv = inverse(g.matrix);
    REQUIRE(ginv);
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        RatVec rhs(8);
        for (std::size_t w = 0; w < 8; ++w) {
          Rational s = g.eval(L.bracket_basis(a, b), basis_vec(8, w));
          s -= g.eval(L.bracket_basis(b, w), basis_vec(8, a));
          s += g.eval(L.bracket_basis(w, a), basis_vec(8, b));
          rhs[w] = s / 2;
        }
        CHECK(*ginv * rhs == conn.basis_ops[a].col(b));
      }
  }
}

TEST_CASE("curvature") {
  SUBCASE("two-step family is flat") {
    CHECK(curvature(kodaira_data({1})).is_zero());
    CHECK(curvature(kodaira_data({2})).is_zero());
  }
  SUBCASE("three-parameter family with b != c is not flat") {
    const CurvatureTensor R = curvature(threestep(0, 1, 0));
    CHECK(!R.is_zero());
    SUBCASE("diagonal pairs vanish by antisymmetry") {
      for (std::size_t i = 0; i < 8; ++i) CHECK(R.pair_matrix(i, i).is_zero());
    }
    SUBCASE("pair matrices flip sign with their arguments") {
      CHECK(R.pair_matrix(0, 4) == -R.pair_matrix(4, 0));
    }
    SUBCASE("first Bianchi identity") { CHECK(bianchi_check(R).pass); }
  }
  SUBCASE("b == c is flat") { CHECK(curvature(threestep(5, 2, 2)).is_zero()); }
}

TEST_CASE("ricci vanishes") {
  CHECK(ricci(kodaira_data({1})).is_zero());
  CHECK(ricci(threestep(0, 1, 0)).is_zero());
  CHECK(ricci(threestep(1, 3, -2)).is_zero());
  const auto abelian = require_valid(Connection(4), Connection(4), SymplecticForm::canonical(4));
  CHECK(ricci(abelian).is_zero());
}

TEST_CASE("flatness_report") {
  SUBCASE("b == c: two-step and flat") {
    const FlatnessReport r = flatness_report(threestep(1, 1, 1));
    CHECK(r.step == 2);
    CHECK(r.nabla_product_zero);
    CHECK(r.flat);
    CHECK(r.consistent());
  }
  SUBCASE("b != c: three-step and not flat") {
    const FlatnessReport r = flatness_report(threestep(0, 1, 0));
    CHECK(r.step == 3);
    CHECK(!r.nabla_product_zero);
    CHECK(!r.flat);
    CHECK(r.consistent());
  }
  SUBCASE("abelian: one-step and flat") {
    const auto abelian =
        require_valid(Connection(4), Connection(4), SymplecticForm::canonical(4));
    const FlatnessReport r = flatness_report(abelian);
    CHECK(r.step == 1);
    CHECK(r.nabla_product_zero);
    CHECK(r.flat);
  }
}

TEST_CASE("geodesic_closed_form") {
  SUBCASE("abelian data gives constant curves") {
    const auto abelian =
        require_valid(Connection(4), Connection(4), SymplecticForm::canonical(4));
    oracle::Rng rng(66);
    const GeodesicCurve c = geodesic_closed_form(abelian, rng.vec(4), rng.vec(4));
    CHECK(is_zero(c.a_coef));
    CHECK(is_zero(c.b_coef));
  }
  SUBCASE("two-step family, a0 = e1, b0 = 0: a(t) = -e2 t + e1") {
    const GeodesicCurve c =
        geodesic_closed_form(kodaira_data({1}), basis_vec(4, 0), zero_vec(4));
    CHECK(c.a_coef == scale(rat(-1), basis_vec(4, 1)));
    CHECK(is_zero(c.b_coef));
    CHECK(c.a_at(rat(3)) == sub(basis_vec(4, 0), scale(rat(3), basis_vec(4, 1))));
  }
  SUBCASE("zero residual at random rational initial values") {
    // geodesic_closed_form throws on any nonzero residual coefficient,
    // so constructing the curve is itself the check.
    oracle::Rng rng(77);
    for (const auto& data : {threestep(0, 1, 0), threestep(2, -1, 1), kodaira_data({1})}) {
      for (int t = 0; t < 10; ++t)
        CHECK_NOTHROW(geodesic_closed_form(data, rng.vec(data.dim()), rng.vec(data.dim())));
    }
  }
}

TEST_CASE("geodesic_numeric") {
  SUBCASE("abelian trajectories stay put to machine precision") {
    const auto abelian =
        require_valid(Connection(4), Connection(4), SymplecticForm::canonical(4));
    oracle::Rng rng(88);
    const RatVec a0 = rng.vec(4), b0 = rng.vec(4);
    const auto samples = geodesic_numeric(abelian, a0, b0, 10.0, 1e-3);
    const GeodesicCurve c = geodesic_closed_form(abelian, a0, b0);
    CHECK(max_deviation(samples, c) <= 1e-15);
  }
  SUBCASE("three-parameter family stays within 1e-8 of the closed form") {
    const auto data = threestep(0, 1, 0);
    const RatVec e1 = basis_vec(4, 0);
    const auto samples = geodesic_numeric(data, e1, e1, 10.0, 1e-3);
    const GeodesicCurve c = geodesic_closed_form(data, e1, e1);
    CHECK(max_deviation(samples, c) <= 1e-8);
  }
  SUBCASE("the integrator is exact on straight lines, so halving the step only moves roundoff") {
    // Every solution of this system is affine in t, and a Runge-Kutta
    // stage evaluated anywhere on a straight trajectory returns its
    // constant slope; the classical truncation error is identically zero
    // and the measured deviation is accumulated roundoff, which grows
    // roughly linearly with the number of steps.
    const auto data = threestep(0, 1, 0);
    const RatVec e1 = basis_vec(4, 0);
    const GeodesicCurve c = geodesic_closed_form(data, e1, e1);
    const double dev_h = max_deviation(geodesic_numeric(data, e1, e1, 10.0, 1e-3), c);
    const double dev_h2 = max_deviation(geodesic_numeric(data, e1, e1, 10.0, 5e-4), c);
    CHECK(dev_h <= 1e-10);
    CHECK(dev_h2 <= 1e-10);
    CHECK(dev_h2 <= 8 * std::max(dev_h, 1e-16));  // no fourth-order shrink exists here
  }
  SUBCASE("invalid step is an input error") {
    CHECK_THROWS_AS(geodesic_numeric(threestep(0, 1, 0), zero_vec(4), zero_vec(4), 1.0, 0.0),
                    input_error);
  }
}
