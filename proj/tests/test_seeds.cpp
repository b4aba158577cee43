#include <doctest.h>

#include "sdym/seeds.hpp"
#include "test_support.hpp"

using namespace sdym;
using sdym::testing::full_gauge_catalogue;
using sdym::testing::random_slice_base;

namespace {

AlgebraElement d(const AlgebraElement& a, Variable v) { return differentiate(a, v); }
Matrix2Jet d(const Matrix2Jet& a, Variable v) { return differentiate(a, v); }

}  // namespace

TEST_CASE("vacuum") {
  SeedSpec s;
  const auto sol = build_solution(s);
  const Base b = Base::on_slice({{0.3, 0.1}, {-0.2, 0.4}});
  CHECK(max_abs_diff(sol.group(b, 3), Matrix2Jet::identity(b, 3)) == 0.0);
  const auto f = sol.f(b, 3);
  CHECK(max_abs_coeff(f.plus) + max_abs_coeff(f.zero) + max_abs_coeff(f.minus) == 0.0);
}

TEST_CASE("f- of a two-factor seed agrees with the closed second-row formula") {
  // PsiBar = [[1, ybar],[0,1]] [[1,0],[zbar,1]] = [[1 + ybar zbar, ybar], [zbar, 1]],
  // second row thetabar = zbar, phibar = 1.
  SeedSpec s;
  const cplx a{1.5, -0.5};
  s.factors = {{FactorShape::Upper, BivariatePoly::u(), 1.0},
               {FactorShape::Lower, BivariatePoly::v(), 1.0}};
  s.chi.minus = BivariatePoly::constant(a);
  const auto sol = build_solution(s);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Base b = random_slice_base(rng, 2.0);
    const cplx y = b[Variable::Y], z = b[Variable::Z];
    // thetabar = zbar, phibar = 1: f- = 1 * (z d_ybar - y d_zbar) zbar - 0 + a = -y + a
    const cplx expected = -y + a;
    CHECK(std::abs(sol.f(b, 2).minus.value() - expected) < 1e-14);
    (void)z;
  }
  {
    // reversed order: second row (zbar, 1 + ybar zbar), f- = -y - z zbar^2 + a
    SeedSpec r = s;
    std::swap(r.factors[0], r.factors[1]);
    const auto rev = build_solution(r);
    const Base b = random_slice_base(rng, 2.0);
    const cplx expected = -b[Variable::Y] - b[Variable::Z] * b[Variable::ZBAR] * b[Variable::ZBAR] + a;
    CHECK(std::abs(rev.f(b, 2).minus.value() - expected) < 1e-14);
  }
  // ChargeOnly evaluator on the same row data gives the same f-
  const ChargeOnlySolution co(BivariatePoly::v(), BivariatePoly::constant(1.0), BivariatePoly::constant(a));
  const Base b = random_slice_base(rng, 2.0);
  CHECK(max_abs_diff(co.f_minus(b, 3), sol.f(b, 3).minus) < 1e-14);
  // and e^-tau = G22
  CHECK(max_abs_diff(co.exp_minus_tau(b, 3), sol.group(b, 3)(1, 1)) < 1e-14);
}

TEST_CASE("catalogue seeds satisfy the first-order system exactly") {
  std::mt19937_64 rng(2024);
  for (const auto& seed : full_gauge_catalogue()) {
    const auto sol = build_solution(seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Base b = random_slice_base(rng, 2.0);
      const auto pj = sol.evaluate(b, 3);
      const Matrix2Jet g_inv = truncate(inverse(pj.group), 2);
      const Matrix2Jet g2 = truncate(pj.group, 2);
      const Matrix2Jet f_z = d(pj.f, Variable::Z).to_matrix();
      const Matrix2Jet f_y = d(pj.f, Variable::Y).to_matrix();
      const Matrix2Jet fb_zb = d(pj.fbar, Variable::ZBAR).to_matrix();
      const Matrix2Jet fb_yb = d(pj.fbar, Variable::YBAR).to_matrix();
      worst = std::max(worst, max_abs_diff(d(pj.group, Variable::YBAR) * g_inv, f_z));
      worst = std::max(worst, max_abs_diff(d(pj.group, Variable::ZBAR) * g_inv, -1.0 * f_y));
      worst = std::max(worst, max_abs_diff(g_inv * d(pj.group, Variable::Y), fb_zb));
      worst = std::max(worst, max_abs_diff(g_inv * d(pj.group, Variable::Z), -1.0 * fb_yb));
      // physically restricted: G = G^H, fbar = f^H
      worst = std::max(worst, max_abs_diff(pj.group, hermitian_conjugate(pj.group)));
      worst = std::max(worst, max_abs_diff(pj.fbar, algebra_hconj(pj.f)));
      (void)g2;
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("the printed zbar-form of the right system is not satisfied") {
  // G^-1 G_zbar = -fbar_ybar fails on a generic seed while G^-1 G_z = -fbar_ybar holds.
  const auto sol = build_solution(full_gauge_catalogue()[1]);
  const Base b = Base::on_slice({{0.4, 0.2}, {-0.3, 0.5}});
  const auto pj = sol.evaluate(b, 2);
  const Matrix2Jet g_inv = truncate(inverse(pj.group), 1);
  const Matrix2Jet fb_yb = d(pj.fbar, Variable::YBAR).to_matrix();
  CHECK(max_abs_diff(g_inv * d(pj.group, Variable::ZBAR), -1.0 * fb_yb) > 1e-3);
  CHECK(max_abs_diff(g_inv * d(pj.group, Variable::Z), -1.0 * fb_yb) < 1e-13);
}

TEST_CASE("second-order equation and component relations") {
  std::mt19937_64 rng(77);
  for (const auto& seed : full_gauge_catalogue()) {
    const auto sol = build_solution(seed);
    for (int i = 0; i < 20; ++i) {
      const Base b = random_slice_base(rng, 2.0);
      const auto pj = sol.evaluate(b, 3);
      const auto f_y = truncate(d(pj.f, Variable::Y), 1);
      const auto f_z = truncate(d(pj.f, Variable::Z), 1);
      const auto lhs = d(d(pj.f, Variable::Y), Variable::YBAR) + d(d(pj.f, Variable::Z), Variable::ZBAR);
      CHECK(max_abs_diff(lhs, commutator(f_z, f_y)) < 1e-12);

      // f-_z = beta_ybar e^-2tau, tau_ybar = f0_z - alpha f-_z
      const auto& p = pj.gauss;
      const Jet e2 = truncate(exp(-2.0 * p.tau), 2);
      const Jet fm_z = differentiate(pj.f.minus, Variable::Z);
      CHECK(max_abs_diff(fm_z, differentiate(p.beta, Variable::YBAR) * e2) < 1e-12);
      CHECK(max_abs_diff(differentiate(pj.f.minus, Variable::Y), -1.0 * differentiate(p.beta, Variable::ZBAR) * e2) <
            1e-12);
      CHECK(max_abs_diff(differentiate(p.tau, Variable::YBAR),
                         differentiate(pj.f.zero, Variable::Z) - truncate(p.alpha, 2) * fm_z) < 1e-12);
    }
  }
}

TEST_CASE("charge-only evaluator for the one-instanton data") {
  const auto seed = one_instanton_seed(1.0);
  const auto co = charge_only_solution(seed);
  const Base origin = Base::on_slice({0.0, 0.0});
  CHECK(std::abs(co.f_minus(origin, 2).value() - 1.0) < 1e-15);
  CHECK(std::abs(co.exp_minus_tau(origin, 2).value()) < 1e-15);
  try {
    (void)co.tau(origin, 2);
    FAIL("expected TauSingular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TauSingular);
  }

  std::mt19937_64 rng(3);
  const cplx a{1.0, 2.0};
  const auto co2 = charge_only_solution(one_instanton_seed(a));
  for (int i = 0; i < 10; ++i) {
    const Base b = random_slice_base(rng, 2.0);
    const Jet y = Jet::variable(Variable::Y, b, 4), yb = Jet::variable(Variable::YBAR, b, 4);
    const Jet z = Jet::variable(Variable::Z, b, 4), zb = Jet::variable(Variable::ZBAR, b, 4);
    const Jet r2 = y * yb + z * zb;
    CHECK(max_abs_diff(co2.f_minus(b, 4), r2 + a) < 1e-14);
    CHECK(max_abs_diff(co2.exp_minus_tau(b, 4), r2) < 1e-14);
    const Jet arg = co2.f_minus(b, 4) * conj_swap(co2.f_minus(b, 4)) - square(co2.exp_minus_tau(b, 4));
    CHECK(max_abs_diff(arg, a * std::conj(a) + (a + std::conj(a)) * r2) < 1e-13);
    CHECK(max_abs_diff(co2.fbar_plus(b, 4), conj_swap(co2.f_minus(b, 4))) < 1e-14);
  }

  const ChargeOnlySolution flat(BivariatePoly::constant(2.0), BivariatePoly::constant({0.0, 1.0}),
                                BivariatePoly::constant(a));
  CHECK(max_abs_diff(flat.f_minus(origin, 3), Jet::constant(a, origin, 3)) == 0.0);

  CHECK_NOTHROW(one_instanton_seed({1.0, 2.0}));
  try {
    (void)one_instanton_seed(-1.0);
    FAIL("expected NonPositiveScale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveScale);
  }
}

TEST_CASE("gauge transformation keeps the enlarged system and, when paired, the restriction") {
  std::mt19937_64 rng(5);
  const auto sol = build_solution(full_gauge_catalogue()[0]);
  GaugeFactor af{FactorShape::Lower, cplx(0.3, 0.1) * BivariatePoly::u() + BivariatePoly::constant(0.2), 1.0};
  const PolyMatrix a = af.matrix();  // on (y, z) when used as A
  const auto paired = sol.gauged(hermitian_partner(a), a);
  const Base b = random_slice_base(rng, 1.5);
  const auto pj = paired.evaluate(b, 3);
  const Matrix2Jet g_inv = truncate(inverse(pj.group), 2);
  CHECK(max_abs_diff(d(pj.group, Variable::YBAR) * g_inv, d(pj.f, Variable::Z).to_matrix()) < 1e-12);
  CHECK(max_abs_diff(g_inv * d(pj.group, Variable::Y), d(pj.fbar, Variable::ZBAR).to_matrix()) < 1e-12);
  CHECK(max_abs_diff(pj.group, hermitian_conjugate(pj.group)) < 1e-12);
}
