#include "sdym/charge.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "sdym/errors.hpp"
#include "sdym/quadrature.hpp"

namespace sdym {

namespace {

constexpr double kTwoPiSquared = 2.0 * std::numbers::pi * std::numbers::pi;

AlgebraElement d(const AlgebraElement& a, Variable v) { return differentiate(a, v); }
AlgebraElement d(const AlgebraElement& a, Variable v, Variable w) { return differentiate(differentiate(a, v), w); }
Jet d(const Jet& a, Variable v) { return differentiate(a, v); }
Jet d(const Jet& a, Variable v, Variable w) { return differentiate(differentiate(a, v), w); }

AlgebraElement at_point(const AlgebraElement& a) { return truncate(a, 0); }
Jet at_point(const Jet& a) { return truncate(a, 0); }

// directions (y, z) of unit length on the slice
const std::array<RealSlicePoint, 4>& probe_directions() {
  static const std::array<RealSlicePoint, 4> dirs = [] {
    const auto dir = [](double phi, double t1, double t2) {
      return RealSlicePoint{std::polar(std::cos(phi), t1), std::polar(std::sin(phi), t2)};
    };
    return std::array<RealSlicePoint, 4>{RealSlicePoint{1.0, 0.0}, RealSlicePoint{0.0, 1.0},
                                         dir(0.4, 0.7, -1.3), dir(1.1, std::numbers::pi / 2, 2.2)};
  }();
  return dirs;
}

RealSlicePoint scaled(const RealSlicePoint& p, double r) { return {p.y * r, p.z * r}; }

}  // namespace

cplx charge_density(const AlgebraElement& f) {
  const auto yy = at_point(d(f, Variable::Y, Variable::Y));
  const auto zz = at_point(d(f, Variable::Z, Variable::Z));
  const auto yz = at_point(d(f, Variable::Y, Variable::Z));
  return (trace_product(yy, zz) - trace_product(yz, yz)).value();
}

cplx charge_density(const SDYMSolution& sol, RealSlicePoint point) {
  return charge_density(sol.f(Base::on_slice(point), 2));
}

cplx charge_density(const SeedSolution& sol, RealSlicePoint point) {
  if (const auto* full = std::get_if<SDYMSolution>(&sol)) return charge_density(*full, point);
  return 0.0;
}

LeftSecondDerivatives left_transformed_second_derivatives(const SDYMSolution& sol, RealSlicePoint point) {
  using V = Variable;
  const Base b = Base::on_slice(point);
  const AlgebraElement f = sol.f(b, 3);
  const Jet g = [&] {
    try {
      return reciprocal(f.minus);
    } catch (const Error&) {
      throw Error(ErrorCode::SingularTransform, "f- vanishes at the sample point");
    }
  }();

  AlgebraElement x = AlgebraElement::zeros(b, 0);
  x.plus = Jet::constant(1.0, b, 0);
  const auto f_y = at_point(d(f, V::Y)), f_z = at_point(d(f, V::Z));
  const auto cx = [&](const AlgebraElement& a) { return commutator(x, a); };
  const auto gv = [&](V v) { return at_point(d(g, v)).value(); };
  const auto gvw = [&](V v, V w) { return at_point(d(g, v, w)).value(); };
  const cplx g0 = g.value();

  LeftSecondDerivatives out;
  out.yy = at_point(d(f, V::Y, V::Y)) + g0 * commutator(cx(f_y), f_y) - 2.0 * gv(V::ZBAR) * cx(f_y) -
           g0 * cx(at_point(d(f, V::Y, V::ZBAR))) + gvw(V::ZBAR, V::ZBAR) * x;
  out.yz = at_point(d(f, V::Y, V::Z)) + g0 * commutator(cx(f_z), f_y) + gv(V::YBAR) * cx(f_y) -
           gv(V::ZBAR) * cx(f_z) - g0 * cx(at_point(d(f, V::Z, V::ZBAR))) - gvw(V::YBAR, V::ZBAR) * x;
  out.zy = at_point(d(f, V::Z, V::Y)) + g0 * commutator(cx(f_y), f_z) - gv(V::ZBAR) * cx(f_z) +
           gv(V::YBAR) * cx(f_y) + g0 * cx(at_point(d(f, V::Y, V::YBAR))) - gvw(V::YBAR, V::ZBAR) * x;
  out.zz = at_point(d(f, V::Z, V::Z)) + g0 * commutator(cx(f_z), f_z) + 2.0 * gv(V::YBAR) * cx(f_z) +
           g0 * cx(at_point(d(f, V::Z, V::YBAR))) + gvw(V::YBAR, V::YBAR) * x;
  return out;
}

LeftDensity charge_density_left(const SDYMSolution& sol, RealSlicePoint point) {
  const auto s = left_transformed_second_derivatives(sol, point);
  LeftDensity out;
  out.trace_form = (trace_product(s.yy, s.zz) - trace_product(s.yz, s.zy)).value();
  const Base b = Base::on_slice(point);
  cplx box;
  try {
    box = box_box_ln(sol.f(b, 4).minus);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularTransform, "f- vanishes at the sample point");
  }
  out.log_form = charge_density(sol, point) + box;
  out.difference = std::abs(out.trace_form - out.log_form);
  return out;
}

cplx box_box_ln(const Jet& u) {
  const Jet l = log(u);
  return l.derivative({2, 2, 0, 0}) + 2.0 * l.derivative({1, 1, 1, 1}) + l.derivative({0, 0, 2, 2});
}

Jet backlund_argument(const SeedSolution& sol, RealSlicePoint point, int degree) {
  const Base b = Base::on_slice(point);
  if (const auto* full = std::get_if<SDYMSolution>(&sol)) {
    const PointJets pj = full->evaluate(b, degree);
    return pj.f.minus * conj_swap(pj.f.minus) - square(pj.group(1, 1));
  }
  const auto& co = std::get<ChargeOnlySolution>(sol);
  const Jet fm = co.f_minus(b, degree);
  return fm * conj_swap(fm) - square(co.exp_minus_tau(b, degree));
}

cplx backlund_charge_density(const SeedSolution& sol, RealSlicePoint point) {
  return charge_density(sol, point) + box_box_ln(backlund_argument(sol, point, 4));
}

void check_radial_symmetry(const SeedSolution& sol, const std::vector<double>& radii, double tol) {
  const auto& dirs = probe_directions();
  for (double r : radii) {
    const cplx ref = backlund_charge_density(sol, scaled(dirs[0], r));
    for (std::size_t k = 1; k < dirs.size(); ++k) {
      const cplx q = backlund_charge_density(sol, scaled(dirs[k], r));
      if (std::abs(q - ref) > tol * std::max(1.0, std::abs(ref)))
        throw Error(ErrorCode::NotRadiallySymmetric, "density depends on direction at r = " + std::to_string(r));
    }
  }
}

RadialProfile radial_profile(const SeedSolution& sol, double r_max, int n, std::string seed_descriptor) {
  RadialProfile p;
  p.seed = std::move(seed_descriptor);
  for (int i = 1; i <= n; ++i) p.radii.push_back(r_max * i / n);
  check_radial_symmetry(sol, p.radii);
  for (double r : p.radii) {
    p.q_in.push_back(charge_density(sol, {r, 0.0}).real());
    p.q_backlund.push_back(backlund_charge_density(sol, {r, 0.0}).real());
  }
  return p;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
  const auto old = os.precision(17);
  os << "r,q_in,q_backlund\n";
  for (std::size_t i = 0; i < profile.radii.size(); ++i)
    os << profile.radii[i] << ',' << profile.q_in[i] << ',' << profile.q_backlund[i] << '\n';
  os.precision(old);
}

TotalCharge radial_total(const std::function<double(double)>& q, const TotalChargeOptions& opts) {
  const GaussLegendreRule& rule = gauss_legendre(opts.panel_order);
  double sum = 0.0;
  const auto panel = [&](double a, double b) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = a + rule.nodes[i] * (b - a);
      sum += rule.weights[i] * (b - a) * q(r) * r * r * r;
    }
  };
  panel(0.0, opts.r0);
  double r = opts.r0;
  for (; r < opts.r_max; r *= 2.0) panel(r, 2.0 * r);

  // q ~ C r^-p beyond r: int_r^inf C s^(3-p) ds = q(r) r^4 / (p - 4)
  const auto tail = [&](double at) {
    const double q1 = q(at), q0 = q(at / 2.0);
    if (q1 == 0.0 && q0 == 0.0) return 0.0;
    if (q1 == 0.0 || q0 == 0.0 || (q1 > 0.0) != (q0 > 0.0))
      throw Error(ErrorCode::TailNotConverged, "density changes sign in the tail");
    const double p = std::log(q0 / q1) / std::log(2.0);
    if (p < 4.5) throw Error(ErrorCode::TailNotConverged, "density decays too slowly for a finite total");
    return q1 * std::pow(at, 4) / (p - 4.0);
  };
  const double t = tail(r);
  const double t_prev = tail(r / 2.0);
  // the previous tail also covers [r/2, r], which the panels already did
  double between = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = r / 2.0 + rule.nodes[i] * (r / 2.0);
    between += rule.weights[i] * (r / 2.0) * q(s) * s * s * s;
  }
  const double estimate = std::abs(t_prev - (between + t));
  return {kTwoPiSquared * (sum + t), ChargeMethod::Radial, kTwoPiSquared * estimate};
}

TotalCharge total_charge(const SeedSolution& sol, ChargeMethod method, const TotalChargeOptions& opts) {
  if (method == ChargeMethod::Radial) {
    check_radial_symmetry(sol, {0.1, 0.5, 1.0, 3.0});
    return radial_total([&](double r) { return backlund_charge_density(sol, {r, 0.0}).real(); }, opts);
  }
  // x = s sinh(t asinh(L / s)), t in [-1, 1]: nodes cluster in the core |x| < s
  const GaussLegendreRule& rule = gauss_legendre(opts.points_per_axis);
  const double l = opts.half_width, s = opts.core_width;
  const double a = std::asinh(l / s);
  const std::size_t n = rule.nodes.size();
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * rule.nodes[i] - 1.0;
    x[i] = s * std::sinh(a * t);
    w[i] = 2.0 * rule.weights[i] * s * a * std::cosh(a * t);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          sum += w[i] * w[j] * w[k] * w[m] *
                 backlund_charge_density(sol, {cplx(x[i], x[j]), cplx(x[k], x[m])}).real();
  // outside the box, assuming r^-8 decay from the value on the axis at the box face
  const double edge = std::abs(backlund_charge_density(sol, {l, 0.0}).real());
  return {sum, ChargeMethod::Grid, kTwoPiSquared * edge * std::pow(l, 4) / 4.0};
}

std::string to_string(ChargeMethod m) { return m == ChargeMethod::Radial ? "radial" : "grid"; }

}  // namespace sdym
