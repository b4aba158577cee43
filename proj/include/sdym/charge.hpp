#pragma once

// Charge densities q = Trace(f_yy f_zz - f_yz f_zy) of the initial, left-transformed
// and Baecklund-transformed solutions, radial profiles and total charges.
//
// Densities are raw: no normalization constant is applied. Under these
// conventions the one-instanton total is -pi^2.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdym/lie2.hpp"
#include "sdym/seeds.hpp"

namespace sdym {

enum class DensityTag { Initial, Left, Backlund };

struct DensitySample {
  RealSlicePoint point;
  cplx q;  // Im q is a diagnostic; it vanishes for physically restricted inputs
  DensityTag tag;
};

/// From jets of f of degree >= 2 at the point.
cplx charge_density(const AlgebraElement& f);
cplx charge_density(const SDYMSolution& sol, RealSlicePoint point);
/// Seeds built from a gauge of the vacuum have f linear in (y, z): their
/// density vanishes identically, which is what a charge-only seed reports.
cplx charge_density(const SeedSolution& sol, RealSlicePoint point);

/// S^-1 F_.. S for the second derivatives of the left-transformed field,
/// expressed through f, X+ and g = 1/f- only.
struct LeftSecondDerivatives {
  AlgebraElement yy, yz, zy, zz;
};

LeftSecondDerivatives left_transformed_second_derivatives(const SDYMSolution& sol, RealSlicePoint point);

struct LeftDensity {
  cplx trace_form;  // Trace of the conjugated second derivatives
  cplx log_form;    // q_in + box box ln f-
  double difference;
};

LeftDensity charge_density_left(const SDYMSolution& sol, RealSlicePoint point);

/// (d_y d_ybar + d_z d_zbar)^2 ln u at the jet's base; u of degree >= 4.
cplx box_box_ln(const Jet& u);

/// f- conj(f-) - e^-2tau as a degree-`degree` jet at the point.
Jet backlund_argument(const SeedSolution& sol, RealSlicePoint point, int degree = 4);
/// q_in + box box ln(f- conj(f-) - e^-2tau).
cplx backlund_charge_density(const SeedSolution& sol, RealSlicePoint point);

struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> q_in;
  std::vector<double> q_backlund;
  std::string seed;
};

/// Compares densities at equal radius along several directions; throws
/// NotRadiallySymmetric when they differ by more than `tol` (relative to max(1, |q|)).
void check_radial_symmetry(const SeedSolution& sol, const std::vector<double>& radii, double tol = 1e-10);

/// n radii r_max * i / n, i = 1..n, sampled along the y axis.
RadialProfile radial_profile(const SeedSolution& sol, double r_max, int n, std::string seed_descriptor = {});
void write_profile_csv(std::ostream& os, const RadialProfile& profile);

enum class ChargeMethod { Radial, Grid };

struct TotalChargeOptions {
  // radial: GL panels [0, r0], [r0, 2 r0], ... up to r_max, then a power-law tail
  double r0 = 1.0 / 64.0;
  double r_max = 256.0;
  int panel_order = 32;
  // grid: tensor Gauss-Legendre on [-half_width, half_width]^4, each axis
  // stretched by a sinh map so that nodes concentrate within core_width
  double half_width = 10.0;
  double core_width = 0.5;
  int points_per_axis = 20;
};

struct TotalCharge {
  double value;
  ChargeMethod method;
  double error_estimate;
};

/// 2 pi^2 int_0^inf q(r) r^3 dr for a radial density q. Throws TailNotConverged
/// when q does not decay faster than r^-4.
TotalCharge radial_total(const std::function<double(double)>& q, const TotalChargeOptions& opts = {});

TotalCharge total_charge(const SeedSolution& sol, ChargeMethod method, const TotalChargeOptions& opts = {});

std::string to_string(ChargeMethod m);

}  // namespace sdym
