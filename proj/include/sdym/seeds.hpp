#pragma once

// Exact solutions obtained from the vacuum G = 1 by a gauge transformation
// G = PsiBar(ybar, zbar) Psi(y, z). With L_v = PsiBar_v PsiBar^-1 the algebra
// field is f = z L_ybar - y L_zbar + chi(ybar, zbar), and symmetrically
// fbar = zbar R_y - ybar R_z + chibar(y, z) with R_v = Psi^-1 Psi_v.

#include <optional>
#include <variant>
#include <vector>

#include "sdym/lie2.hpp"
#include "sdym/poly.hpp"

namespace sdym {

enum class FactorShape { Upper, Lower, Diag };

/// [[1,p],[0,1]], [[1,0],[p,1]] or [[d,0],[0,1/d]].
struct GaugeFactor {
  FactorShape shape = FactorShape::Upper;
  BivariatePoly poly;
  cplx d{1.0, 0.0};

  PolyMatrix matrix() const;
};

struct PolyAlgebra {
  BivariatePoly plus;
  BivariatePoly zero;
  BivariatePoly minus;

  PolyMatrix to_matrix() const;
};

enum class SeedKind { FullGauge, ChargeOnly };

struct SeedSpec {
  SeedKind kind = SeedKind::FullGauge;
  // full gauge: PsiBar = product of factors (left to right), plus chi
  std::vector<GaugeFactor> factors;
  PolyAlgebra chi;
  // charge only: the second row (theta_bar, phi_bar) of PsiBar and psi_bar
  BivariatePoly theta_bar;
  BivariatePoly phi_bar;
  BivariatePoly psi_bar;
};

/// Jets of every field at one expansion point.
struct PointJets {
  Matrix2Jet group;
  GaussParams gauss;
  AlgebraElement f;
  AlgebraElement fbar;
};

class SDYMSolution {
 public:
  /// psi_bar and chi live on (ybar, zbar); psi and chi_bar on (y, z).
  SDYMSolution(PolyMatrix psi_bar, PolyMatrix psi, PolyMatrix chi, PolyMatrix chi_bar);

  static SDYMSolution vacuum();

  Matrix2Jet group(const Base& base, int degree) const;
  AlgebraElement f(const Base& base, int degree) const;
  AlgebraElement fbar(const Base& base, int degree) const;
  GaussParams gauss(const Base& base, int degree) const;
  PointJets evaluate(const Base& base, int degree) const;

  /// G -> Abar G A with Abar on (ybar, zbar) and A on (y, z), both unimodular.
  SDYMSolution gauged(const PolyMatrix& a_bar, const PolyMatrix& a) const;

  /// Keeps f and fbar but takes the group element from `other`. Used to build
  /// deliberately inconsistent solutions for negative controls.
  SDYMSolution with_group_of(const SDYMSolution& other) const;
  /// Replaces only one of the two halves of G = PsiBar Psi.
  SDYMSolution with_psi_bar_of(const SDYMSolution& other) const;
  SDYMSolution with_psi_of(const SDYMSolution& other) const;
  SDYMSolution with_f_of(const SDYMSolution& other) const;
  SDYMSolution with_fbar_of(const SDYMSolution& other) const;

  const PolyMatrix& psi_bar() const { return psi_bar_; }
  const PolyMatrix& psi() const { return psi_; }

 private:
  void rebuild_f();
  void rebuild_fbar();

  // group element
  PolyMatrix psi_bar_;
  PolyMatrix psi_;
  // data f and fbar are built from (kept separately so controls can desync them)
  PolyMatrix f_psi_bar_, chi_;
  PolyMatrix fbar_psi_, chi_bar_;
  // cached polynomial pieces
  PolyMatrix l_ybar_, l_zbar_;
  PolyMatrix r_y_, r_z_;
};

/// Partial evaluator carrying only what the charge computations need:
/// f- = phibar (z d_ybar - y d_zbar) thetabar - thetabar (z d_ybar - y d_zbar) phibar + psibar
/// and e^-tau = theta thetabar + phi phibar.
class ChargeOnlySolution {
 public:
  ChargeOnlySolution(BivariatePoly theta_bar, BivariatePoly phi_bar, BivariatePoly psi_bar);

  Jet f_minus(const Base& base, int degree) const;
  /// The hermitian partner of f-, i.e. fbar+ of the physically restricted solution.
  Jet fbar_plus(const Base& base, int degree) const;
  Jet exp_minus_tau(const Base& base, int degree) const;
  /// Throws TauSingular where e^-tau vanishes.
  Jet tau(const Base& base, int degree) const;

 private:
  BivariatePoly theta_bar_, phi_bar_, psi_bar_;
  // f- = z * a(ybar, zbar) - y * b(ybar, zbar) + psibar
  BivariatePoly a_, b_;
};

using SeedSolution = std::variant<SDYMSolution, ChargeOnlySolution>;

/// Requires a full-gauge seed: Psi = PsiBar^H, chibar = chi^H.
SDYMSolution build_solution(const SeedSpec& seed);
/// Requires a charge-only seed.
ChargeOnlySolution charge_only_solution(const SeedSpec& seed);
SeedSolution build_any(const SeedSpec& seed);

/// thetabar = ybar, phibar = zbar, psibar = a. Requires Re a > 0.
SeedSpec one_instanton_seed(cplx a);

}  // namespace sdym
