#pragma once

// Residuals of the field equations, the restriction G = G^H and the
// transformation identities at sampled real-slice points.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdym/backlund.hpp"
#include "sdym/seeds.hpp"

namespace sdym {

struct ResidualEntry {
  std::string identity;
  double max_residual = 0.0;
  RealSlicePoint at{};
  double tol = 0.0;
  bool pass = true;
  bool skipped = false;
  std::string note;  // why an entry was skipped or could not be evaluated
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;

  bool pass() const;
  /// Throws std::out_of_range for an unknown identity.
  const ResidualEntry& find(const std::string& identity) const;
};

/// Identity names in report order.
const std::vector<std::string>& identity_catalogue();

struct VerificationConfig {
  int samples = 100;
  // the quadrature-based checks (hermiticity, commutativity) use the first points only
  int transform_samples = 20;
  std::uint64_t rng_seed = 0;
  double radius = 2.0;
  double exact_tol = 1e-12;
  double quadrature_tol = 1e-8;
  // points with |f-| or |fbar+| below this are not sampled
  double singular_exclusion = 1e-3;
  TransformConfig transform;
};

/// Uniform points in the ball of `radius` in C^2, reproducible from `rng_seed`.
std::vector<RealSlicePoint> sample_points(int n, std::uint64_t rng_seed, double radius);
/// Same, skipping points within `exclusion` of a zero of f- or fbar+.
std::vector<RealSlicePoint> sample_points(const SDYMSolution& sol, const VerificationConfig& config);

// Each check returns entries in catalogue order.
std::vector<ResidualEntry> check_first_order(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                             double tol = 1e-12);
std::vector<ResidualEntry> check_second_order(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                              double tol = 1e-12);
std::vector<ResidualEntry> check_cross_relations(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                                 double tol = 1e-12);
std::vector<ResidualEntry> check_prs(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                     double tol = 1e-12);
/// Group hermiticity of a transformed solution; the fbar entry is reported
/// skipped since the transformed f is not reconstructed.
std::vector<ResidualEntry> check_prs(const TransformedSolution& sol, const std::vector<RealSlicePoint>& points,
                                     double tol = 1e-8);
std::vector<ResidualEntry> check_components(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                             double tol = 1e-12);
std::vector<ResidualEntry> check_one_forms(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                           double tol = 1e-11);
std::vector<ResidualEntry> check_backlund(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                          const TransformConfig& transform = {}, double tol = 1e-8);
/// Gauges with (a_bar, a) and re-runs the first-order, second-order and PRS checks.
std::vector<ResidualEntry> check_gauge_covariance(const SDYMSolution& sol, const PolyMatrix& a_bar,
                                                  const PolyMatrix& a, const std::vector<RealSlicePoint>& points,
                                                  double tol = 1e-12);

/// Every catalogue identity. Charge-only seeds carry no group element or f,
/// so all entries are reported skipped.
ResidualReport verify(const SeedSolution& sol, const VerificationConfig& config = {});

void write_report_json(std::ostream& os, const ResidualReport& report);

/// Where a corrupted datum is used: one half of the group element, or the data
/// f or fbar are built from. Changing a datum consistently everywhere just gives
/// another exact solution, so corruption is always confined to one channel.
enum class CorruptionChannel { PsiBar, Psi, F, FBar };

/// One seed datum shifted by `size`.
struct Corruption {
  std::string datum;
  SeedSpec perturbed;
  // channels whose data the datum enters (chi does not enter the group element)
  std::vector<CorruptionChannel> channels;
};

std::vector<Corruption> single_datum_corruptions(const SeedSpec& seed, double size = 1e-3);

/// The seed's solution with one data channel taken from the perturbed seed.
SDYMSolution corrupted_solution(const SeedSpec& seed, const Corruption& c, CorruptionChannel channel);

/// Largest difference of G, f and fbar values at the points. Round-off level means the
/// corruption did not change anything the identities can see (e.g. a constant
/// right factor of PsiBar leaves f unchanged).
double data_difference(const SDYMSolution& a, const SDYMSolution& b, const std::vector<RealSlicePoint>& points);

std::string to_string(CorruptionChannel c);

}  // namespace sdym
