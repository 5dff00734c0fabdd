#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvint/fields.hpp"
#include "curvint/manifold.hpp"
#include "curvint/quadrature.hpp"

namespace curvint {

/// Volume of the unit sphere S^m in R^{m+1}.
double sphere_volume(int m);

/// Binomial coefficient as a double; zero outside 0 <= k <= n.
double binomial(int n, int k);

struct DegreeResult {
  double raw = 0.0;  // integral of det h over M / vol(S^{n+1})
  long rounded = 0;
  double residual = 0.0;
  bool valid = false;  // residual < kDegreeResidualLimit
  IntegralResult integral;
};

inline constexpr double kDegreeResidualLimit = 0.1;

/// Rounds an integral of eta_0 to the Gauss-map degree. Does not throw.
DegreeResult degree_from_integral(const IntegralResult& eta0_integral, int n);

/// deg(nu) from the total Gauss-Kronecker curvature. Throws NonIntegerDegree
/// when the result is not within kDegreeResidualLimit of an integer.
DegreeResult gauss_degree(const ChartedHypersurface& surface,
                          const QuadratureGrid& grid,
                          const QuadratureOptions& options = {});

/// Predicted integral of eta_k: d C(n/2, k/2) vol(S^{n+1}) for k and n
/// even, otherwise zero.
double predicted_eta_integral(int n, int k, long degree);

struct EtaCheck {
  int k = 0;
  double integral = 0.0;
  double predicted = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;  // abs_dev / |predicted|, or abs_dev / vol(M) if predicted = 0
  double error_estimate = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double rel_tol = 1e-5;
  // Absolute tolerance; when unset, abs_tol_factor * vol(M).
  std::optional<double> abs_tol;
  double abs_tol_factor = 1e-6;
  std::vector<int> ks;  // empty: all k in [0, n]
  QuadratureOptions quadrature;
};

struct VerificationReport {
  int n = 0;
  DegreeResult degree;
  double volume = 0.0;
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  std::vector<EtaCheck> eta;
  std::vector<int> grid;
  bool euler_characteristic_known_zero = false;
  bool pass = false;  // degree valid and every selected k passes
};

/// Checks the integral formula for every selected k. A row passes when both
/// the deviation from the prediction and the half-grid error estimate are
/// within max(abs_tol, rel_tol |predicted|).
VerificationReport verify_integral_formula(const ChartedHypersurface& surface,
                                           const TangentField& field,
                                           const QuadratureGrid& grid,
                                           const VerifyOptions& options = {});

struct MilnorInput {
  long d = 0;
  std::vector<int> betti;
  bool oriented = true;
};

struct MilnorReport {
  long d = 0;
  long beta = 0;
  bool parity = false;                  // 2d = beta (mod 2)
  bool bound = false;                   // 2|d| <= beta
  std::optional<bool> oriented_bound;   // 2 - beta/2 <= d <= beta/2
  bool all() const { return parity && bound && oriented_bound.value_or(true); }
};

MilnorReport milnor_constraints(const MilnorInput& input);

struct FoliationOptions {
  double rank_rel_tol = 1e-8;
  double rank_abs_tol = 1e-10;
  double integrable_tol = 1e-6;
  int workers = 0;
};

struct FoliationSample {
  double defect = 0.0;  // ||a - a^T||_inf
  int rank = 0;
};

struct FoliationReport {
  int n = 0;
  std::vector<FoliationSample> samples;
  double max_defect = 0.0;
  int max_rank = 0;
  int rank_limit = 0;  // n - 2
  bool integrable = false;
  bool hypothesis = false;  // integrable and max_rank <= n - 2 (n even)
  bool applicable = false;  // n even
  std::optional<long> degree;          // computed when the hypothesis holds
  std::optional<bool> implication_holds;  // hypothesis => degree == 0
  std::string note;
};

/// Integrability defect and numerical rank of one a-matrix.
FoliationSample foliation_sample(const Mat& a, const FoliationOptions& options = {});

/// Aggregates samples; does not compute the degree.
FoliationReport summarize_foliation(int n, std::vector<FoliationSample> samples,
                                    const FoliationOptions& options = {});

/// Samples `a` at every node of `grid`; when the hypothesis holds, computes
/// deg(nu) on `degree_grid` and records whether it is zero.
FoliationReport foliation_obstruction_report(const ChartedHypersurface& surface,
                                             const TangentField& field,
                                             const QuadratureGrid& grid,
                                             const QuadratureGrid& degree_grid,
                                             const FoliationOptions& options = {});

}  // namespace curvint
