#include "curvint/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <omp.h>

#include "curvint/errors.hpp"

namespace curvint {

double sphere_volume(int m) {
  if (m < 1) throw IndexOutOfRange("sphere dimension must be >= 1");
  const double half = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

DegreeResult degree_from_integral(const IntegralResult& eta0_integral, int n) {
  DegreeResult out;
  out.integral = eta0_integral;
  out.raw = eta0_integral.value / sphere_volume(n + 1);
  out.rounded = std::lround(out.raw);
  out.residual = std::abs(out.raw - static_cast<double>(out.rounded));
  out.valid = out.residual < kDegreeResidualLimit;
  return out;
}

DegreeResult gauss_degree(const ChartedHypersurface& surface,
                          const QuadratureGrid& grid,
                          const QuadratureOptions& options) {
  const auto gauss_kronecker = [&surface](int chart, const Vec& u) {
    const SurfaceJet jet = surface_jet(surface, chart, u);
    const Mat frame = orthonormal_tangent_frame(jet.geometry);
    return lu_determinant(shape_operator(jet, frame).h);
  };
  DegreeResult out =
      degree_from_integral(integrate(surface, gauss_kronecker, grid, options), surface.n());
  if (!out.valid) {
    throw NonIntegerDegree("Gauss-map degree integral " + std::to_string(out.raw) +
                               " is not near an integer (under-resolved grid, open "
                               "surface, or incoherent orientation?)",
                           out.raw);
  }
  return out;
}

double predicted_eta_integral(int n, int k, long degree) {
  if (n % 2 != 0 || k % 2 != 0) return 0.0;
  return static_cast<double>(degree) * binomial(n / 2, k / 2) * sphere_volume(n + 1);
}

VerificationReport verify_integral_formula(const ChartedHypersurface& surface,
                                           const TangentField& field,
                                           const QuadratureGrid& grid,
                                           const VerifyOptions& options) {
  const int n = surface.n();
  std::vector<int> ks = options.ks;
  if (ks.empty()) {
    ks.resize(static_cast<size_t>(n + 1));
    std::iota(ks.begin(), ks.end(), 0);
  }
  for (int k : ks) {
    if (k < 0 || k > n) {
      throw IndexOutOfRange("k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
    }
  }

  const EtaIntegrals integrals = integrate_eta(surface, field, grid, options.quadrature);

  VerificationReport report;
  report.n = n;
  report.grid = grid.counts();
  report.volume = integrals.volume.value;
  report.rel_tol = options.rel_tol;
  report.abs_tol = options.abs_tol.value_or(options.abs_tol_factor * report.volume);
  report.euler_characteristic_known_zero =
      surface.metadata().euler_characteristic.has_value() &&
      *surface.metadata().euler_characteristic == 0;
  report.degree = degree_from_integral(integrals.eta.front(), n);
  if (!report.degree.valid) {
    throw NonIntegerDegree("Gauss-map degree integral " + std::to_string(report.degree.raw) +
                               " is not near an integer",
                           report.degree.raw);
  }

  bool all_pass = true;
  for (int k : ks) {
    const IntegralResult& r = integrals.eta[static_cast<size_t>(k)];
    EtaCheck row;
    row.k = k;
    row.integral = r.value;
    row.predicted = predicted_eta_integral(n, k, report.degree.rounded);
    row.abs_dev = std::abs(r.value - row.predicted);
    row.rel_dev = row.abs_dev /
                  (row.predicted != 0.0 ? std::abs(row.predicted) : report.volume);
    row.error_estimate = r.error_estimate;
    row.threshold = std::max(report.abs_tol, report.rel_tol * std::abs(row.predicted));
    row.pass = row.abs_dev <= row.threshold && row.error_estimate <= row.threshold;
    all_pass = all_pass && row.pass;
    report.eta.push_back(row);
  }
  report.pass = all_pass;
  return report;
}

MilnorReport milnor_constraints(const MilnorInput& input) {
  MilnorReport out;
  out.d = input.d;
  for (int b : input.betti) {
    if (b < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    out.beta += b;
  }
  out.parity = ((2 * out.d - out.beta) % 2) == 0;
  out.bound = 2 * std::labs(out.d) <= out.beta;
  if (input.oriented) {
    // 2 - beta/2 <= d <= beta/2, scaled by 2 to stay in integers.
    out.oriented_bound = (4 - out.beta <= 2 * out.d) && (2 * out.d <= out.beta);
  }
  return out;
}

FoliationSample foliation_sample(const Mat& a, const FoliationOptions& options) {
  FoliationSample s;
  if (a.size() == 0) return s;
  s.defect = inf_norm(a - a.transpose());
  const Eigen::JacobiSVD<Mat> svd(a);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() ? sv.maxCoeff() : 0.0;
  if (largest < options.rank_abs_tol) return s;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > options.rank_rel_tol * largest) ++s.rank;
  }
  return s;
}

FoliationReport summarize_foliation(int n, std::vector<FoliationSample> samples,
                                    const FoliationOptions& options) {
  FoliationReport r;
  r.n = n;
  r.rank_limit = n - 2;
  r.applicable = n % 2 == 0;
  for (const auto& s : samples) {
    r.max_defect = std::max(r.max_defect, s.defect);
    r.max_rank = std::max(r.max_rank, s.rank);
  }
  r.samples = std::move(samples);
  r.integrable = r.max_defect < options.integrable_tol;
  r.hypothesis = r.applicable && r.integrable && r.max_rank <= r.rank_limit;
  if (!r.applicable) {
    r.note = "obstruction applies to even n only (odd-dimensional M^{n+1}); no conclusion";
  } else if (r.hypothesis) {
    r.note = "orthogonal distribution integrable with leaf second fundamental form of rank <= n-2; "
             "conclusion: deg(nu) = 0";
  } else if (!r.integrable) {
    r.note = "orthogonal distribution not integrable; no conclusion";
  } else {
    r.note = "leaf second fundamental form rank exceeds n-2; no conclusion";
  }
  return r;
}

FoliationReport foliation_obstruction_report(const ChartedHypersurface& surface,
                                             const TangentField& field,
                                             const QuadratureGrid& grid,
                                             const QuadratureGrid& degree_grid,
                                             const FoliationOptions& options) {
  const std::size_t total = grid.size();
  std::vector<FoliationSample> samples(total);
  std::vector<std::string> errors(total);
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
  const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const QuadratureGrid::Node node = grid.node(idx);
    try {
      samples[idx] = foliation_sample(shape_data(surface, field, node.chart, node.u).a, options);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (!errors[i].empty()) {
      throw PointEvaluationError(errors[i], grid.node(i).chart,
                                 "sample index " + std::to_string(i));
    }
  }
  FoliationReport report = summarize_foliation(surface.n(), std::move(samples), options);
  if (report.hypothesis) {
    QuadratureOptions q;
    q.workers = options.workers;
    const DegreeResult d = gauss_degree(surface, degree_grid, q);
    report.degree = d.rounded;
    report.implication_holds = d.rounded == 0;
  }
  return report;
}

}  // namespace curvint
