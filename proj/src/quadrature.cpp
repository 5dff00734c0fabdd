#include "curvint/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include <gsl/gsl_integration.h>

#include "curvint/invariants.hpp"

namespace curvint {

AxisRule periodic_trapezoid(const Interval& interval, int count) {
  if (count < 1) throw std::invalid_argument("node count must be positive");
  AxisRule rule;
  const double h = interval.length() / count;
  rule.nodes.resize(static_cast<size_t>(count));
  rule.weights.assign(static_cast<size_t>(count), h);
  for (int i = 0; i < count; ++i) {
    rule.nodes[static_cast<size_t>(i)] = interval.lo + (i + 0.5) * h;
  }
  return rule;
}

AxisRule composite_gauss_legendre(const Interval& interval, int count,
                                  int panel_nodes) {
  if (count < 1 || panel_nodes < 1) {
    throw std::invalid_argument("node count must be positive");
  }
  const int panels = (count + panel_nodes - 1) / panel_nodes;
  const double width = interval.length() / panels;
  AxisRule rule;
  rule.nodes.reserve(static_cast<size_t>(count));
  rule.weights.reserve(static_cast<size_t>(count));
  for (int p = 0; p < panels; ++p) {
    const int here = count / panels + (p < count % panels ? 1 : 0);
    std::unique_ptr<gsl_integration_glfixed_table,
                    decltype(&gsl_integration_glfixed_table_free)>
        table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(here)),
              &gsl_integration_glfixed_table_free);
    if (!table) throw std::runtime_error("Gauss-Legendre table allocation failed");
    const double a = interval.lo + p * width;
    const double b = (p + 1 == panels) ? interval.hi : a + width;
    for (int i = 0; i < here; ++i) {
      double x = 0.0;
      double w = 0.0;
      gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &x, &w, table.get());
      rule.nodes.push_back(x);
      rule.weights.push_back(w);
    }
  }
  return rule;
}

QuadratureGrid::QuadratureGrid(const ChartedHypersurface& surface,
                               std::vector<int> counts)
    : counts_(std::move(counts)) {
  if (static_cast<int>(counts_.size()) != surface.dim()) {
    throw std::invalid_argument("grid needs one node count per chart coordinate (" +
                                std::to_string(surface.dim()) + ")");
  }
  for (int c : counts_) {
    if (c < 1) throw std::invalid_argument("node counts must be positive");
  }
  for (int c = 0; c < surface.chart_count(); ++c) {
    domains_.push_back(surface.chart(c).domain);
    chart_weights_.push_back(surface.chart(c).weight_fraction);
  }
  build();
}

void QuadratureGrid::build() {
  axes_.clear();
  points_per_chart_ = 1;
  for (int c : counts_) points_per_chart_ *= static_cast<size_t>(c);
  for (const auto& domain : domains_) {
    std::vector<AxisRule> rules;
    for (size_t a = 0; a < domain.size(); ++a) {
      rules.push_back(domain[a].periodic ? periodic_trapezoid(domain[a], counts_[a])
                                         : composite_gauss_legendre(domain[a], counts_[a]));
    }
    axes_.push_back(std::move(rules));
  }
}

const AxisRule& QuadratureGrid::axis(int chart_index, int coordinate) const {
  return axes_.at(static_cast<size_t>(chart_index)).at(static_cast<size_t>(coordinate));
}

QuadratureGrid QuadratureGrid::half_resolution() const {
  QuadratureGrid half;
  half.domains_ = domains_;
  half.chart_weights_ = chart_weights_;
  for (int c : counts_) half.counts_.push_back(std::max(2, c / 2));
  half.build();
  return half;
}

QuadratureGrid::Node QuadratureGrid::node(size_t index) const {
  Node out;
  out.chart = static_cast<int>(index / points_per_chart_);
  size_t rest = index % points_per_chart_;
  const auto& rules = axes_[static_cast<size_t>(out.chart)];
  const int dim = this->dim();
  out.u.resize(dim);
  double w = chart_weights_[static_cast<size_t>(out.chart)];
  for (int a = dim - 1; a >= 0; --a) {
    const size_t count = static_cast<size_t>(counts_[static_cast<size_t>(a)]);
    const size_t i = rest % count;
    rest /= count;
    out.u[a] = rules[static_cast<size_t>(a)].nodes[i];
    w *= rules[static_cast<size_t>(a)].weights[i];
  }
  out.weight = w;
  return out;
}

namespace {

void check_compatible(const ChartedHypersurface& surface, const QuadratureGrid& grid) {
  if (grid.dim() != surface.dim() || grid.chart_count() != surface.chart_count()) {
    throw std::invalid_argument("quadrature grid does not match the surface's charts");
  }
}

std::vector<double> run_kernel(const ChartedHypersurface& surface,
                               const PointIntegrand& integrand, int components,
                               const QuadratureGrid& grid,
                               const QuadratureOptions& options) {
  return options.serial_reference
             ? kernels::weighted_sum_serial(surface, integrand, components, grid)
             : kernels::weighted_sum_parallel(surface, integrand, components, grid,
                                             options.workers);
}

}  // namespace

std::vector<IntegralResult> integrate_components(const ChartedHypersurface& surface,
                                                 const PointIntegrand& integrand,
                                                 int components,
                                                 const QuadratureGrid& grid,
                                                 const QuadratureOptions& options) {
  check_compatible(surface, grid);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> full = run_kernel(surface, integrand, components, grid, options);
  std::vector<double> half;
  if (options.estimate_error) {
    half = run_kernel(surface, integrand, components, grid.half_resolution(), options);
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::vector<IntegralResult> out(static_cast<size_t>(components));
  for (size_t c = 0; c < out.size(); ++c) {
    out[c].value = full[c];
    out[c].nodes = grid.size();
    out[c].error_estimate = options.estimate_error ? std::abs(full[c] - half[c]) : 0.0;
    out[c].wall_ms = ms;
  }
  return out;
}

IntegralResult integrate(const ChartedHypersurface& surface,
                         const std::function<double(int, const Vec&)>& integrand,
                         const QuadratureGrid& grid, const QuadratureOptions& options) {
  const PointIntegrand wrapped = [&integrand](int chart, const Vec& u,
                                              std::span<double> out) {
    out[0] = integrand(chart, u);
  };
  return integrate_components(surface, wrapped, 1, grid, options).front();
}

EtaIntegrals integrate_eta(const ChartedHypersurface& surface,
                           const TangentField& field, const QuadratureGrid& grid,
                           const QuadratureOptions& options) {
  const int n = surface.n();
  const PointIntegrand integrand = [&](int chart, const Vec& u, std::span<double> out) {
    const EtaVector eta = eta_all(column_system(shape_data(surface, field, chart, u)));
    for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = eta[k];
    out[static_cast<size_t>(n + 1)] = 1.0;
  };
  auto results = integrate_components(surface, integrand, n + 2, grid, options);
  EtaIntegrals out;
  out.volume = results.back();
  results.pop_back();
  out.eta = std::move(results);
  return out;
}

}  // namespace curvint
