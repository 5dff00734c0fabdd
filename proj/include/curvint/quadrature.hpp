#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "curvint/fields.hpp"
#include "curvint/linalg.hpp"
#include "curvint/manifold.hpp"

namespace curvint {

inline constexpr int kGaussPanelNodes = 16;
inline constexpr int kDefaultNodesPerCoordinate = 48;

/// One-dimensional quadrature rule.
struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Midpoint-shifted trapezoid rule: nodes lo + (i + 1/2) h.
AxisRule periodic_trapezoid(const Interval& interval, int count);

/// Composite Gauss-Legendre with panels of (at most) `panel_nodes` nodes;
/// `count` nodes total, spread as evenly as possible over ceil(count /
/// panel_nodes) equal-width panels.
AxisRule composite_gauss_legendre(const Interval& interval, int count,
                                  int panel_nodes = kGaussPanelNodes);

/// Tensor-product grid over every chart of a surface, built per-coordinate
/// from the chart domains. Points are enumerated chart-major, then in
/// lexicographic order with the last coordinate fastest.
class QuadratureGrid {
 public:
  QuadratureGrid(const ChartedHypersurface& surface, std::vector<int> counts);

  const std::vector<int>& counts() const { return counts_; }
  int dim() const { return static_cast<int>(counts_.size()); }
  int chart_count() const { return static_cast<int>(axes_.size()); }
  std::size_t points_per_chart() const { return points_per_chart_; }
  std::size_t size() const { return points_per_chart_ * axes_.size(); }
  const AxisRule& axis(int chart_index, int coordinate) const;

  /// Grid with every node count halved (at least 2 per coordinate).
  QuadratureGrid half_resolution() const;

  struct Node {
    int chart = 0;
    Vec u;
    double weight = 0.0;  // tensor weight times the chart's weight_fraction
  };
  Node node(std::size_t index) const;

 private:
  QuadratureGrid() = default;
  void build();

  std::vector<int> counts_;
  std::vector<std::vector<Interval>> domains_;
  std::vector<double> chart_weights_;
  std::vector<std::vector<AxisRule>> axes_;
  std::size_t points_per_chart_ = 0;
};

/// Writes the integrand's components at one point into `out`.
using PointIntegrand =
    std::function<void(int chart_index, const Vec& u, std::span<double> out)>;

struct QuadratureOptions {
  int workers = 0;              // 0: OpenMP default
  bool estimate_error = true;   // compare against the half-resolution grid
  bool serial_reference = false;
};

struct IntegralResult {
  double value = 0.0;
  std::size_t nodes = 0;
  double error_estimate = 0.0;  // |value - value on half grid|; 0 if skipped
  double wall_ms = 0.0;
};

/// Sum over grid points of integrand * volume_factor * weight, per component.
std::vector<IntegralResult> integrate_components(const ChartedHypersurface& surface,
                                                 const PointIntegrand& integrand,
                                                 int components,
                                                 const QuadratureGrid& grid,
                                                 const QuadratureOptions& options = {});

IntegralResult integrate(const ChartedHypersurface& surface,
                         const std::function<double(int, const Vec&)>& integrand,
                         const QuadratureGrid& grid,
                         const QuadratureOptions& options = {});

struct EtaIntegrals {
  std::vector<IntegralResult> eta;  // k = 0..n
  IntegralResult volume;
};

/// Integrates eta_0..eta_n and the volume of M in one pass over the grid.
EtaIntegrals integrate_eta(const ChartedHypersurface& surface,
                           const TangentField& field, const QuadratureGrid& grid,
                           const QuadratureOptions& options = {});

namespace kernels {

/// Blocked OpenMP kernel: fixed blocks summed in index order, then merged
/// by a fixed-shape pairwise tree. The bits do not depend on `workers`.
std::vector<double> weighted_sum_parallel(const ChartedHypersurface& surface,
                                          const PointIntegrand& integrand,
                                          int components,
                                          const QuadratureGrid& grid, int workers);

/// Reference kernel: one compensated sum over all points in index order.
std::vector<double> weighted_sum_serial(const ChartedHypersurface& surface,
                                        const PointIntegrand& integrand,
                                        int components,
                                        const QuadratureGrid& grid);

inline constexpr std::size_t kBlockSize = 256;

}  // namespace kernels

}  // namespace curvint
