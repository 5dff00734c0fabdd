#include <exception>
#include <string>

#include "curvint/compensated.hpp"
#include "curvint/errors.hpp"
#include "curvint/quadrature.hpp"

namespace curvint::kernels {

std::vector<double> weighted_sum_serial(const ChartedHypersurface& surface,
                                        const PointIntegrand& integrand,
                                        int components,
                                        const QuadratureGrid& grid) {
  const std::size_t ncomp = static_cast<std::size_t>(components);
  std::vector<CompensatedSum> sums(ncomp);
  std::vector<double> values(ncomp);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const QuadratureGrid::Node node = grid.node(i);
    try {
      integrand(node.chart, node.u, values);
    } catch (const std::exception& e) {
      throw PointEvaluationError(e.what(), node.chart, "point index " + std::to_string(i));
    }
    const double w = node.weight * volume_factor(surface, node.chart, node.u);
    for (std::size_t c = 0; c < ncomp; ++c) sums[c].add(values[c] * w);
  }
  std::vector<double> out(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) out[c] = sums[c].value();
  return out;
}

}  // namespace curvint::kernels
