#include <algorithm>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <omp.h>

#include "curvint/compensated.hpp"
#include "curvint/errors.hpp"
#include "curvint/quadrature.hpp"

namespace curvint::kernels {

namespace {

struct BlockFailure {
  std::size_t index;
  std::string message;
};

std::string describe(const QuadratureGrid::Node& node) {
  std::string s = "chart " + std::to_string(node.chart) + " at u = (";
  char buf[32];
  for (int a = 0; a < node.u.size(); ++a) {
    std::snprintf(buf, sizeof buf, "%.17g", node.u[a]);
    s += (a ? ", " : "");
    s += buf;
  }
  return s + ")";
}

// Pairwise merge of blocks [lo, hi) into `out`; the shape depends only on
// the block count.
void tree_merge(const std::vector<CompensatedSum>& partials, int components,
                std::size_t lo, std::size_t hi, std::vector<CompensatedSum>& out) {
  if (hi - lo == 1) {
    for (int c = 0; c < components; ++c) {
      out[static_cast<size_t>(c)] = partials[lo * static_cast<size_t>(components) + static_cast<size_t>(c)];
    }
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  std::vector<CompensatedSum> right(static_cast<size_t>(components));
  tree_merge(partials, components, lo, mid, out);
  tree_merge(partials, components, mid, hi, right);
  for (int c = 0; c < components; ++c) out[static_cast<size_t>(c)].merge(right[static_cast<size_t>(c)]);
}

}  // namespace

std::vector<double> weighted_sum_parallel(const ChartedHypersurface& surface,
                                          const PointIntegrand& integrand,
                                          int components,
                                          const QuadratureGrid& grid, int workers) {
  const std::size_t total = grid.size();
  const std::size_t blocks = (total + kBlockSize - 1) / kBlockSize;
  const std::size_t ncomp = static_cast<std::size_t>(components);
  std::vector<CompensatedSum> partials(blocks * ncomp);
  std::vector<std::optional<BlockFailure>> failures(blocks);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const long long nblocks = static_cast<long long>(blocks);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long b = 0; b < nblocks; ++b) {
    const std::size_t block = static_cast<std::size_t>(b);
    std::vector<double> values(ncomp);
    const std::size_t end = std::min(total, (block + 1) * kBlockSize);
    for (std::size_t i = block * kBlockSize; i < end; ++i) {
      const QuadratureGrid::Node node = grid.node(i);
      try {
        integrand(node.chart, node.u, values);
        const double w = node.weight * volume_factor(surface, node.chart, node.u);
        for (std::size_t c = 0; c < ncomp; ++c) {
          partials[block * ncomp + c].add(values[c] * w);
        }
      } catch (const std::exception& e) {
        failures[block] = BlockFailure{i, std::string(e.what()) + " [" + describe(node) + "]"};
        break;
      }
    }
  }

  for (std::size_t b = 0; b < blocks; ++b) {
    if (failures[b]) {
      const auto node = grid.node(failures[b]->index);
      throw PointEvaluationError(failures[b]->message, node.chart, describe(node));
    }
  }
  std::vector<double> out(ncomp, 0.0);
  if (blocks == 0) return out;
  std::vector<CompensatedSum> merged(ncomp);
  tree_merge(partials, components, 0, blocks, merged);
  for (std::size_t c = 0; c < ncomp; ++c) out[c] = merged[c].value();
  return out;
}

}  // namespace curvint::kernels
