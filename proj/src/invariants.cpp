#include "curvint/invariants.hpp"

#include <array>
#include <cmath>
#include <string>

#include "curvint/compensated.hpp"
#include "curvint/errors.hpp"

namespace curvint {

namespace {

void validate(const ColumnSystem& cols) {
  const int n = cols.n();
  if (cols.H.rows() != n + 1 || cols.H.cols() != n + 1 || cols.V.rows() != n + 1) {
    throw std::invalid_argument("column system has inconsistent shape");
  }
}

double replaced_determinant(const ColumnSystem& cols, std::span<const int> subset) {
  Mat m = cols.H;
  for (int j : subset) m.col(j) = cols.V.col(j);
  return lu_determinant(m);
}

}  // namespace

ColumnSystem column_system(const ShapeData& data) {
  const int n = static_cast<int>(data.a.rows());
  ColumnSystem cols;
  cols.H = data.h;
  cols.V.resize(n + 1, n);
  cols.V.topRows(n) = data.a;
  cols.V.row(n) = data.vvec.transpose();
  return cols;
}

void for_each_subset(int n, int k,
                     const std::function<void(std::span<const int>)>& visit) {
  if (k < 0 || k > n) return;
  std::array<int, kMaxChartDim> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const int>(idx.data(), static_cast<size_t>(k)));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double eta(int k, const ColumnSystem& cols) {
  validate(cols);
  if (k < 0 || k > cols.n()) {
    throw IndexOutOfRange("eta index k = " + std::to_string(k) +
                          " outside [0, " + std::to_string(cols.n()) + "]");
  }
  CompensatedSum sum;
  for_each_subset(cols.n(), k, [&](std::span<const int> subset) {
    sum.add(replaced_determinant(cols, subset));
  });
  return sum.value();
}

EtaVector eta_all(const ColumnSystem& cols) {
  validate(cols);
  const int n = cols.n();
  EtaVector out;
  out.values.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    CompensatedSum sum;
    for_each_subset(n, k, [&](std::span<const int> subset) {
      sum.add(replaced_determinant(cols, subset));
    });
    out.values[k] = sum.value();
  }
  out.eta0_crosscheck = std::abs(out.values[0] - cols.H.determinant());
  return out;
}

JacobianPhi jacobian_phi(const ColumnSystem& cols, double t) {
  validate(cols);
  const int n = cols.n();
  JacobianPhi out;
  out.matrix.resize(n + 1, n + 1);
  out.matrix.leftCols(n) = cols.H.leftCols(n) + t * cols.V;
  out.matrix.col(n) = std::sqrt(1.0 + t * t) * cols.H.col(n);
  out.determinant = lu_determinant(out.matrix);
  return out;
}

}  // namespace curvint
