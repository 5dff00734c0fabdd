#pragma once

#include <array>
#include <cassert>

#include <Eigen/Dense>

namespace curvint {

// Ambient dimension n + 2 is capped so that all per-point linear algebra
// stays on the stack. n <= 4 covers every surface this library targets.
inline constexpr int kMaxAmbientDim = 6;
inline constexpr int kMaxChartDim = kMaxAmbientDim - 1;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxAmbientDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                          kMaxAmbientDim, kMaxAmbientDim>;

/// Second partial derivatives of a chart at one parameter point.
/// `(*this)[a].col(b)` is d^2F / du_a du_b.
class SecondPartials {
 public:
  SecondPartials() = default;
  SecondPartials(int ambient_dim, int chart_dim) : chart_dim_(chart_dim) {
    assert(chart_dim <= kMaxChartDim);
    for (int a = 0; a < chart_dim; ++a) {
      by_param_[a] = Mat::Zero(ambient_dim, chart_dim);
    }
  }

  int chart_dim() const { return chart_dim_; }
  Mat& operator[](int a) { return by_param_[a]; }
  const Mat& operator[](int a) const { return by_param_[a]; }

  // Sets both (a,b) and (b,a).
  template <typename Derived>
  void set(int a, int b, const Eigen::MatrixBase<Derived>& value) {
    by_param_[a].col(b) = value;
    by_param_[b].col(a) = value;
  }

 private:
  std::array<Mat, kMaxChartDim> by_param_{};
  int chart_dim_ = 0;
};

/// Determinant by LU with partial pivoting.
inline double lu_determinant(const Mat& m) {
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Mat>(m).determinant();
}

/// Max-abs entry norm.
inline double inf_norm(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace curvint
