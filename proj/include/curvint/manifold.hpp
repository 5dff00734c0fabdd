#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curvint/linalg.hpp"

namespace curvint {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;

  double length() const { return hi - lo; }
};

/// One parametrized piece of an immersed hypersurface. `first_partials` and
/// `second_partials` may be left empty; the surface then fills them in with
/// finite differences (see finite_difference.hpp).
struct Chart {
  std::vector<Interval> domain;
  std::function<Vec(const Vec&)> position;
  std::function<Mat(const Vec&)> first_partials;  // (n+2) x (n+1), col a = dF/du_a
  std::function<SecondPartials(const Vec&)> second_partials;
  double weight_fraction = 1.0;
};

struct SurfaceMetadata {
  std::string id;
  std::string name;
  std::optional<std::vector<int>> betti;
  std::optional<int> euler_characteristic;
};

/// Closed oriented hypersurface M^{n+1} immersed in R^{n+2}, given by charts.
/// Immutable after construction and safe to evaluate concurrently.
class ChartedHypersurface {
 public:
  ChartedHypersurface(int n_intrinsic, std::vector<Chart> charts,
                      int orientation_sign, SurfaceMetadata metadata);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  int ambient_dim() const { return n_ + 2; }
  int orientation_sign() const { return orientation_sign_; }
  const SurfaceMetadata& metadata() const { return metadata_; }

  int chart_count() const { return static_cast<int>(charts_.size()); }
  const Chart& chart(int index) const;

  Vec position(int chart_index, const Vec& u) const;
  Mat tangents(int chart_index, const Vec& u) const;
  SecondPartials second_partials(int chart_index, const Vec& u) const;

 private:
  int n_;
  std::vector<Chart> charts_;
  int orientation_sign_;
  SurfaceMetadata metadata_;
};

struct PointGeometry {
  Vec position;
  Mat tangent_basis;  // columns F_a
  Mat metric;         // g_ab = <F_a, F_b>
  double volume_factor = 0.0;
  Vec normal;
};

/// Everything first- and second-order about the immersion at one point.
/// Built once per point and shared by the shape-operator and field code.
struct SurfaceJet {
  PointGeometry geometry;
  SecondPartials second;
  Mat normal_derivatives;  // col a = dN/du_a (ambient)
  Mat to_chart;            // G^{-1} F^T: ambient tangent vector -> chart coords
};

struct ShapeOperator {
  Mat h;                   // symmetrized
  double asymmetry = 0.0;  // ||h - h^T||_inf before symmetrizing
};

/// Generalized cross product of m-1 vectors in R^m: the cofactor vector c
/// with det[T | c] = |c|^2.
Vec generalized_cross(const Mat& tangents);

Vec unit_normal(const ChartedHypersurface& surface, int chart_index,
                const Vec& u);

PointGeometry point_geometry(const ChartedHypersurface& surface,
                             int chart_index, const Vec& u);

/// sqrt(det g) only; cheaper than a full point_geometry.
double volume_factor(const ChartedHypersurface& surface, int chart_index,
                     const Vec& u);

SurfaceJet surface_jet(const ChartedHypersurface& surface, int chart_index,
                       const Vec& u);

/// h_AB = <D_{e_A} N, e_B> for the orthonormal tangent frame given as columns.
ShapeOperator shape_operator(const SurfaceJet& jet, const Mat& frame);
ShapeOperator shape_operator(const ChartedHypersurface& surface,
                             int chart_index, const Vec& u, const Mat& frame);

/// Orthonormal basis of T_xM by Gram-Schmidt on the chart tangents.
Mat orthonormal_tangent_frame(const PointGeometry& geometry);

/// The image of `surface` under x -> linear * x (invertible, det > 0 keeps
/// the orientation). Analytic derivatives are carried through.
ChartedHypersurface linear_image(const ChartedHypersurface& surface,
                                 const Mat& linear, SurfaceMetadata metadata);

}  // namespace curvint
