#pragma once

#include <functional>
#include <string>

#include "curvint/linalg.hpp"
#include "curvint/manifold.hpp"

namespace curvint {

/// Tangent vector field specified ambiently; normalized and projected onto
/// T_xM at evaluation. A missing jacobian is replaced by finite differences
/// via `with_difference_jacobian`.
struct TangentField {
  std::string id;
  std::function<Vec(int chart_index, const Vec& u)> ambient_value;
  // (n+2) x (n+1), col a = d(raw vector)/du_a
  std::function<Mat(int chart_index, const Vec& u)> ambient_jacobian;
};

/// Orthonormal {e_1, ..., e_n, v} plus the unit normal N.
struct AdaptedFramePoint {
  Mat e;  // (n+2) x n
  Vec v;
  Vec normal;

  /// Columns e_1, ..., e_n, v.
  Mat full() const;
};

/// Frame components of the shape operator and of Dv; v is last throughout.
struct ShapeData {
  Mat h;     // (n+1) x (n+1), h_AB = <S(e_A), e_B>
  Mat a;     // n x n, a_ij = <nabla_{e_i} v, e_j>
  Vec vvec;  // n, v_i = <nabla_v v, e_i>
  double h_asymmetry = 0.0;
};

/// Numerical residuals of the pointwise geometric invariants.
struct PointDiagnostics {
  double normal_norm_error = 0.0;     // | |N| - 1 |
  double normal_tangency = 0.0;       // max_a |<N, F_a>|
  double orientation_det = 0.0;       // det[F_1 | ... | F_{n+1} | N]
  double frame_orthonormality = 0.0;  // ||E^T E - I||_inf, E = [e, v]
  double frame_tangency = 0.0;        // max |<E_A, N>|
  double field_norm_error = 0.0;      // | |v| - 1 |
  double h_asymmetry = 0.0;
  double accel_along_v = 0.0;         // |<D_v v, v>|
  double derivative_along_v = 0.0;    // max_i |<D_{e_i} v, v>|
};

TangentField with_difference_jacobian(TangentField field,
                                      const ChartedHypersurface& surface);

Vec normalize_and_project(const TangentField& field,
                          const ChartedHypersurface& surface, int chart_index,
                          const Vec& u);

AdaptedFramePoint adapted_frame(const ChartedHypersurface& surface,
                                int chart_index, const Vec& u, const Vec& v);
AdaptedFramePoint adapted_frame(const PointGeometry& geometry, const Vec& v);

/// Frame components at one point.
ShapeData shape_data(const ChartedHypersurface& surface,
                     const TangentField& field, int chart_index, const Vec& u);

/// Shape data together with the frame it is expressed in.
struct FramedShapeData {
  SurfaceJet jet;
  AdaptedFramePoint frame;
  ShapeData data;
  Mat field_derivative;  // X -> D_X v as an ambient (n+2)x(n+2) operator
};

FramedShapeData framed_shape_data(const ChartedHypersurface& surface,
                                  const TangentField& field, int chart_index,
                                  const Vec& u);

PointDiagnostics diagnose_point(const ChartedHypersurface& surface,
                                const TangentField& field, int chart_index,
                                const Vec& u);

/// Coordinate field dF/du_coordinate; its jacobian comes from the chart's
/// second partials.
TangentField coordinate_field(std::string id, const ChartedHypersurface& surface,
                              int coordinate);

}  // namespace curvint
