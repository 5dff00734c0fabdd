#include "curvint/fields.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvint/errors.hpp"
#include "curvint/finite_difference.hpp"

namespace curvint {

namespace {

// Tangential part w of the raw vector and its chart derivatives.
struct ProjectedField {
  Vec v;
  Mat dv;  // col a = dv/du_a
};

ProjectedField project_field(const TangentField& field, const SurfaceJet& jet,
                             int chart_index, const Vec& u) {
  const Vec& normal = jet.geometry.normal;
  const Mat& dnormal = jet.normal_derivatives;
  const Vec raw = field.ambient_value(chart_index, u);
  const Mat jac = field.ambient_jacobian(chart_index, u);

  const double along_normal = raw.dot(normal);
  const Vec w = raw - along_normal * normal;
  const double wn = w.norm();
  if (!(wn >= 1e-10)) {
    throw VanishingField("field '" + field.id + "' has vanishing tangential part");
  }
  // d/du_a (raw - <raw,N> N)
  const Mat dw = jac -
                 normal * (normal.transpose() * jac + raw.transpose() * dnormal) -
                 along_normal * dnormal;
  ProjectedField out;
  out.v = w / wn;
  out.dv = (dw - out.v * (out.v.transpose() * dw)) / wn;
  return out;
}

}  // namespace

Mat AdaptedFramePoint::full() const {
  Mat out(e.rows(), e.cols() + 1);
  out.leftCols(e.cols()) = e;
  out.col(e.cols()) = v;
  return out;
}

TangentField with_difference_jacobian(TangentField field,
                                      const ChartedHypersurface& surface) {
  if (!field.ambient_value) {
    throw std::invalid_argument("field has no value function");
  }
  if (field.ambient_jacobian) return field;
  std::vector<std::vector<Interval>> domains;
  for (int c = 0; c < surface.chart_count(); ++c) {
    domains.push_back(surface.chart(c).domain);
  }
  field.ambient_jacobian = [value = field.ambient_value, domains](
                               int chart_index, const Vec& u) {
    auto f = [&](const Vec& p) { return value(chart_index, p); };
    return difference_jacobian(f, u, domains.at(static_cast<size_t>(chart_index)));
  };
  return field;
}

Vec normalize_and_project(const TangentField& field,
                          const ChartedHypersurface& surface, int chart_index,
                          const Vec& u) {
  const Vec normal = unit_normal(surface, chart_index, u);
  const Vec raw = field.ambient_value(chart_index, u);
  const Vec w = raw - raw.dot(normal) * normal;
  const double wn = w.norm();
  if (!(wn >= 1e-10)) {
    throw VanishingField("field '" + field.id + "' has vanishing tangential part");
  }
  return w / wn;
}

AdaptedFramePoint adapted_frame(const PointGeometry& geometry, const Vec& v) {
  const Mat& t = geometry.tangent_basis;
  const int dim = static_cast<int>(t.cols());
  const int n = dim - 1;
  if (std::abs(v.norm() - 1.0) > 1e-10 || std::abs(v.dot(geometry.normal)) > 1e-10) {
    throw FrameNotOrthonormal("adapted frame needs a unit tangent vector v");
  }

  Mat projected = t - v * (v.transpose() * t);

  // Pass 1: residual of each projected tangent after Gram-Schmidt against
  // its predecessors, to find the one dependent direction.
  std::array<double, kMaxChartDim> residual{};
  std::array<bool, kMaxChartDim> usable{};
  Mat q = projected;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < a; ++b) {
      if (usable[b]) q.col(a) -= q.col(b).dot(q.col(a)) * q.col(b);
    }
    residual[a] = q.col(a).norm();
    const double ref = t.col(a).norm();
    usable[a] = residual[a] > 1e-8 * ref;
    if (usable[a]) q.col(a) /= residual[a];
  }
  int discard = 0;
  for (int a = 1; a < dim; ++a) {
    if (residual[a] < residual[discard]) discard = a;
  }

  // Pass 2: orthonormalize the n kept vectors in chart order.
  AdaptedFramePoint out;
  out.v = v;
  out.normal = geometry.normal;
  out.e.resize(t.rows(), n);
  int col = 0;
  for (int a = 0; a < dim; ++a) {
    if (a == discard) continue;
    Vec x = projected.col(a);
    for (int pass = 0; pass < 2; ++pass) {
      x -= v.dot(x) * v;
      for (int b = 0; b < col; ++b) x -= out.e.col(b).dot(x) * out.e.col(b);
    }
    const double norm = x.norm();
    if (!(norm > 1e-12 * t.col(a).norm())) {
      throw DegenerateImmersion("cannot complete an adapted frame: tangent basis degenerate");
    }
    out.e.col(col++) = x / norm;
  }
  return out;
}

AdaptedFramePoint adapted_frame(const ChartedHypersurface& surface,
                                int chart_index, const Vec& u, const Vec& v) {
  return adapted_frame(point_geometry(surface, chart_index, u), v);
}

FramedShapeData framed_shape_data(const ChartedHypersurface& surface,
                                  const TangentField& field, int chart_index,
                                  const Vec& u) {
  FramedShapeData out;
  out.jet = surface_jet(surface, chart_index, u);
  const ProjectedField pf = project_field(field, out.jet, chart_index, u);
  out.field_derivative = pf.dv * out.jet.to_chart;
  out.frame = adapted_frame(out.jet.geometry, pf.v);

  const Mat full = out.frame.full();
  const ShapeOperator s = shape_operator(out.jet, full);
  const Mat& e = out.frame.e;
  const Mat& dv = out.field_derivative;
  out.data.h = s.h;
  out.data.h_asymmetry = s.asymmetry;
  // a_ij = <Dv e_i, e_j>  => a = (e^T Dv e)^T
  out.data.a = (e.transpose() * dv * e).transpose();
  out.data.vvec = e.transpose() * (dv * pf.v);
  return out;
}

ShapeData shape_data(const ChartedHypersurface& surface,
                     const TangentField& field, int chart_index, const Vec& u) {
  return framed_shape_data(surface, field, chart_index, u).data;
}

PointDiagnostics diagnose_point(const ChartedHypersurface& surface,
                                const TangentField& field, int chart_index,
                                const Vec& u) {
  const FramedShapeData fsd = framed_shape_data(surface, field, chart_index, u);
  const auto& g = fsd.jet.geometry;
  const int m = surface.ambient_dim();
  PointDiagnostics d;
  d.normal_norm_error = std::abs(g.normal.norm() - 1.0);
  d.normal_tangency = (g.tangent_basis.transpose() * g.normal).cwiseAbs().maxCoeff();
  Mat oriented(m, m);
  oriented.leftCols(m - 1) = g.tangent_basis;
  oriented.col(m - 1) = g.normal;
  d.orientation_det = lu_determinant(oriented);
  const Mat full = fsd.frame.full();
  d.frame_orthonormality =
      inf_norm(full.transpose() * full - Mat::Identity(full.cols(), full.cols()));
  d.frame_tangency = (full.transpose() * g.normal).cwiseAbs().maxCoeff();
  d.field_norm_error = std::abs(fsd.frame.v.norm() - 1.0);
  d.h_asymmetry = fsd.data.h_asymmetry;
  const Vec& v = fsd.frame.v;
  const Mat& dv = fsd.field_derivative;
  d.accel_along_v = std::abs(v.dot(dv * v));
  d.derivative_along_v = fsd.frame.e.cols() == 0
                             ? 0.0
                             : (v.transpose() * dv * fsd.frame.e).cwiseAbs().maxCoeff();
  return d;
}

TangentField coordinate_field(std::string id, const ChartedHypersurface& surface,
                              int coordinate) {
  if (coordinate < 0 || coordinate >= surface.dim()) {
    throw IndexOutOfRange("coordinate index out of range");
  }
  std::vector<Chart> charts;
  for (int c = 0; c < surface.chart_count(); ++c) charts.push_back(surface.chart(c));
  TangentField f;
  f.id = std::move(id);
  f.ambient_value = [charts, coordinate](int ci, const Vec& u) -> Vec {
    return charts.at(static_cast<size_t>(ci)).first_partials(u).col(coordinate);
  };
  f.ambient_jacobian = [charts, coordinate](int ci, const Vec& u) -> Mat {
    return charts.at(static_cast<size_t>(ci)).second_partials(u)[coordinate];
  };
  return f;
}

}  // namespace curvint
