#include "curvint/manifold.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "curvint/errors.hpp"
#include "curvint/finite_difference.hpp"

namespace curvint {

namespace {

std::string describe_point(int chart_index, const Vec& u) {
  std::ostringstream os;
  os.precision(17);
  os << "chart " << chart_index << " at u = (";
  for (int a = 0; a < u.size(); ++a) {
    os << (a ? ", " : "") << u[a];
  }
  os << ")";
  return os.str();
}

Mat without_row(const Mat& m, int row) {
  Mat out(m.rows() - 1, m.cols());
  for (int r = 0, o = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    out.row(o++) = m.row(r);
  }
  return out;
}

double cofactor_sign(int i, int m) { return ((i + m - 1) % 2 == 0) ? 1.0 : -1.0; }

// dc/du_a for the cofactor vector c of the tangent matrix, by multilinearity
// of each minor in its columns.
Mat cofactor_derivatives(const Mat& tangents, const SecondPartials& second) {
  const int m = static_cast<int>(tangents.rows());
  const int dim = static_cast<int>(tangents.cols());
  Mat dc = Mat::Zero(m, dim);
  for (int i = 0; i < m; ++i) {
    const Mat minor = without_row(tangents, i);
    const double sign = cofactor_sign(i, m);
    for (int a = 0; a < dim; ++a) {
      double total = 0.0;
      for (int b = 0; b < dim; ++b) {
        Mat replaced = minor;
        for (int r = 0, o = 0; r < m; ++r) {
          if (r == i) continue;
          replaced(o++, b) = second[a](r, b);
        }
        total += lu_determinant(replaced);
      }
      dc(i, a) = sign * total;
    }
  }
  return dc;
}

struct NormalData {
  Vec normal;
  Vec cofactor;
  double cofactor_norm;
};

NormalData normal_from_tangents(const Mat& tangents, int orientation_sign,
                                int chart_index, const Vec& u) {
  NormalData out;
  out.cofactor = generalized_cross(tangents);
  out.cofactor_norm = out.cofactor.norm();
  double scale = 1.0;
  for (int a = 0; a < tangents.cols(); ++a) scale *= tangents.col(a).norm();
  if (!(out.cofactor_norm >= 1e-12 * scale) || scale == 0.0) {
    throw DegenerateImmersion("degenerate immersion (rank-deficient differential) at " +
                              describe_point(chart_index, u));
  }
  out.normal = (static_cast<double>(orientation_sign) / out.cofactor_norm) *
               out.cofactor;
  return out;
}

}  // namespace

ChartedHypersurface::ChartedHypersurface(int n_intrinsic,
                                         std::vector<Chart> charts,
                                         int orientation_sign,
                                         SurfaceMetadata metadata)
    : n_(n_intrinsic),
      orientation_sign_(orientation_sign),
      metadata_(std::move(metadata)) {
  if (n_ < 1 || n_ + 2 > kMaxAmbientDim) {
    throw std::invalid_argument("intrinsic dimension n out of supported range");
  }
  if (orientation_sign != 1 && orientation_sign != -1) {
    throw std::invalid_argument("orientation sign must be +1 or -1");
  }
  if (charts.empty()) throw std::invalid_argument("surface has no charts");
  charts_.reserve(charts.size());
  for (auto& chart : charts) {
    if (static_cast<int>(chart.domain.size()) != n_ + 1) {
      throw std::invalid_argument("chart domain dimension must be n + 1");
    }
    charts_.push_back(with_finite_differences(std::move(chart)));
  }
}

const Chart& ChartedHypersurface::chart(int index) const {
  if (index < 0 || index >= chart_count()) {
    throw IndexOutOfRange("chart index out of range");
  }
  return charts_[static_cast<size_t>(index)];
}

Vec ChartedHypersurface::position(int chart_index, const Vec& u) const {
  return chart(chart_index).position(u);
}

Mat ChartedHypersurface::tangents(int chart_index, const Vec& u) const {
  return chart(chart_index).first_partials(u);
}

SecondPartials ChartedHypersurface::second_partials(int chart_index,
                                                   const Vec& u) const {
  return chart(chart_index).second_partials(u);
}

Vec generalized_cross(const Mat& tangents) {
  const int m = static_cast<int>(tangents.rows());
  assert(tangents.cols() == m - 1);
  Vec c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = cofactor_sign(i, m) * lu_determinant(without_row(tangents, i));
  }
  return c;
}

Vec unit_normal(const ChartedHypersurface& surface, int chart_index,
                const Vec& u) {
  return normal_from_tangents(surface.tangents(chart_index, u),
                              surface.orientation_sign(), chart_index, u)
      .normal;
}

PointGeometry point_geometry(const ChartedHypersurface& surface,
                             int chart_index, const Vec& u) {
  PointGeometry g;
  g.position = surface.position(chart_index, u);
  g.tangent_basis = surface.tangents(chart_index, u);
  g.metric = g.tangent_basis.transpose() * g.tangent_basis;
  g.normal = normal_from_tangents(g.tangent_basis, surface.orientation_sign(),
                                  chart_index, u)
                 .normal;
  // det g = |c|^2 for the cofactor vector, but the Gram route is the direct
  // definition of the volume element.
  g.volume_factor = std::sqrt(lu_determinant(g.metric));
  return g;
}

double volume_factor(const ChartedHypersurface& surface, int chart_index,
                     const Vec& u) {
  const Mat t = surface.tangents(chart_index, u);
  const Mat metric = t.transpose() * t;
  return std::sqrt(lu_determinant(metric));
}

SurfaceJet surface_jet(const ChartedHypersurface& surface, int chart_index,
                       const Vec& u) {
  SurfaceJet jet;
  auto& g = jet.geometry;
  g.position = surface.position(chart_index, u);
  g.tangent_basis = surface.tangents(chart_index, u);
  g.metric = g.tangent_basis.transpose() * g.tangent_basis;
  g.volume_factor = std::sqrt(lu_determinant(g.metric));
  const NormalData nd = normal_from_tangents(
      g.tangent_basis, surface.orientation_sign(), chart_index, u);
  g.normal = nd.normal;

  jet.second = surface.second_partials(chart_index, u);
  const Mat dc = cofactor_derivatives(g.tangent_basis, jet.second);
  // N = s c/|c|  =>  dN = s (I - c c^T/|c|^2) dc / |c|
  const Vec chat = nd.cofactor / nd.cofactor_norm;
  const Mat projected = dc - chat * (chat.transpose() * dc);
  jet.normal_derivatives =
      (static_cast<double>(surface.orientation_sign()) / nd.cofactor_norm) *
      projected;
  jet.to_chart = g.metric.ldlt().solve(g.tangent_basis.transpose());
  return jet;
}

ShapeOperator shape_operator(const SurfaceJet& jet, const Mat& frame) {
  const int dim = static_cast<int>(jet.geometry.tangent_basis.cols());
  if (frame.cols() != dim || frame.rows() != jet.geometry.tangent_basis.rows()) {
    throw FrameNotOrthonormal("frame has wrong shape for this surface");
  }
  const Mat gram = frame.transpose() * frame;
  const double ortho_err = inf_norm(gram - Mat::Identity(dim, dim));
  const double tangency_err =
      (frame.transpose() * jet.geometry.normal).cwiseAbs().maxCoeff();
  if (!(ortho_err <= 1e-10) || !(tangency_err <= 1e-10)) {
    throw FrameNotOrthonormal("frame is not an orthonormal tangent frame");
  }
  // Column A of weingarten is D_{e_A} N.
  const Mat weingarten = jet.normal_derivatives * (jet.to_chart * frame);
  const Mat raw = weingarten.transpose() * frame;  // (A,B) = <D_{e_A}N, e_B>
  ShapeOperator out;
  out.asymmetry = inf_norm(raw - raw.transpose());
  out.h = 0.5 * (raw + raw.transpose());
  return out;
}

ShapeOperator shape_operator(const ChartedHypersurface& surface,
                             int chart_index, const Vec& u, const Mat& frame) {
  return shape_operator(surface_jet(surface, chart_index, u), frame);
}

Mat orthonormal_tangent_frame(const PointGeometry& geometry) {
  Mat q = geometry.tangent_basis;
  for (int a = 0; a < q.cols(); ++a) {
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (int b = 0; b < a; ++b) {
        q.col(a) -= q.col(b).dot(q.col(a)) * q.col(b);
      }
    }
    const double norm = q.col(a).norm();
    if (!(norm > 0.0)) throw DegenerateImmersion("tangent basis is rank deficient");
    q.col(a) /= norm;
  }
  return q;
}

ChartedHypersurface linear_image(const ChartedHypersurface& surface,
                                 const Mat& linear, SurfaceMetadata metadata) {
  if (linear.rows() != surface.ambient_dim() ||
      linear.cols() != surface.ambient_dim()) {
    throw std::invalid_argument("linear map has wrong size");
  }
  const double det = lu_determinant(linear);
  if (std::abs(det) < 1e-300) {
    throw std::invalid_argument("linear map is singular");
  }
  std::vector<Chart> charts;
  for (int c = 0; c < surface.chart_count(); ++c) {
    const Chart& base = surface.chart(c);
    Chart image;
    image.domain = base.domain;
    image.weight_fraction = base.weight_fraction;
    image.position = [linear, f = base.position](const Vec& u) -> Vec {
      return linear * f(u);
    };
    image.first_partials = [linear, f = base.first_partials](const Vec& u) -> Mat {
      return linear * f(u);
    };
    image.second_partials = [linear, f = base.second_partials](const Vec& u) {
      SecondPartials s = f(u);
      for (int a = 0; a < s.chart_dim(); ++a) s[a] = linear * s[a];
      return s;
    };
    charts.push_back(std::move(image));
  }
  const int sign = det > 0 ? surface.orientation_sign() : -surface.orientation_sign();
  return ChartedHypersurface(surface.n(), std::move(charts), sign,
                             std::move(metadata));
}

}  // namespace curvint
