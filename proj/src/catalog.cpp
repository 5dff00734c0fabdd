#include "curvint/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "curvint/errors.hpp"

namespace curvint {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec vec4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

SurfaceMetadata meta(std::string id, std::string name, std::vector<int> betti) {
  return SurfaceMetadata{std::move(id), std::move(name), std::move(betti), 0};
}

}  // namespace

ChartedHypersurface torus_of_revolution(double major, double minor) {
  const double R = major;
  const double r = minor;
  Chart chart;
  chart.domain = {{0.0, kTwoPi, true}, {0.0, kTwoPi, true}};
  chart.position = [R, r](const Vec& u) {
    const double q = R + r * std::cos(u[1]);
    return vec3(q * std::cos(u[0]), q * std::sin(u[0]), r * std::sin(u[1]));
  };
  chart.first_partials = [R, r](const Vec& u) {
    const double ct = std::cos(u[0]), st = std::sin(u[0]);
    const double cp = std::cos(u[1]), sp = std::sin(u[1]);
    const double q = R + r * cp;
    Mat t(3, 2);
    t.col(0) = vec3(-q * st, q * ct, 0.0);
    t.col(1) = vec3(-r * sp * ct, -r * sp * st, r * cp);
    return t;
  };
  chart.second_partials = [R, r](const Vec& u) {
    const double ct = std::cos(u[0]), st = std::sin(u[0]);
    const double cp = std::cos(u[1]), sp = std::sin(u[1]);
    const double q = R + r * cp;
    SecondPartials s(3, 2);
    s.set(0, 0, vec3(-q * ct, -q * st, 0.0));
    s.set(0, 1, vec3(r * sp * st, -r * sp * ct, 0.0));
    s.set(1, 1, vec3(-r * cp * ct, -r * cp * st, -r * sp));
    return s;
  };
  std::vector<Chart> charts{std::move(chart)};
  return ChartedHypersurface(1, std::move(charts), 1,
                             meta("torus2", "torus of revolution in R^3 (R=2, r=1)",
                                  {1, 2, 1}));
}

ChartedHypersurface hopf_sphere() {
  Chart chart;
  chart.domain = {{0.0, 0.5 * std::numbers::pi, false},
                  {0.0, kTwoPi, true},
                  {0.0, kTwoPi, true}};
  chart.position = [](const Vec& u) {
    const double ce = std::cos(u[0]), se = std::sin(u[0]);
    return vec4(ce * std::cos(u[1]), ce * std::sin(u[1]), se * std::cos(u[2]),
                se * std::sin(u[2]));
  };
  chart.first_partials = [](const Vec& u) {
    const double ce = std::cos(u[0]), se = std::sin(u[0]);
    const double c1 = std::cos(u[1]), s1 = std::sin(u[1]);
    const double c2 = std::cos(u[2]), s2 = std::sin(u[2]);
    Mat t(4, 3);
    t.col(0) = vec4(-se * c1, -se * s1, ce * c2, ce * s2);
    t.col(1) = vec4(-ce * s1, ce * c1, 0.0, 0.0);
    t.col(2) = vec4(0.0, 0.0, -se * s2, se * c2);
    return t;
  };
  chart.second_partials = [](const Vec& u) {
    const double ce = std::cos(u[0]), se = std::sin(u[0]);
    const double c1 = std::cos(u[1]), s1 = std::sin(u[1]);
    const double c2 = std::cos(u[2]), s2 = std::sin(u[2]);
    SecondPartials s(4, 3);
    s.set(0, 0, vec4(-ce * c1, -ce * s1, -se * c2, -se * s2));
    s.set(0, 1, vec4(se * s1, -se * c1, 0.0, 0.0));
    s.set(0, 2, vec4(0.0, 0.0, -ce * s2, ce * c2));
    s.set(1, 1, vec4(-ce * c1, -ce * s1, 0.0, 0.0));
    s.set(1, 2, vec4(0.0, 0.0, 0.0, 0.0));
    s.set(2, 2, vec4(0.0, 0.0, -se * c2, -se * s2));
    return s;
  };
  std::vector<Chart> charts{std::move(chart)};
  return ChartedHypersurface(2, std::move(charts), 1,
                             meta("sphere3", "unit S^3 in R^4 (Hopf coordinates)",
                                  {1, 0, 0, 1}));
}

ChartedHypersurface ellipsoid3(const Vec& axes) {
  return linear_image(hopf_sphere(), axes.asDiagonal().toDenseMatrix(),
                      meta("ellipsoid3", "ellipsoid diag(2,1,1,1) S^3 in R^4",
                           {1, 0, 0, 1}));
}

ChartedHypersurface torus_tube(double major, double minor, double tube) {
  const double R = major;
  const double r = minor;
  const double rho = tube;
  // F = ((R + s cos phi) cos theta, (R + s cos phi) sin theta, s sin phi, rho sin w)
  // with s = r + rho cos w.
  Chart chart;
  chart.domain = {{0.0, kTwoPi, true}, {0.0, kTwoPi, true}, {0.0, kTwoPi, true}};
  chart.position = [R, r, rho](const Vec& u) {
    const double s = r + rho * std::cos(u[2]);
    const double p = R + s * std::cos(u[0]);
    return vec4(p * std::cos(u[1]), p * std::sin(u[1]), s * std::sin(u[0]),
                rho * std::sin(u[2]));
  };
  chart.first_partials = [R, r, rho](const Vec& u) {
    const double cf = std::cos(u[0]), sf = std::sin(u[0]);
    const double ct = std::cos(u[1]), st = std::sin(u[1]);
    const double cw = std::cos(u[2]), sw = std::sin(u[2]);
    const double s = r + rho * cw;
    const double s_w = -rho * sw;
    const double p = R + s * cf;
    Mat t(4, 3);
    t.col(0) = vec4(-s * sf * ct, -s * sf * st, s * cf, 0.0);
    t.col(1) = vec4(-p * st, p * ct, 0.0, 0.0);
    t.col(2) = vec4(s_w * cf * ct, s_w * cf * st, s_w * sf, rho * cw);
    return t;
  };
  chart.second_partials = [R, r, rho](const Vec& u) {
    const double cf = std::cos(u[0]), sf = std::sin(u[0]);
    const double ct = std::cos(u[1]), st = std::sin(u[1]);
    const double cw = std::cos(u[2]), sw = std::sin(u[2]);
    const double s = r + rho * cw;
    const double s_w = -rho * sw;
    const double s_ww = -rho * cw;
    const double p = R + s * cf;
    SecondPartials d(4, 3);
    d.set(0, 0, vec4(-s * cf * ct, -s * cf * st, -s * sf, 0.0));
    d.set(0, 1, vec4(s * sf * st, -s * sf * ct, 0.0, 0.0));
    d.set(0, 2, vec4(-s_w * sf * ct, -s_w * sf * st, s_w * cf, 0.0));
    d.set(1, 1, vec4(-p * ct, -p * st, 0.0, 0.0));
    d.set(1, 2, vec4(-s_w * cf * st, s_w * cf * ct, 0.0, 0.0));
    d.set(2, 2, vec4(s_ww * cf * ct, s_ww * cf * st, s_ww * sf, -rho * sw));
    return d;
  };
  std::vector<Chart> charts{std::move(chart)};
  return ChartedHypersurface(
      2, std::move(charts), 1,
      meta("tube-t3", "tube of radius 0.3 around T^2 in R^3 x {0} (a T^3 in R^4)",
           {1, 3, 3, 1}));
}

ChartedHypersurface revolved_s1s2(double major, double minor) {
  const double R = major;
  const double r = minor;
  Chart chart;
  chart.domain = {{0.0, std::numbers::pi, false},
                  {0.0, kTwoPi, true},
                  {0.0, kTwoPi, true}};
  chart.position = [R, r](const Vec& u) {
    const double q = R + r * std::cos(u[0]);
    const double sa = std::sin(u[0]);
    return vec4(q * std::cos(u[1]), q * std::sin(u[1]), r * sa * std::cos(u[2]),
                r * sa * std::sin(u[2]));
  };
  chart.first_partials = [R, r](const Vec& u) {
    const double ca = std::cos(u[0]), sa = std::sin(u[0]);
    const double ct = std::cos(u[1]), st = std::sin(u[1]);
    const double cb = std::cos(u[2]), sb = std::sin(u[2]);
    const double q = R + r * ca;
    Mat t(4, 3);
    t.col(0) = vec4(-r * sa * ct, -r * sa * st, r * ca * cb, r * ca * sb);
    t.col(1) = vec4(-q * st, q * ct, 0.0, 0.0);
    t.col(2) = vec4(0.0, 0.0, -r * sa * sb, r * sa * cb);
    return t;
  };
  chart.second_partials = [R, r](const Vec& u) {
    const double ca = std::cos(u[0]), sa = std::sin(u[0]);
    const double ct = std::cos(u[1]), st = std::sin(u[1]);
    const double cb = std::cos(u[2]), sb = std::sin(u[2]);
    const double q = R + r * ca;
    SecondPartials d(4, 3);
    d.set(0, 0, vec4(-r * ca * ct, -r * ca * st, -r * sa * cb, -r * sa * sb));
    d.set(0, 1, vec4(r * sa * st, -r * sa * ct, 0.0, 0.0));
    d.set(0, 2, vec4(0.0, 0.0, -r * ca * sb, r * ca * cb));
    d.set(1, 1, vec4(-q * ct, -q * st, 0.0, 0.0));
    d.set(1, 2, vec4(0.0, 0.0, 0.0, 0.0));
    d.set(2, 2, vec4(0.0, 0.0, -r * sa * cb, -r * sa * sb));
    return d;
  };
  std::vector<Chart> charts{std::move(chart)};
  return ChartedHypersurface(
      2, std::move(charts), 1,
      meta("revs1s2", "S^1 x S^2 of revolution in R^4 (R=2, r=1)", {1, 1, 1, 1}));
}

Mat hopf_matrix() {
  Mat j = Mat::Zero(4, 4);
  j(0, 1) = -1.0;
  j(1, 0) = 1.0;
  j(2, 3) = -1.0;
  j(3, 2) = 1.0;
  return j;
}

TangentField linear_field(std::string id, const ChartedHypersurface& surface,
                          const Mat& linear) {
  if (linear.rows() != surface.ambient_dim() || linear.cols() != surface.ambient_dim()) {
    throw std::invalid_argument("linear field has wrong size");
  }
  std::vector<Chart> charts;
  for (int c = 0; c < surface.chart_count(); ++c) charts.push_back(surface.chart(c));
  TangentField f;
  f.id = std::move(id);
  f.ambient_value = [charts, linear](int ci, const Vec& u) -> Vec {
    return linear * charts.at(static_cast<size_t>(ci)).position(u);
  };
  f.ambient_jacobian = [charts, linear](int ci, const Vec& u) -> Mat {
    return linear * charts.at(static_cast<size_t>(ci)).first_partials(u);
  };
  return f;
}

std::vector<std::string> surface_ids() {
  std::vector<std::string> ids{"ellipsoid3", "revs1s2", "sphere3", "torus2", "tube-t3"};
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

Vec ellipsoid_axes() { return vec4(2.0, 1.0, 1.0, 1.0); }

}  // namespace

ChartedHypersurface make_surface(std::string_view id) {
  if (id == "torus2") return torus_of_revolution(2.0, 1.0);
  if (id == "sphere3") return hopf_sphere();
  if (id == "ellipsoid3") return ellipsoid3(ellipsoid_axes());
  if (id == "tube-t3") return torus_tube(2.0, 1.0, 0.3);
  if (id == "revs1s2") return revolved_s1s2(2.0, 1.0);
  throw UsageError("unknown surface '" + std::string(id) + "'");
}

std::vector<std::string> field_ids_for(std::string_view surface_id) {
  if (surface_id == "torus2" || surface_id == "revs1s2") return {"theta"};
  if (surface_id == "sphere3" || surface_id == "ellipsoid3") return {"hopf"};
  if (surface_id == "tube-t3") return {"fiber"};
  throw UsageError("unknown surface '" + std::string(surface_id) + "'");
}

TangentField make_field(std::string_view field_id, std::string_view surface_id,
                        const ChartedHypersurface& surface) {
  const auto valid = field_ids_for(surface_id);
  if (std::find(valid.begin(), valid.end(), field_id) == valid.end()) {
    throw UsageError("field '" + std::string(field_id) +
                     "' is not defined on surface '" + std::string(surface_id) + "'");
  }
  if (field_id == "hopf") {
    // Push the Hopf field forward by the linear map A that carries S^3 onto
    // the surface: raw(Ax) = A J x = (A J A^{-1}) (Ax).
    Mat a = Mat::Identity(4, 4);
    if (surface_id == "ellipsoid3") a = ellipsoid_axes().asDiagonal().toDenseMatrix();
    const Mat conj = a * hopf_matrix() * a.inverse();
    return linear_field("hopf", surface, conj);
  }
  if (field_id == "theta") {
    // theta is coordinate 0 on torus2, coordinate 1 on revs1s2.
    return coordinate_field("theta", surface, surface_id == "torus2" ? 0 : 1);
  }
  // fiber: the tube-circle direction w.
  return coordinate_field("fiber", surface, 2);
}

std::vector<CatalogPair> catalog_pairs() {
  std::vector<CatalogPair> out;
  for (const auto& s : surface_ids()) {
    for (const auto& f : field_ids_for(s)) out.push_back({s, f});
  }
  return out;
}

}  // namespace curvint
