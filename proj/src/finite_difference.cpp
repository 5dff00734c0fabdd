#include "curvint/finite_difference.hpp"

#include <stdexcept>

namespace curvint {

namespace {

double step_for(const std::vector<Interval>& domain, int a, double relative) {
  return relative * domain.at(a).length();
}

template <typename F>
auto richardson_central(const F& f, const Vec& u, int a, double h) {
  Vec plus = u;
  Vec minus = u;
  auto central = [&](double step) {
    plus = u;
    minus = u;
    plus[a] += step;
    minus[a] -= step;
    return ((f(plus) - f(minus)) / (2.0 * step)).eval();
  };
  const auto coarse = central(h);
  const auto fine = central(0.5 * h);
  return ((4.0 * fine - coarse) / 3.0).eval();
}

}  // namespace

Mat difference_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& u,
                        const std::vector<Interval>& domain,
                        double relative_step) {
  const Vec f0 = f(u);
  Mat jac(f0.size(), u.size());
  for (int a = 0; a < u.size(); ++a) {
    jac.col(a) = richardson_central(f, u, a, step_for(domain, a, relative_step));
  }
  return jac;
}

SecondPartials difference_hessian(const std::function<Vec(const Vec&)>& f,
                                  const Vec& u,
                                  const std::vector<Interval>& domain,
                                  double relative_step) {
  const int dim = static_cast<int>(u.size());
  const Vec f0 = f(u);
  SecondPartials out(static_cast<int>(f0.size()), dim);

  auto shifted = [&](int a, double ha, int b, double hb) {
    Vec p = u;
    p[a] += ha;
    p[b] += hb;
    return f(p);
  };
  for (int a = 0; a < dim; ++a) {
    const double ha = step_for(domain, a, relative_step);
    // Diagonal: three-point second difference, Richardson over h, h/2.
    auto diag = [&](double h) {
      Vec p = u;
      Vec m = u;
      p[a] += h;
      m[a] -= h;
      return ((f(p) - 2.0 * f0 + f(m)) / (h * h)).eval();
    };
    out.set(a, a, (4.0 * diag(0.5 * ha) - diag(ha)) / 3.0);
    for (int b = a + 1; b < dim; ++b) {
      const double hb = step_for(domain, b, relative_step);
      auto cross = [&](double s) {
        const double sa = s * ha;
        const double sb = s * hb;
        return ((shifted(a, sa, b, sb) - shifted(a, sa, b, -sb) -
                 shifted(a, -sa, b, sb) + shifted(a, -sa, b, -sb)) /
                (4.0 * sa * sb))
            .eval();
      };
      out.set(a, b, (4.0 * cross(0.5) - cross(1.0)) / 3.0);
    }
  }
  return out;
}

SecondPartials difference_of_partials(
    const std::function<Mat(const Vec&)>& partials, const Vec& u,
    const std::vector<Interval>& domain, double relative_step) {
  const int dim = static_cast<int>(u.size());
  const Mat j0 = partials(u);
  SecondPartials out(static_cast<int>(j0.rows()), dim);
  std::array<Mat, kMaxChartDim> raw;
  for (int a = 0; a < dim; ++a) {
    raw[a] = richardson_central(partials, u, a,
                                step_for(domain, a, relative_step));
  }
  // raw[a].col(b) ~ d/du_a of F_b; average the two orderings.
  for (int a = 0; a < dim; ++a) {
    for (int b = a; b < dim; ++b) {
      out.set(a, b, 0.5 * (raw[a].col(b) + raw[b].col(a)));
    }
  }
  return out;
}

Chart with_finite_differences(Chart chart) {
  if (!chart.position) {
    throw std::invalid_argument("chart has no position function");
  }
  const auto domain = chart.domain;
  const auto position = chart.position;
  if (!chart.first_partials) {
    chart.first_partials = [position, domain](const Vec& u) {
      return difference_jacobian(position, u, domain);
    };
    if (!chart.second_partials) {
      chart.second_partials = [position, domain](const Vec& u) {
        return difference_hessian(position, u, domain);
      };
    }
  } else if (!chart.second_partials) {
    const auto partials = chart.first_partials;
    chart.second_partials = [partials, domain](const Vec& u) {
      return difference_of_partials(partials, u, domain);
    };
  }
  return chart;
}

}  // namespace curvint
