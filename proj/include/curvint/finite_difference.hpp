#pragma once

#include <functional>
#include <vector>

#include "curvint/linalg.hpp"
#include "curvint/manifold.hpp"

namespace curvint {

// Step sizes are relative to each coordinate's interval length. First
// derivatives use central differences with one Richardson level; second
// derivatives of the position use a larger step because their rounding
// error grows like eps / h^2.
inline constexpr double kFirstDifferenceStep = 1e-5;
inline constexpr double kSecondDifferenceStep = 1e-3;

/// Jacobian of f at u, col a = df/du_a.
Mat difference_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& u,
                        const std::vector<Interval>& domain,
                        double relative_step = kFirstDifferenceStep);

/// Second partials of f at u, differencing the position twice.
SecondPartials difference_hessian(const std::function<Vec(const Vec&)>& f,
                                  const Vec& u,
                                  const std::vector<Interval>& domain,
                                  double relative_step = kSecondDifferenceStep);

/// Second partials by differencing an analytic first-partials function.
SecondPartials difference_of_partials(
    const std::function<Mat(const Vec&)>& partials, const Vec& u,
    const std::vector<Interval>& domain,
    double relative_step = kFirstDifferenceStep);

/// Returns `chart` with any missing derivative functions filled in.
Chart with_finite_differences(Chart chart);

}  // namespace curvint
