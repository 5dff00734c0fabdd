#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvint/fields.hpp"
#include "curvint/manifold.hpp"

namespace curvint {

// Built-in surfaces. All are closed, oriented, have Euler characteristic
// zero, and ship analytic first and second partials. Chart coordinates are
// ordered so that the computed normal (orientation sign +1) points outward.

/// Torus of revolution in R^3, coordinates (theta, phi).
ChartedHypersurface torus_of_revolution(double major, double minor);

/// Unit S^3 in Hopf coordinates (eta, xi1, xi2), eta in (0, pi/2).
ChartedHypersurface hopf_sphere();

/// diag(axes) applied to the unit S^3.
ChartedHypersurface ellipsoid3(const Vec& axes);

/// Boundary of the radius-`tube` tube around the torus of revolution
/// (major, minor) sitting in R^3 x {0} in R^4; a T^3. Coordinates (phi, theta, w).
ChartedHypersurface torus_tube(double major, double minor, double tube);

/// S^1 x S^2 obtained by revolving a 2-sphere of radius `minor` centred at
/// distance `major` about a 2-plane in R^4. Coordinates (alpha, theta, beta).
ChartedHypersurface revolved_s1s2(double major, double minor);

/// Field x -> L x restricted to the surface (raw vector L F(u)).
TangentField linear_field(std::string id, const ChartedHypersurface& surface,
                          const Mat& linear);

/// The Hopf generator (-x2, x1, -x4, x3) as a 4x4 matrix.
Mat hopf_matrix();

std::vector<std::string> surface_ids();
ChartedHypersurface make_surface(std::string_view id);

/// Field identifiers valid on a given surface, sorted.
std::vector<std::string> field_ids_for(std::string_view surface_id);
TangentField make_field(std::string_view field_id, std::string_view surface_id,
                        const ChartedHypersurface& surface);

struct CatalogPair {
  std::string surface;
  std::string field;
};

/// Every (surface, field) pair the catalog supports.
std::vector<CatalogPair> catalog_pairs();

}  // namespace curvint
