#include <cmath>
#include <map>
#include <numbers>

#include "doctest.h"

#include "curvint/catalog.hpp"
#include "curvint/degree.hpp"
#include "curvint/errors.hpp"

using namespace curvint;

namespace {

constexpr double kPi = std::numbers::pi;

const std::map<std::string, long> kExpectedDegree = {
    {"ellipsoid3", 1}, {"revs1s2", 0}, {"sphere3", 1}, {"torus2", 0}, {"tube-t3", 0}};

QuadratureGrid uniform_grid(const ChartedHypersurface& s, int count) {
  return QuadratureGrid(s, std::vector<int>(static_cast<size_t>(s.dim()), count));
}

}  // namespace

TEST_CASE("unit sphere volumes") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(2) == doctest::Approx(4 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
  CHECK(sphere_volume(4) == doctest::Approx(8 * kPi * kPi / 3).epsilon(1e-15));
  // vol(S^{m+2}) = 2 pi vol(S^m) / (m + 1)
  for (int m = 1; m <= 10; ++m) {
    CHECK(sphere_volume(m + 2) ==
          doctest::Approx(2 * kPi * sphere_volume(m) / (m + 1)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sphere_volume(0), IndexOutOfRange);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(3, 4) == 0.0);
  CHECK(binomial(3, -1) == 0.0);
}

TEST_CASE("predicted eta integrals") {
  CHECK(predicted_eta_integral(2, 0, 1) == doctest::Approx(2 * kPi * kPi));
  CHECK(predicted_eta_integral(2, 2, 1) == doctest::Approx(2 * kPi * kPi));
  CHECK(predicted_eta_integral(2, 1, 1) == 0.0);
  CHECK(predicted_eta_integral(1, 0, 3) == 0.0);
  CHECK(predicted_eta_integral(4, 2, 2) == doctest::Approx(2 * 2 * kPi * kPi * kPi));
  CHECK(predicted_eta_integral(2, 0, 0) == 0.0);
}

TEST_CASE("Gauss-map degree of catalog surfaces at two resolutions") {
  for (const auto& id : surface_ids()) {
    CAPTURE(id);
    const auto s = make_surface(id);
    for (int count : {32, 48}) {
      const DegreeResult d = gauss_degree(s, uniform_grid(s, count));
      CHECK(d.valid);
      CHECK(d.rounded == kExpectedDegree.at(id));
      CHECK(d.residual < 1e-6);
    }
  }
}

TEST_CASE("half a sphere has no integer degree") {
  Chart c = hopf_sphere().chart(0);
  c.domain[0].hi = 0.25 * kPi;
  const ChartedHypersurface half(2, {c}, 1, {"half", "", {}, {}});
  const QuadratureGrid g = uniform_grid(half, 32);
  try {
    gauss_degree(half, g);
    FAIL("expected NonIntegerDegree");
  } catch (const NonIntegerDegree& e) {
    CHECK(e.raw() == doctest::Approx(0.5).epsilon(1e-10));
  }
  const DegreeResult r = degree_from_integral(
      integrate(half, [](int, const Vec&) { return 1.0; }, g), 2);
  CHECK_FALSE(r.valid);
}

TEST_CASE("reversing the orientation negates the degree") {
  const Chart c = hopf_sphere().chart(0);
  const ChartedHypersurface inward(2, {c}, -1, {"in", "", {}, 0});
  CHECK(gauss_degree(inward, uniform_grid(inward, 24)).rounded == -1);
}

TEST_CASE("integral formula holds for every catalog pair") {
  for (const auto& pair : catalog_pairs()) {
    CAPTURE(pair.surface);
    const auto s = make_surface(pair.surface);
    const auto f = make_field(pair.field, pair.surface, s);
    for (int count : {kDefaultNodesPerCoordinate, 64}) {
      CAPTURE(count);
      const VerificationReport r = verify_integral_formula(s, f, uniform_grid(s, count));
      CHECK(r.pass);
      CHECK(r.degree.rounded == kExpectedDegree.at(pair.surface));
      CHECK(r.eta.size() == static_cast<size_t>(s.n() + 1));
      CHECK(r.euler_characteristic_known_zero);
      for (const auto& row : r.eta) {
        CAPTURE(row.k);
        CHECK(row.pass);
        CHECK(row.abs_dev <= row.threshold);
        if (s.n() % 2 != 0 || row.k % 2 != 0) {
          CHECK(row.predicted == 0.0);
          CHECK(std::abs(row.integral) <= 1e-6 * r.volume);
        }
      }
    }
  }
}

TEST_CASE("verify honours the k selection and tolerance") {
  const auto s = hopf_sphere();
  const auto f = make_field("hopf", "sphere3", s);
  VerifyOptions o;
  o.ks = {2};
  const VerificationReport r = verify_integral_formula(s, f, uniform_grid(s, 16), o);
  REQUIRE(r.eta.size() == 1);
  CHECK(r.eta[0].k == 2);
  o.ks = {3};
  CHECK_THROWS_AS(verify_integral_formula(s, f, uniform_grid(s, 16), o), IndexOutOfRange);

  // Under-resolved: the half-grid error estimate exceeds a tight threshold.
  VerifyOptions tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol_factor = 1e-12;
  CHECK_FALSE(verify_integral_formula(s, f, uniform_grid(s, 8), tight).pass);
}

TEST_CASE("Milnor constraints") {
  const MilnorReport s3 = milnor_constraints({1, {1, 0, 0, 1}, true});
  CHECK(s3.beta == 2);
  CHECK(s3.parity);
  CHECK(s3.bound);
  CHECK(s3.oriented_bound.value());
  CHECK(s3.all());

  const MilnorReport bad = milnor_constraints({3, {1, 0, 0, 1}, true});
  CHECK_FALSE(bad.bound);
  CHECK_FALSE(bad.all());

  const MilnorReport parity = milnor_constraints({0, {1, 0, 0, 1}, false});
  CHECK(parity.parity);
  CHECK_FALSE(parity.oriented_bound.has_value());

  // beta = 8: -2 <= d <= 4 oriented, |d| <= 4 unoriented
  CHECK(milnor_constraints({-2, {1, 3, 3, 1}, true}).all());
  CHECK_FALSE(milnor_constraints({-3, {1, 3, 3, 1}, true}).oriented_bound.value());
  CHECK(milnor_constraints({-3, {1, 3, 3, 1}, false}).bound);
  CHECK_FALSE(milnor_constraints({1, {1, 1, 1}, true}).parity);
  CHECK_THROWS(milnor_constraints({0, {1, -1}, true}));
}

TEST_CASE("catalog degrees satisfy the Milnor constraints") {
  for (const auto& id : surface_ids()) {
    CAPTURE(id);
    const auto s = make_surface(id);
    const DegreeResult d = gauss_degree(s, uniform_grid(s, 32));
    CHECK(milnor_constraints({d.rounded, *s.metadata().betti, true}).all());
  }
}

TEST_CASE("foliation: Hopf field is maximally non-integrable") {
  const auto s = hopf_sphere();
  const auto f = make_field("hopf", "sphere3", s);
  const QuadratureGrid g = uniform_grid(s, 12);
  const FoliationReport r = foliation_obstruction_report(s, f, g, g);
  CHECK(r.applicable);
  CHECK_FALSE(r.integrable);
  CHECK(r.max_defect == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.max_rank == 2);
  CHECK_FALSE(r.hypothesis);
  CHECK_FALSE(r.degree.has_value());
  CHECK(r.samples.size() == g.size());
}

TEST_CASE("foliation: tube fibres are leaves of full rank") {
  const auto s = make_surface("tube-t3");
  const auto f = make_field("fiber", "tube-t3", s);
  const QuadratureGrid g = uniform_grid(s, 12);
  const FoliationReport r = foliation_obstruction_report(s, f, g, g);
  CHECK(r.integrable);
  CHECK(r.max_defect < 1e-10);
  CHECK(r.max_rank == 2);
  CHECK(r.rank_limit == 0);
  CHECK_FALSE(r.hypothesis);
}

TEST_CASE("foliation: totally geodesic slices force degree zero") {
  const auto s = make_surface("revs1s2");
  const auto f = make_field("theta", "revs1s2", s);
  const QuadratureGrid g = uniform_grid(s, 12);
  const FoliationReport r = foliation_obstruction_report(s, f, g, uniform_grid(s, 32));
  CHECK(r.integrable);
  CHECK(r.max_rank == 0);
  CHECK(r.hypothesis);
  REQUIRE(r.degree.has_value());
  CHECK(*r.degree == 0);
  CHECK(r.implication_holds.value());
}

TEST_CASE("foliation summary rules") {
  std::vector<FoliationSample> flat(10);
  const FoliationReport even = summarize_foliation(4, flat);
  CHECK(even.hypothesis);
  CHECK(even.rank_limit == 2);
  const FoliationReport odd = summarize_foliation(3, flat);
  CHECK_FALSE(odd.applicable);
  CHECK_FALSE(odd.hypothesis);
  CHECK(!odd.note.empty());

  std::vector<FoliationSample> twisted = flat;
  twisted[3].defect = 1e-3;
  CHECK_FALSE(summarize_foliation(4, twisted).integrable);
  std::vector<FoliationSample> curved = flat;
  curved[7].rank = 3;
  CHECK_FALSE(summarize_foliation(4, curved).hypothesis);

  const FoliationSample zero = foliation_sample(Mat::Zero(3, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.defect == 0.0);
  Mat a = Mat::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-12;
  CHECK(foliation_sample(a).rank == 1);
  a(1, 1) = 1e-3;
  CHECK(foliation_sample(a).rank == 2);
}

TEST_CASE("foliation on odd n reaches no conclusion") {
  const auto s = make_surface("torus2");
  const auto f = make_field("theta", "torus2", s);
  const QuadratureGrid g = uniform_grid(s, 16);
  const FoliationReport r = foliation_obstruction_report(s, f, g, g);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.hypothesis);
  CHECK(r.integrable);  // n = 1: a is 1x1
}

TEST_CASE("the obstruction implication holds across the catalog") {
  for (const auto& pair : catalog_pairs()) {
    CAPTURE(pair.surface);
    const auto s = make_surface(pair.surface);
    const auto f = make_field(pair.field, pair.surface, s);
    const QuadratureGrid g = uniform_grid(s, 10);
    const FoliationReport r = foliation_obstruction_report(s, f, g, uniform_grid(s, 32));
    if (r.hypothesis) CHECK(r.implication_holds.value());
  }
}
