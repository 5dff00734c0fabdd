#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "curvint/catalog.hpp"
#include "curvint/errors.hpp"
#include "curvint/invariants.hpp"

using namespace curvint;

namespace {

ColumnSystem sphere_hopf_columns() {
  ShapeData d;
  d.h = Mat::Identity(3, 3);
  d.a = Mat::Zero(2, 2);
  d.a(0, 1) = -1.0;
  d.a(1, 0) = 1.0;
  d.vvec = Vec::Zero(2);
  return column_system(d);
}

double binomial_count(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("column system layout") {
  ShapeData d;
  d.h = Mat::Identity(3, 3);
  d.a.resize(2, 2);
  d.a << 1, 2, 3, 4;
  d.vvec.resize(2);
  d.vvec << 5, 6;
  const ColumnSystem c = column_system(d);
  CHECK(c.n() == 2);
  CHECK(c.H == d.h);
  // V_j = (a_1j, a_2j, v_j)
  CHECK(c.V(0, 0) == 1);
  CHECK(c.V(1, 0) == 3);
  CHECK(c.V(2, 0) == 5);
  CHECK(c.V(0, 1) == 2);
  CHECK(c.V(1, 1) == 4);
  CHECK(c.V(2, 1) == 6);
}

TEST_CASE("eta on the Hopf sphere") {
  const ColumnSystem c = sphere_hopf_columns();
  const EtaVector e = eta_all(c);
  REQUIRE(e.n() == 2);
  CHECK(e[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(e[1]) < 1e-15);
  CHECK(e[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(jacobian_phi(c, 1.0).determinant == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(jacobian_phi(c, 0.0).determinant == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("geodesic-free field: only eta_0 survives") {
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 4; ++n) {
    ColumnSystem c = oracle::random_column_system(rng, n);
    c.V.setZero();
    const EtaVector e = eta_all(c);
    CHECK(e[0] == doctest::Approx(oracle::leibniz_det(c.H)).epsilon(1e-12));
    for (int k = 1; k <= n; ++k) CHECK(e[k] == 0.0);
  }
}

TEST_CASE("n = 1 closed form") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const ColumnSystem c = oracle::random_column_system(rng, 1);
    CHECK(eta(0, c) == doctest::Approx(c.H(0, 0) * c.H(1, 1) - c.H(1, 0) * c.H(0, 1)));
    CHECK(eta(1, c) == doctest::Approx(c.V(0, 0) * c.H(1, 1) - c.V(1, 0) * c.H(0, 1)));
  }
}

TEST_CASE("k outside [0, n] is rejected") {
  const ColumnSystem c = sphere_hopf_columns();
  CHECK_THROWS_AS(eta(-1, c), IndexOutOfRange);
  CHECK_THROWS_AS(eta(3, c), IndexOutOfRange);
  CHECK_NOTHROW(eta(2, c));
}

TEST_CASE("det(d phi_t) = sqrt(1 + t^2) sum_k eta_k t^k") {
  std::mt19937_64 rng(79);
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    for (int i = 0; i < 100; ++i) {
      const ColumnSystem c = oracle::random_column_system(rng, n);
      const EtaVector e = eta_all(c);
      for (double t : {0.1, 0.5, 1.0, 2.0}) {
        double poly = 0.0;
        for (int k = n; k >= 0; --k) poly = poly * t + e[k];
        const double lhs = jacobian_phi(c, t).determinant;
        const double rhs = std::sqrt(1.0 + t * t) * poly;
        const double scale = std::max(1.0, std::abs(lhs));
        CHECK(std::abs(lhs - rhs) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("eta matches coefficients interpolated from det(d phi_t)") {
  std::mt19937_64 rng(83);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    for (int i = 0; i < 50; ++i) {
      const ColumnSystem c = oracle::random_column_system(rng, n);
      const Vec ref = oracle::interpolated_eta(c);
      const Vec got = eta_all(c).values;
      CHECK((ref - got).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("eta_k is homogeneous of degree k in V") {
  std::mt19937_64 rng(89);
  const double s = 2.0;
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 20; ++i) {
      const ColumnSystem c = oracle::random_column_system(rng, n);
      ColumnSystem scaled = c;
      scaled.V *= s;
      const EtaVector e = eta_all(c);
      const EtaVector es = eta_all(scaled);
      for (int k = 0; k <= n; ++k) {
        CHECK(std::abs(es[k] - std::pow(s, k) * e[k]) < 1e-12 * std::max(1.0, std::abs(es[k])));
      }
    }
  }
}

TEST_CASE("subsets are visited lexicographically, each once") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> seen;
      for_each_subset(n, k, [&](std::span<const int> s) {
        seen.emplace_back(s.begin(), s.end());
      });
      CHECK(static_cast<double>(seen.size()) == binomial_count(n, k));
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      for (const auto& s : seen) {
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(std::is_sorted(s.begin(), s.end()));
        if (!s.empty()) CHECK((s.front() >= 0 && s.back() < n));
      }
    }
  }
}

TEST_CASE("eta_0 agrees with the permutation expansion of det h") {
  std::mt19937_64 rng(97);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 20; ++i) {
      const ColumnSystem c = oracle::random_column_system(rng, n);
      const EtaVector e = eta_all(c);
      CHECK(std::abs(e[0] - oracle::leibniz_det(c.H)) < 1e-13);
      CHECK(e.eta0_crosscheck < 1e-13);
      // eta_n replaces every column but the last.
      Mat full(n + 1, n + 1);
      full << c.V, c.H.col(n);
      CHECK(std::abs(e[n] - oracle::leibniz_det(full)) < 1e-13);
    }
  }
}

TEST_CASE("torus meridian field at the outer equator") {
  const auto s = torus_of_revolution(2.0, 1.0);
  const auto f = make_field("theta", "torus2", s);
  Vec u(2);
  u << 0.0, 0.0;
  const EtaVector e = eta_all(column_system(shape_data(s, f, 0, u)));
  CHECK(e[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(e[1]) < 1e-12);
}
