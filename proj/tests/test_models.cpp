#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "wavectl/models.hpp"

using namespace wavectl;

TEST_CASE("burgers flux and eigenvalue") {
  auto m = make_burgers();
  CHECK(m->flux(Vec{0.0})[0] == 0.0);
  CHECK(m->flux(Vec{3.0})[0] == doctest::Approx(4.5));
  CHECK(m->eigen_w(Vec{2.0}).lambda[0] == doctest::Approx(2.0));
  CHECK(m->negative_families() == 0);
  CHECK_THROWS_AS(m->state_from_u(Vec{0.0}), OutOfBoxError);
}

TEST_CASE("gas flux closed form") {
  auto m = make_gas(2.0, 1.0);
  const Vec f0 = m->flux(Vec{1.0, 0.0});
  CHECK(f0[0] == doctest::Approx(0.0));
  CHECK(f0[1] == doctest::Approx(1.0));
  const Vec f1 = m->flux(Vec{1.0, 0.1});
  CHECK(f1[0] == doctest::Approx(0.1));
  CHECK(f1[1] == doctest::Approx(1.005));
}

TEST_CASE("temple2 eigenvalues are the built-in affine forms") {
  auto m = make_temple2();
  const Vec lam = m->eigen_w(Vec{-2.0, 2.0}).lambda;
  CHECK(lam[0] == doctest::Approx(-1.5));
  CHECK(lam[1] == doctest::Approx(1.5));
}

TEST_CASE("gas eigenvalues at the reference state") {
  auto m = make_gas(2.0, 1.0);
  const Vec w = m->to_riemann(Vec{1.0, 0.0});
  // u -/+ K rho^((gamma-1)/2) = -/+1 at (1, 0)
  const Vec lam = m->eigen_w(w).lambda;
  CHECK(lam[0] == doctest::Approx(-1.0));
  CHECK(lam[1] == doctest::Approx(1.0));
}

TEST_CASE("gas Riemann coordinates: w1 + w2 proportional to u") {
  auto m = make_gas(2.0, 1.0);
  const Vec w = m->to_riemann(Vec{1.0, 0.0});
  CHECK(w[0] == doctest::Approx(-2.0));
  CHECK(w[1] == doctest::Approx(2.0));
  CHECK(w[0] == doctest::Approx(-w[1]));
}

TEST_CASE("chart round-trip on a grid") {
  for (auto m : {make_temple2(), make_gas(), make_psystem(), make_burgers()}) {
    const int grid = m->dim() == 1 ? 100 : 10;
    double worst = 0.0;
    const Box& box = m->box();
    const int total = m->dim() == 1 ? grid : grid * grid;
    for (int k = 0; k < total; ++k) {
      Vec w(m->dim());
      if (m->dim() == 1) {
        w[0] = box[0].lo + box[0].width() * k / (grid - 1);
      } else {
        w[0] = box[0].lo + box[0].width() * (k % grid) / (grid - 1);
        w[1] = box[1].lo + box[1].width() * (k / grid) / (grid - 1);
      }
      const Vec u = m->from_riemann(w);
      worst = std::max(worst, (m->to_riemann(u) - w).norm_inf());
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("validate_model: temple2") {
  auto m = make_temple2();
  const auto rep = validate_model(*m);
  CHECK(rep.hypotheses_ok());
  CHECK(rep.c0 == doctest::Approx(0.25));
  CHECK(rep.lambda_min == doctest::Approx(0.25));
  CHECK(rep.lambda_max == doctest::Approx(2.75));
  // genuine nonlinearity is exactly 1 by construction
  CHECK(rep.min_gn == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(m->speeds().lambda_min == doctest::Approx(0.25));
}

TEST_CASE("validate_model: gas satisfies the wedge conditions") {
  auto m = make_gas(2.0, 1.0, {0.8, 1.2}, {-0.2, 0.2});
  const auto rep = validate_model(*m);
  CHECK(rep.hypotheses_ok());
  CHECK(rep.eigen_residual_ok);
  CHECK(rep.max_eigen_residual <= 1e-9);
  CHECK(rep.wedge_checked);
  CHECK(rep.wedge_ok);
  CHECK(rep.wedge_max[0] < 0.0);
  CHECK(rep.wedge_max[1] < 0.0);
  CHECK(rep.wedge_max[2] < 0.0);
}

TEST_CASE("validate_model: burgers trivially strictly hyperbolic") {
  const auto rep = validate_model(*make_burgers());
  CHECK(rep.strict_hyperbolic);
  CHECK(rep.genuinely_nonlinear);
  CHECK(rep.lambda_min == doctest::Approx(1.0));
}

TEST_CASE("validate_model: psystem violates the r1^r2 wedge sign") {
  const auto rep = validate_model(*make_psystem(2.0, 1.0));
  CHECK(rep.strict_hyperbolic);
  CHECK(rep.genuinely_nonlinear);
  CHECK(rep.speed_separated);
  CHECK(rep.wedge_checked);
  CHECK_FALSE(rep.wedge_ok);
  CHECK(rep.wedge_max[0] > 0.0);  // r1 ^ r2 > 0, unlike the gas model
}

TEST_CASE("gas gamma range is enforced") {
  CHECK_THROWS_AS(make_gas(3.5, 1.0), ConfigError);
  CHECK_THROWS_AS(make_gas(1.0, 1.0), ConfigError);
  CHECK_NOTHROW(make_gas(1.5, 1.0));
}
