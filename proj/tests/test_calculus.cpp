#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "biham/calculus.hpp"
#include "biham/grid.hpp"
#include "biham/random_states.hpp"
#include "support/test_support.hpp"

using namespace biham;
constexpr double kPi = std::numbers::pi;

TEST_CASE("grid construction and validation") {
  const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
  CHECK(g.spacing() == doctest::Approx(2.0 * kPi / 64).epsilon(1e-15));
  CHECK(g.origin() == 0.0);

  const Grid1D d = make_grid(20.0, 256, Boundary::Decaying);
  CHECK(d.spacing() == doctest::Approx(20.0 / 256).epsilon(1e-15));
  CHECK(d.x(0) == doctest::Approx(-10.0));
  CHECK(d.x(128) == doctest::Approx(0.0));

  CHECK_THROWS_AS(make_grid(1.0, 7, Boundary::Periodic), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-1.0, 64, Boundary::Periodic), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1.0, 4, Boundary::Periodic), std::invalid_argument);
}

TEST_CASE("quadrature") {
  SUBCASE("sin^2 over a period") {
    const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
    const RealField f = RealField::from_fn(g, [](double x) { return std::sin(x) * std::sin(x); });
    CHECK(integrate(f) == doctest::Approx(kPi).epsilon(1e-12));
  }
  SUBCASE("constant integrates to L") {
    const Grid1D g = make_grid(7.5, 32, Boundary::Periodic);
    CHECK(integrate(RealField::constant(g, 1.0)) == doctest::Approx(7.5).epsilon(1e-14));
  }
  SUBCASE("gaussian on a decaying grid vs reference quadrature") {
    const Grid1D g = make_grid(20.0, 256, Boundary::Decaying);
    const RealField f = RealField::from_fn(g, [](double x) { return std::exp(-x * x); });
    const double ref = test::reference_integral([](double x) { return std::exp(-x * x); },
                                                -10.0, 10.0 - 20.0 / 256);
    CHECK(integrate(f) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(std::abs(integrate(f) - std::sqrt(kPi)) < 1e-10);
  }
}

TEST_CASE("derivatives") {
  SUBCASE("periodic spectral") {
    const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
    const RealField s = RealField::from_fn(g, [](double x) { return std::sin(x); });
    const RealField c = RealField::from_fn(g, [](double x) { return std::cos(x); });
    CHECK(linf(derivative(s, 1) - c) < 1e-10);

    const RealField c3 = RealField::from_fn(g, [](double x) { return std::cos(3.0 * x); });
    CHECK(linf(derivative(c3, 2) - (-9.0) * c3) < 1e-9);

    CHECK(linf(derivative(RealField::constant(g, 4.2), 3)) < 1e-12);
    CHECK_THROWS_AS(derivative(s, 5), std::invalid_argument);
    CHECK_THROWS_AS(derivative(s, 0), std::invalid_argument);
  }
  SUBCASE("decaying finite differences") {
    const Grid1D g = make_grid(24.0, 256, Boundary::Decaying);
    const RealField f = RealField::from_fn(g, [](double x) { return std::exp(-0.5 * x * x); });
    const RealField fx = RealField::from_fn(g, [](double x) { return -x * std::exp(-0.5 * x * x); });
    CHECK(linf(derivative(f, 1) - fx) < 1e-9);
    const RealField fxx =
        RealField::from_fn(g, [](double x) { return (x * x - 1.0) * std::exp(-0.5 * x * x); });
    CHECK(linf(derivative(f, 2) - fxx) < 1e-8);
    CHECK(linf(derivative(RealField::constant(g, 1.0), 4)) < 1e-10);
  }
}

TEST_CASE("dminus1") {
  SUBCASE("inverts the derivative of a decaying field") {
    const Grid1D g = make_grid(24.0, 256, Boundary::Decaying);
    const RealField target =
        RealField::from_fn(g, [](double x) { return std::exp(-0.5 * x * x) * std::cos(x); });
    const RealField f = derivative(target, 1);
    CHECK(linf(dminus1(f) - target) < 1e-8);
  }
  SUBCASE("even input gives odd output") {
    const Grid1D g = make_grid(24.0, 256, Boundary::Decaying);
    const RealField f = RealField::from_fn(g, [](double x) { return std::exp(-x * x); });
    const RealField out = dminus1(f);
    const int n = g.points();
    double worst = 0.0;
    // x = 0 sits at index n/2; indices n/2 - k and n/2 + k mirror each other.
    for (int k = 1; k < n / 2; ++k)
      worst = std::max(worst, std::abs(out[n / 2 + k] + out[n / 2 - k]));
    CHECK(worst < 1e-9);
  }
  SUBCASE("normalized gaussian tends to +-1/2 at the ends") {
    const Grid1D g = make_grid(24.0, 256, Boundary::Decaying);
    const double a = 1.0 / std::sqrt(kPi);
    const RealField f = RealField::from_fn(g, [&](double x) { return a * std::exp(-x * x); });
    const RealField out = dminus1(f);
    CHECK(out[g.points() - 1] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(out[0] == doctest::Approx(-0.5).epsilon(1e-8));
  }
  SUBCASE("periodic inverse derivative") {
    const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
    const RealField c = RealField::from_fn(g, [](double x) { return std::cos(x); });
    const RealField s = RealField::from_fn(g, [](double x) { return std::sin(x); });
    CHECK(linf(dminus1(c) - s) < 1e-12);
  }
  SUBCASE("periodic nonzero mean is rejected") {
    const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
    CHECK_THROWS_AS(dminus1(RealField::constant(g, 1.0)), std::runtime_error);
  }
}

TEST_CASE("calculus invariants on random fields") {
  const Grid1D per = make_grid(2.0 * kPi, 128, Boundary::Periodic);
  const Grid1D dec = make_grid(24.0, 256, Boundary::Decaying);

  SUBCASE("integral of a derivative vanishes") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const PhasePair u = random_band_limited(per, seed);
      CHECK(std::abs(integrate(derivative(u.q, 1))) < 1e-10);
      const PhasePair v = random_smooth_decaying(dec, seed);
      CHECK(std::abs(integrate(derivative(v.q, 1))) < 1e-10);
    }
  }
  SUBCASE("derivative of dminus1 is the identity") {
    for (std::uint64_t seed : {4u, 5u}) {
      const PhasePair v = random_smooth_decaying(dec, seed);
      CHECK(linf(derivative(dminus1(v.q), 1) - v.q) < 1e-8);
      const PhasePair u = random_band_limited(per, seed, /*zero_mean=*/true);
      CHECK(linf(derivative(dminus1(u.q), 1) - u.q) < 1e-10);
    }
  }
  SUBCASE("dminus1 is skew under the quadrature inner product") {
    for (std::uint64_t seed : {6u, 7u}) {
      const PhasePair v = random_smooth_decaying(dec, seed);
      const double lhs = inner(dminus1(v.q), v.p);
      const double rhs = -inner(v.q, dminus1(v.p));
      CHECK(std::abs(lhs - rhs) < 1e-8);
      const PhasePair u = random_band_limited(per, seed, /*zero_mean=*/true);
      CHECK(std::abs(inner(dminus1(u.q), u.p) + inner(u.q, dminus1(u.p))) < 1e-10);
    }
  }
}

TEST_CASE("fd_gradient") {
  const Grid1D g = make_grid(2.0 * kPi, 64, Boundary::Periodic);
  const PhasePair u = random_band_limited(g, 42);

  SUBCASE("quadratic functional") {
    auto h0 = [](const PhasePair& v) { return 0.5 * inner(v, v); };
    const PhasePair grad = fd_gradient(h0, u);
    CHECK(linf(grad.q - u.q) < 1e-6);
    CHECK(linf(grad.p - u.p) < 1e-6);
  }
  SUBCASE("linear functional") {
    auto lin = [](const PhasePair& v) { return integrate(v.q); };
    const PhasePair grad = fd_gradient(lin, u);
    CHECK(linf(grad.q - RealField::constant(g, 1.0)) < 1e-8);
    CHECK(linf(grad.p) < 1e-8);
  }
  SUBCASE("second-order convergence in eps") {
    // Quartic functional so the central-difference error has a leading eps^2 term.
    auto quart = [](const PhasePair& v) {
      double acc = 0.0;
      for (int i = 0; i < v.grid().points(); ++i)
        acc += v.grid().weight(i) * std::pow(v.q[i], 4);
      return acc;
    };
    const RealField exact = RealField::from_fn(g, [&](double) { return 0.0; });
    (void)exact;
    auto err_at = [&](double eps) {
      const PhasePair grad = fd_gradient(quart, u, eps);
      RealField analytic = u.q;
      for (int i = 0; i < analytic.size(); ++i) analytic[i] = 4.0 * std::pow(u.q[i], 3);
      return linf(grad.q - analytic);
    };
    const double e1 = err_at(1e-3);
    const double e2 = err_at(5e-4);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
  }
  SUBCASE("rejects nonpositive eps") {
    auto h0 = [](const PhasePair& v) { return 0.5 * inner(v, v); };
    CHECK_THROWS_AS(fd_gradient(h0, u, 0.0), std::invalid_argument);
  }
}
