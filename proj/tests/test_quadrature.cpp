#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "coordlab/corpus.hpp"
#include "coordlab/error.hpp"
#include "coordlab/quadrature.hpp"
#include "oracle.hpp"

using namespace coordlab;

namespace {

SurfaceFunction make_fn(SurfaceFn eval, Rectangle valid_on = Rectangle(-4, 4, -4, 4)) {
  SurfaceFunction f;
  f.eval = std::move(eval);
  f.valid_on = valid_on;
  return f;
}

}  // namespace

TEST_CASE("1-D examples") {
  CHECK(integrate_1d([](double t) { return t; }, 0, 1, 1e-12).value ==
        doctest::Approx(0.5).epsilon(1e-15));
  const std::array<double, 1> kink{0.5};
  CHECK(integrate_1d([](double t) { return std::abs(2 * t - 1); }, 0, 1, 1e-12, kink).value ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(integrate_1d([](double t) { return t * t; }, 0, 1, 1e-12).value ==
        doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("kink found without a breakpoint hint") {
  const auto est = integrate_1d([](double t) { return std::abs(2 * t - 1); }, 0, 1, 1e-12);
  CHECK(std::abs(est.value - 0.5) <= 1e-12);
}

TEST_CASE("estimate invariants") {
  const auto est = integrate_1d([](double t) { return std::exp(t); }, -1, 2, 1e-12);
  CHECK(est.err_est >= 0);
  CHECK(est.evals >= 1);
  CHECK(std::abs(est.value - (std::exp(2.0) - std::exp(-1.0))) <= std::max(1e-12, est.err_est));
}

TEST_CASE("polynomial exactness of the base rule") {
  for (int k = 0; k <= 15; ++k) {
    const auto est = integrate_1d([k](double t) { return std::pow(t, k); }, 0, 1, 1e-12);
    CHECK(std::abs(est.value - 1.0 / (k + 1)) <= 1e-13);
  }
}

TEST_CASE("matches the tanh-sinh oracle on smooth and endpoint-singular integrands") {
  const std::function<double(double)> cases[] = {
      [](double t) { return std::cos(3 * t) * std::exp(-t); },
      [](double t) { return std::pow(t, 0.25) * (1 - t); },
      [](double t) { return std::sqrt(t) * std::log1p(t); },
      [](double t) { return 1 / (1 + 25 * t * t); },
  };
  for (const auto& g : cases) {
    const double expect = oracle::integrate(g, 0, 1);
    CHECK(std::abs(integrate_1d(g, 0, 1, 1e-12).value - expect) <= 1e-11);
  }
}

TEST_CASE("2-D examples") {
  const Rectangle unit(0, 1, 0, 1);
  CHECK(integrate_2d([](double, double) { return 1.0; }, unit, 1e-12).value ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(integrate_2d([](double x, double y) { return x * x * y * y; }, unit, 1e-12).value ==
        doctest::Approx(1.0 / 9).epsilon(1e-14));
  const std::array<double, 1> mid{0.5};
  const auto est = integrate_2d(
      [](double x, double y) { return std::abs(2 * x - 1) * std::abs(2 * y - 1); }, unit, 1e-12,
      mid, mid);
  CHECK(est.value == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("product integrands factor") {
  const std::function<double(double)> gs[] = {
      [](double x) { return std::exp(x); },
      [](double x) { return std::sin(2 * x) + 2; },
      [](double x) { return x * x * x - x; },
  };
  const Rectangle rects[] = {Rectangle(0, 1, 0, 1), Rectangle(1, 3, 0, 2),
                             Rectangle(-1, 1, -1, 1)};
  const double tol = 1e-12;
  for (const auto& r : rects) {
    for (const auto& g : gs) {
      for (const auto& h : gs) {
        const auto ex = integrate_1d(g, r.a(), r.b(), tol);
        const auto ey = integrate_1d(h, r.c(), r.d(), tol);
        const auto e2 = integrate_2d([&](double x, double y) { return g(x) * h(y); }, r, tol);
        const double combined = tol * (1 + std::abs(ex.value) + std::abs(ey.value));
        CHECK(std::abs(e2.value - ex.value * ey.value) <= 10 * combined);
      }
    }
  }
}

TEST_CASE("fixed composite rule") {
  CHECK(integrate_1d_fixed([](double t) { return t * t; }, 0, 1, 1) ==
        doctest::Approx(1.0 / 3).epsilon(1e-15));
  const std::array<double, 1> mid{0.5};
  CHECK(integrate_2d_fixed([](double x, double y) { return std::abs(2 * x - 1) * std::abs(2 * y - 1); },
                           Rectangle(0, 1, 0, 1), 2, mid, mid) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_1d_fixed([](double t) { return t; }, 0, 1, 0), InvalidArgument);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(integrate_1d([](double t) { return t; }, 1, 1, 1e-12), InvalidArgument);
  CHECK_THROWS_AS(integrate_1d([](double t) { return t; }, 0, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(integrate_1d([](double) { return std::nan(""); }, 0, 1, 1e-12),
                  NonConvergence);
}

TEST_CASE("non-convergence at the depth limit") {
  // A jump is not resolved below the tolerance within three bisections.
  CHECK_THROWS_AS(
      integrate_1d([](double t) { return t < 1 / 3.0 ? 0.0 : 1.0; }, 0, 1, 1e-14, {}, 3),
      NonConvergence);
}

TEST_CASE("finite-difference mixed partial examples") {
  const auto xy = make_fn([](double x, double y) { return x * y; });
  CHECK(std::abs(mixed_partial_fd(xy, {0.3, 0.7}, 1e-5) - 1) <= 1e-6);
  const auto x2y2 = make_fn([](double x, double y) { return x * x * y * y; });
  CHECK(std::abs(mixed_partial_fd(x2y2, {1, 1}, 1e-5) - 4) <= 1e-5);
  const auto sum = make_fn([](double x, double y) { return x + y; });
  for (Point p : {Point{0, 0}, Point{0.3, -1.2}, Point{2.5, 3}}) {
    CHECK(std::abs(mixed_partial_fd(sum, p, 1e-5)) <= 1e-9);
  }
}

TEST_CASE("finite-difference stencil must stay in valid_on") {
  const auto f = make_fn([](double x, double y) { return x * y; }, Rectangle(0, 1, 0, 1));
  CHECK_THROWS_AS(mixed_partial_fd(f, {0, 0.5}, 1e-5), DomainExceeded);
  CHECK_NOTHROW(mixed_partial_fd(f, {0.5, 0.5}, 1e-5));
  // mixed_value shifts the stencil inward instead of failing.
  CHECK(std::abs(mixed_value(f, {0, 0}) - 1) <= 1e-6);
}

TEST_CASE("finite differences agree with analytic mixed partials") {
  std::mt19937_64 rng(7);
  for (const auto& e : builtin_corpus()) {
    if (!e.fn.has_mixed()) continue;
    const Rectangle v = e.fn.valid_on;
    // Keep the stencil well inside valid_on.
    const double mx = 0.01 * v.width();
    const double my = 0.01 * v.height();
    std::uniform_real_distribution<double> ux(v.a() + mx, v.b() - mx);
    std::uniform_real_distribution<double> uy(v.c() + my, v.d() - my);
    for (int i = 0; i < 25; ++i) {
      const Point p{ux(rng), uy(rng)};
      const double fd = mixed_partial_fd(e.fn, p, 1e-5);
      const double an = e.fn.mixed(p.x, p.y);
      INFO(e.fn.label << " at (" << p.x << ", " << p.y << ")");
      CHECK(std::abs(fd - an) <= 1e-4 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST_CASE("sup norm examples") {
  const Rectangle unit(0, 1, 0, 1);
  auto xy = make_fn([](double x, double y) { return x * y; });
  xy.mixed = [](double, double) { return 1.0; };
  CHECK(sup_norm_mixed(xy, unit, 33) == doctest::Approx(1.0));
  auto x2y2 = make_fn([](double x, double y) { return x * x * y * y; });
  x2y2.mixed = [](double x, double y) { return 4 * x * y; };
  CHECK(std::abs(sup_norm_mixed(x2y2, unit, 33) - 4) <= 1e-6);
  auto sum = make_fn([](double x, double y) { return x + y; });
  sum.mixed = [](double, double) { return 0.0; };
  CHECK(sup_norm_mixed(sum, unit, 33) == 0.0);
  // Without an analytic mixed partial the estimate uses finite differences.
  const auto fd = make_fn([](double x, double y) { return x * x * y * y; });
  CHECK(std::abs(sup_norm_mixed(fd, unit, 33) - 4) <= 1e-4);
}

TEST_CASE("sup norm refinement improves an interior maximum") {
  auto f = make_fn([](double, double) { return 0.0; });
  // Peak of the mixed partial off the coarse grid.
  f.mixed = [](double x, double y) {
    return 1 / (1 + 100 * ((x - 0.513) * (x - 0.513) + (y - 0.377) * (y - 0.377)));
  };
  // The best node of the 5x5 grid gives 0.38; the local refinement reaches 0.86.
  const double est = sup_norm_mixed(f, Rectangle(0, 1, 0, 1), 5);
  CHECK(est <= 1.0);
  CHECK(est > 0.8);
}
