#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "coordlab/convexity.hpp"
#include "coordlab/corpus.hpp"
#include "coordlab/error.hpp"
#include "coordlab/identities.hpp"
#include "coordlab/quadrature.hpp"

using namespace coordlab;

TEST_CASE("corpus contents") {
  const auto& corpus = builtin_corpus();
  const std::vector<std::string> labels = {"affine",   "bilinear", "x2y2",      "exp_sum",
                                           "sum_sq",   "pow_s0.25", "pow_s0.5", "pow_s0.75",
                                           "cubic_mix", "neg_x2y2"};
  REQUIRE(corpus.size() == labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CHECK(corpus[i].fn.label == labels[i]);
    CHECK(corpus[i].fn.has_mixed());
    CHECK_FALSE(corpus[i].default_rects.empty());
    for (const auto& r : corpus[i].default_rects) CHECK(corpus[i].fn.valid_on.contains(r));
  }
  const auto& xy = find_entry("bilinear").fn;
  CHECK(xy.claims(ConvexityClass::coord_convex()));
  CHECK_FALSE(xy.claims(ConvexityClass::joint_convex()));
  CHECK(find_entry("neg_x2y2").fn.classes.empty());
  CHECK(find_entry("pow_s0.5").fn.claims(ConvexityClass::coord_sconvex(0.5)));
  CHECK_THROWS_AS(find_entry("nope"), InvalidArgument);
}

TEST_CASE("rectangle suite") {
  const auto suite = rect_suite();
  REQUIRE(suite.size() == 5);
  CHECK(suite[0] == Rectangle(0, 1, 0, 1));
  for (const auto& r : suite) {
    CHECK(r.a() < r.b());
    CHECK(r.c() < r.d());
  }
  std::set<std::string> names;
  for (const auto& nr : named_rect_suite()) names.insert(nr.name);
  CHECK(names.size() == 5);
  // The s < 1 powers are only used away from the axes, where the mixed partial is bounded.
  for (const char* label : {"pow_s0.25", "pow_s0.5", "pow_s0.75"}) {
    const auto& e = find_entry(label);
    for (const auto& r : e.default_rects) {
      CHECK(r.a() >= 0.05);
      CHECK(r.c() >= 0.05);
      CHECK(std::isfinite(e.fn.mixed(r.a(), r.c())));
    }
  }
}

TEST_CASE("worked values of x2y2") {
  const auto& f = find_entry("x2y2").fn;
  const Rectangle unit(0, 1, 0, 1);
  CHECK(std::abs(midpoint_deviation(f, unit) - 1.0 / 144) <= 1e-12);
  CHECK(std::abs(weighted_corner_deviation(f, unit, WeightPair(1, 1)) - 1.0 / 36) <= 1e-12);
  CHECK(std::abs(weighted_corner_deviation(f, unit, WeightPair(0, 0)) - 1.0 / 9) <= 1e-12);
}

TEST_CASE("self-test: claims hold and mixed partials match finite differences") {
  std::mt19937_64 rng(20101229);
  for (const auto& e : builtin_corpus()) {
    for (const auto& r : e.default_rects) {
      for (const auto& cls : e.fn.classes) {
        INFO(e.fn.label << " " << cls.name() << " on " << r.label());
        CHECK(check_class(e.fn, r, cls).pass);
      }
    }
    const Rectangle v = e.fn.valid_on;
    std::uniform_real_distribution<double> ux(v.a() + 0.01 * v.width(), v.b() - 0.01 * v.width());
    std::uniform_real_distribution<double> uy(v.c() + 0.01 * v.height(),
                                              v.d() - 0.01 * v.height());
    for (int i = 0; i < 25; ++i) {
      const Point p{ux(rng), uy(rng)};
      const double an = e.fn.mixed(p.x, p.y);
      CHECK(std::abs(mixed_partial_fd(e.fn, p, 1e-5) - an) <= 1e-4 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST_CASE("negative control is caught") {
  const auto& e = find_entry("neg_x2y2");
  CHECK_FALSE(check_coord_convex(e.fn, Rectangle(0, 1, 0, 1)).pass);
}

TEST_CASE("every entry with a nonzero mixed partial has a non-vacuous rectangle") {
  // The midpoint deviation integrates the mixed partial against p(t) q(s),
  // which annihilates mixed partials of the form g(x) + h(y). The
  // weighted deviation at r = (0, 0) does not.
  for (const auto& e : builtin_corpus()) {
    if (e.fn.label == "affine") continue;
    double best = 0;
    for (const auto& r : e.default_rects) {
      best = std::max(best, std::abs(weighted_corner_deviation(e.fn, r, WeightPair(0, 0))));
    }
    INFO(e.fn.label);
    CHECK(best > 1e-6);
  }
  for (const char* label : {"x2y2", "exp_sum", "pow_s0.5", "neg_x2y2"}) {
    const auto& e = find_entry(label);
    double best = 0;
    for (const auto& r : e.default_rects) best = std::max(best, std::abs(midpoint_deviation(e.fn, r)));
    INFO(label);
    CHECK(best > 1e-6);
  }
  for (const char* label : {"bilinear", "sum_sq", "cubic_mix"}) {
    for (const auto& r : find_entry(label).default_rects) {
      CHECK(std::abs(midpoint_deviation(find_entry(label).fn, r)) <= 1e-12);
    }
  }
}

TEST_CASE("affine entry is annihilated") {
  const auto& f = find_entry("affine").fn;
  for (const auto& r : find_entry("affine").default_rects) {
    CHECK(std::abs(midpoint_deviation(f, r)) <= 1e-9);
    CHECK(std::abs(weighted_corner_deviation(f, r, WeightPair(0.3, 0.7))) <= 1e-9);
  }
}

TEST_CASE("manifest parsing") {
  std::istringstream in("# selection\nx2y2\n\n  bilinear  # trailing comment\n\t\naffine\n");
  const auto labels = read_manifest(in);
  REQUIRE(labels.size() == 3);
  CHECK(labels[0] == "x2y2");
  CHECK(labels[1] == "bilinear");
  CHECK(labels[2] == "affine");
}

TEST_CASE("without_mixed") {
  const auto f = without_mixed(find_entry("exp_sum").fn);
  CHECK_FALSE(f.has_mixed());
  CHECK(f.label == "exp_sum_fd");
  CHECK(f(0.5, 0.5) == std::exp(1.0));
  CHECK(f.classes == find_entry("exp_sum").fn.classes);
}
