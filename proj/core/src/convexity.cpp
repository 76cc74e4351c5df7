#include "coordlab/convexity.hpp"

#include <array>
#include <cmath>
#include <random>

#include "coordlab/error.hpp"

namespace coordlab {

namespace {

constexpr std::array<double, 5> kFixedWeights = {0.25, 0.5, 0.75, 0.01, 0.99};

// Uniform draws built from the raw 64-bit engine output so that sample
// sequences do not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Weight in (0,1) for sample i.
  double weight(std::size_t i) {
    if (i % 2 == 1) return kFixedWeights[(i / 2) % kFixedWeights.size()];
    double w = unit();
    while (w <= 0.0) w = unit();
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

class Tally {
 public:
  Tally(ConvexityClass cls, double margin) : margin_(margin) { verdict_.class_checked = cls; }

  void record(const Witness& w) {
    ++verdict_.samples;
    const double v = w.violation();
    if (v > margin_) {
      ++verdict_.violations;
      if (!verdict_.witness || v > verdict_.worst_violation) {
        verdict_.worst_violation = v;
        verdict_.witness = w;
      }
    }
  }

  ConvexityVerdict finish() {
    verdict_.pass = verdict_.violations == 0;
    return verdict_;
  }

 private:
  double margin_;
  ConvexityVerdict verdict_;
};

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in (0,1]");
}

Witness eval_witness(const SurfaceFunction& f, Point p, Point q, double wp, double wq, double s) {
  Witness w{p, q, wp, wq, s, 0.0, 0.0};
  const Point m = w.combined();
  w.lhs = f(m.x, m.y);
  w.rhs = std::pow(wp, s) * f(p.x, p.y) + std::pow(wq, s) * f(q.x, q.y);
  return w;
}

Witness eval_witness(const UnivariateFn& phi, double x, double y, double wx, double wy, double s) {
  Witness w{{x, 0.0}, {y, 0.0}, wx, wy, s, 0.0, 0.0};
  w.lhs = phi(wx * x + wy * y);
  w.rhs = std::pow(wx, s) * phi(x) + std::pow(wy, s) * phi(y);
  return w;
}

ConvexityVerdict coordinate_check(const SurfaceFunction& f, const Rectangle& rect, double s,
                                  ConvexityClass cls, std::size_t n, std::uint64_t seed,
                                  double margin) {
  Sampler rng(seed);
  Tally tally(cls, margin);
  for (std::size_t i = 0; i < n; ++i) {
    // Partial map in x at a fixed ordinate.
    const double y = rng.uniform(rect.c(), rect.d());
    const double u1 = rng.uniform(rect.a(), rect.b());
    const double u2 = rng.uniform(rect.a(), rect.b());
    const double lam = rng.weight(i);
    tally.record(eval_witness(f, {u1, y}, {u2, y}, lam, 1.0 - lam, s));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(rect.a(), rect.b());
    const double v1 = rng.uniform(rect.c(), rect.d());
    const double v2 = rng.uniform(rect.c(), rect.d());
    const double lam = rng.weight(i);
    tally.record(eval_witness(f, {x, v1}, {x, v2}, lam, 1.0 - lam, s));
  }
  return tally.finish();
}

}  // namespace

ConvexityVerdict check_sconvex_first(const UnivariateFn& phi, double s, double lo, double hi,
                                     std::size_t n, std::uint64_t seed, double margin_tol) {
  require_s(s);
  if (!(lo >= 0.0 && lo < hi)) throw InvalidArgument("first-sense check needs 0 <= lo < hi");
  Sampler rng(seed);
  Tally tally(ConvexityClass::sconvex_first(s), margin_tol);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(lo, hi);
    const double y = rng.uniform(lo, hi);
    const double alpha = rng.weight(i);
    const double beta = std::pow(1.0 - std::pow(alpha, s), 1.0 / s);
    tally.record(eval_witness(phi, x, y, alpha, beta, s));
  }
  return tally.finish();
}

ConvexityVerdict check_sconvex_second(const UnivariateFn& phi, double s, double lo, double hi,
                                      std::size_t n, std::uint64_t seed, double margin_tol) {
  require_s(s);
  if (!(lo >= 0.0 && lo < hi)) throw InvalidArgument("second-sense check needs 0 <= lo < hi");
  Sampler rng(seed);
  Tally tally(ConvexityClass::sconvex_second(s), margin_tol);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(lo, hi);
    const double y = rng.uniform(lo, hi);
    const double alpha = rng.weight(i);
    tally.record(eval_witness(phi, x, y, alpha, 1.0 - alpha, s));
  }
  return tally.finish();
}

ConvexityVerdict check_coord_convex(const SurfaceFunction& f, const Rectangle& rect,
                                    std::size_t n, std::uint64_t seed, double margin_tol) {
  return coordinate_check(f, rect, 1.0, ConvexityClass::coord_convex(), n, seed, margin_tol);
}

ConvexityVerdict check_coord_sconvex(const SurfaceFunction& f, const Rectangle& rect, double s,
                                     std::size_t n, std::uint64_t seed, double margin_tol) {
  require_s(s);
  if (s < 1.0 && !rect.nonnegative()) {
    throw InvalidArgument("s-convexity with s < 1 needs a rectangle in [0,inf)^2, got " +
                          rect.label());
  }
  return coordinate_check(f, rect, s, ConvexityClass::coord_sconvex(s), n, seed, margin_tol);
}

ConvexityVerdict check_joint_convex(const SurfaceFunction& f, const Rectangle& rect,
                                    std::size_t n, std::uint64_t seed, double margin_tol) {
  Sampler rng(seed);
  Tally tally(ConvexityClass::joint_convex(), margin_tol);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p{rng.uniform(rect.a(), rect.b()), rng.uniform(rect.c(), rect.d())};
    const Point q{rng.uniform(rect.a(), rect.b()), rng.uniform(rect.c(), rect.d())};
    const double lam = rng.weight(i);
    tally.record(eval_witness(f, p, q, lam, 1.0 - lam, 1.0));
  }
  return tally.finish();
}

ConvexityVerdict check_class(const SurfaceFunction& f, const Rectangle& rect,
                             const ConvexityClass& cls, std::size_t n, std::uint64_t seed,
                             double margin_tol) {
  switch (cls.kind()) {
    case ConvexityClass::Kind::CoordConvex:
      return check_coord_convex(f, rect, n, seed, margin_tol);
    case ConvexityClass::Kind::CoordSConvex:
      return check_coord_sconvex(f, rect, cls.s(), n, seed, margin_tol);
    case ConvexityClass::Kind::JointConvex:
      return check_joint_convex(f, rect, n, seed, margin_tol);
    case ConvexityClass::Kind::SConvexFirst:
    case ConvexityClass::Kind::SConvexSecond:
      break;
  }
  throw InvalidArgument(cls.name() + " is a one-dimensional class");
}

double witness_violation(const UnivariateFn& phi, const Witness& w) {
  return eval_witness(phi, w.first.x, w.second.x, w.weight_first, w.weight_second, w.s)
      .violation();
}

double witness_violation(const SurfaceFunction& f, const Witness& w) {
  return eval_witness(f, w.first, w.second, w.weight_first, w.weight_second, w.s).violation();
}

}  // namespace coordlab
