#include "coordlab/kernels.hpp"

#include <cmath>
#include <string>

#include "coordlab/error.hpp"

namespace coordlab {

namespace {

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in (0,1]");
}

void require_r(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgument("weight r must lie in [0,1]");
}

}  // namespace

double kernel_p(double t, const Rectangle& rect) {
  if (!(t >= rect.a() && t <= rect.b())) {
    throw OutOfDomain("kernel_p: t = " + std::to_string(t) + " outside [a,b]");
  }
  return t <= rect.mid_x() ? t - rect.a() : t - rect.b();
}

double kernel_q(double s, const Rectangle& rect) {
  if (!(s >= rect.c() && s <= rect.d())) {
    throw OutOfDomain("kernel_q: s = " + std::to_string(s) + " outside [c,d]");
  }
  return s <= rect.mid_y() ? s - rect.c() : s - rect.d();
}

double weighted_kernel(double t, double r) noexcept { return (r + 1.0) * t - 1.0; }

double kernel_l1_norm(const Rectangle& rect) noexcept {
  const double w = rect.width();
  const double h = rect.height();
  return w * w * h * h / 16.0;
}

double kernel_lp_norm(const Rectangle& rect, const HolderExponents& he) noexcept {
  const double p = he.p();
  return std::pow(rect.area(), 1.0 + 1.0 / p) / (4.0 * std::pow(p + 1.0, 2.0 / p));
}

double weighted_kernel_l1(double r) {
  require_r(r);
  return (1.0 + r * r) / (2.0 * (r + 1.0));
}

double weighted_kernel_lp(double r, const HolderExponents& he) {
  require_r(r);
  const double p = he.p();
  return (1.0 + std::pow(r, p + 1.0)) / ((r + 1.0) * (p + 1.0));
}

double holder_axis_factor(double r, const HolderExponents& he) {
  return std::pow(weighted_kernel_lp(r, he), 1.0 / he.p());
}

double holder_axis_factor_printed(double r, const HolderExponents& he) {
  require_r(r);
  const double p = he.p();
  return (1.0 + std::pow(r, (p + 1.0) / p)) / std::pow((r + 1.0) * (p + 1.0), 1.0 / p);
}

double near_constant(double r, double s) {
  require_r(r);
  require_s(s);
  return r * (s + 1.0) + 2.0 * std::pow(1.0 / (r + 1.0), s + 1.0) - 1.0;
}

double far_constant(double r, double s) {
  require_r(r);
  require_s(s);
  const double power = r == 0.0 ? 0.0 : std::pow(r / (r + 1.0), s + 2.0);
  return s + 1.0 + 2.0 * (r + 1.0) * power - r;
}

SMoments weighted_s_moments(double r, double s) {
  const double denom = (s + 1.0) * (s + 2.0);
  return {near_constant(r, s) / denom, far_constant(r, s) / denom};
}

BoundConstants bound_constants(double s, const WeightPair& w) {
  BoundConstants c{far_constant(w.r1(), s), far_constant(w.r2(), s), near_constant(w.r2(), s),
                   near_constant(w.r1(), s)};
  if (c.M < 0.0 || c.N < 0.0 || c.L < 0.0 || c.K < 0.0) {
    throw Error("bound constants must be nonnegative");
  }
  return c;
}

}  // namespace coordlab
