#include "coordlab/identities.hpp"

#include <array>
#include <cmath>

#include "coordlab/error.hpp"
#include "coordlab/kernels.hpp"
#include "coordlab/quadrature.hpp"

namespace coordlab {

namespace {

// Finite-difference mixed partials carry rounding noise far above
// quad_tol, so their kernel integrals use a fixed composite rule.
constexpr std::size_t kFdPanels = 4;

}  // namespace

double SurfaceMoments::midpoint_deviation() const noexcept {
  return f_mid - mean_mid_y - mean_mid_x + mean;
}

double SurfaceMoments::weighted_corner_deviation(const WeightPair& w) const noexcept {
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double corners = (f_ac + r2 * f_ad + r1 * f_bc + r1 * r2 * f_bd) / ((r1 + 1.0) * (r2 + 1.0));
  return corners - r1 / (r1 + 1.0) * mean_right - 1.0 / (r1 + 1.0) * mean_left -
         r2 / (r2 + 1.0) * mean_top - 1.0 / (r2 + 1.0) * mean_bottom + mean;
}

double SurfaceMoments::weighted_corner_deviation_printed(const WeightPair& w) const noexcept {
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double corners = (f_ac + r2 * f_ad + r1 * f_bc + r1 * r2 * f_bd) / ((r1 + 1.0) * (r2 + 1.0));
  return corners - r2 / (r2 + 1.0) * mean_right - 1.0 / (r1 + 1.0) * mean_left -
         r2 / (r2 + 1.0) * mean_top - 1.0 / (r2 + 1.0) * mean_bottom + mean;
}

double SurfaceMoments::trapezoid_deviation() const noexcept {
  const double edges = 0.5 * (mean_bottom + mean_top + mean_left + mean_right);
  return corner_average() - edges + mean;
}

SurfaceMoments compute_moments(const SurfaceFunction& f, const Rectangle& rect,
                               const Tolerances& tol) {
  SurfaceMoments m;
  const double w = rect.width();
  const double h = rect.height();

  m.f_mid = f(rect.mid_x(), rect.mid_y());
  m.f_ac = f(rect.a(), rect.c());
  m.f_bc = f(rect.b(), rect.c());
  m.f_ad = f(rect.a(), rect.d());
  m.f_bd = f(rect.b(), rect.d());

  auto mean_x = [&](double y) {
    const auto est = integrate_1d([&](double x) { return f(x, y); }, rect.a(), rect.b(), tol.quad_tol);
    m.err_est += est.err_est / w;
    return est.value / w;
  };
  auto mean_y = [&](double x) {
    const auto est = integrate_1d([&](double y) { return f(x, y); }, rect.c(), rect.d(), tol.quad_tol);
    m.err_est += est.err_est / h;
    return est.value / h;
  };

  m.mean_mid_x = mean_x(rect.mid_y());
  m.mean_mid_y = mean_y(rect.mid_x());
  m.mean_bottom = mean_x(rect.c());
  m.mean_top = mean_x(rect.d());
  m.mean_left = mean_y(rect.a());
  m.mean_right = mean_y(rect.b());

  const auto dbl = integrate_2d([&](double x, double y) { return f(x, y); }, rect, tol.quad_tol);
  m.mean = dbl.value / rect.area();
  m.err_est += dbl.err_est / rect.area();
  return m;
}

double midpoint_deviation(const SurfaceFunction& f, const Rectangle& rect, const Tolerances& tol) {
  return compute_moments(f, rect, tol).midpoint_deviation();
}

double midpoint_kernel_integral(const SurfaceFunction& f, const Rectangle& rect,
                                const Tolerances& tol) {
  const std::array<double, 1> xb{rect.mid_x()};
  const std::array<double, 1> yb{rect.mid_y()};
  auto integrand = [&](double t, double s) {
    return kernel_p(t, rect) * kernel_q(s, rect) * mixed_value(f, {t, s}, tol);
  };
  const double area = rect.area();
  if (!f.has_mixed()) return integrate_2d_fixed(integrand, rect, kFdPanels, xb, yb) / area;
  return integrate_2d(integrand, rect, tol.quad_tol * area, xb, yb).value / area;
}

double weighted_corner_deviation(const SurfaceFunction& f, const Rectangle& rect,
                                 const WeightPair& w, const Tolerances& tol) {
  return compute_moments(f, rect, tol).weighted_corner_deviation(w);
}

double weighted_kernel_integral(const SurfaceFunction& f, const Rectangle& rect,
                                const WeightPair& w, const Tolerances& tol) {
  // With t = (x-a)/(b-a), l = (y-c)/(d-c) the area factor cancels the
  // Jacobian, leaving a plain integral over the rectangle.
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double scale = (r1 + 1.0) * (r2 + 1.0);
  const std::array<double, 1> xb{rect.a() + rect.width() / (r1 + 1.0)};
  const std::array<double, 1> yb{rect.c() + rect.height() / (r2 + 1.0)};
  auto integrand = [&](double x, double y) {
    const double t = (x - rect.a()) / rect.width();
    const double l = (y - rect.c()) / rect.height();
    return weighted_kernel(t, r1) * weighted_kernel(l, r2) * mixed_value(f, {x, y}, tol);
  };
  if (!f.has_mixed()) return integrate_2d_fixed(integrand, rect, kFdPanels, xb, yb) / scale;
  return integrate_2d(integrand, rect, tol.quad_tol * scale, xb, yb).value / scale;
}

IdentityResidual verify_identity(IdentityKind kind, const SurfaceFunction& f,
                                 const Rectangle& rect, std::optional<WeightPair> w,
                                 const Tolerances& tol) {
  IdentityResidual out;
  switch (kind) {
    case IdentityKind::Midpoint:
      out.lhs = midpoint_deviation(f, rect, tol);
      out.rhs = midpoint_kernel_integral(f, rect, tol);
      break;
    case IdentityKind::WeightedCorner:
      if (!w) throw InvalidArgument("weighted corner identity requires weights");
      out.lhs = weighted_corner_deviation(f, rect, *w, tol);
      out.rhs = weighted_kernel_integral(f, rect, *w, tol);
      break;
  }
  out.residual = std::abs(out.lhs - out.rhs);
  out.budget = tol.identity_tol;
  out.pass = out.residual <= out.budget;
  return out;
}

}  // namespace coordlab
