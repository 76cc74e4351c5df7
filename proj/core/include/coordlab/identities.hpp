#pragma once

// Deviation functionals and the kernel integrals they equal.
//
// Every deviation functional is a fixed linear combination of a handful
// of point values and integral means of f. SurfaceMoments computes those
// once per (function, rectangle) so that sweeps over weights do not repeat
// the quadrature.

#include <optional>

#include "coordlab/domain.hpp"

namespace coordlab {

/// Point values and integral means of f over a rectangle.
struct SurfaceMoments {
  double f_mid = 0.0;                          ///< f((a+b)/2, (c+d)/2)
  double f_ac = 0.0, f_bc = 0.0, f_ad = 0.0, f_bd = 0.0;
  double mean_mid_x = 0.0;  ///< (1/(b-a)) int f(x, (c+d)/2) dx
  double mean_mid_y = 0.0;  ///< (1/(d-c)) int f((a+b)/2, y) dy
  double mean_bottom = 0.0; ///< (1/(b-a)) int f(x, c) dx
  double mean_top = 0.0;    ///< (1/(b-a)) int f(x, d) dx
  double mean_left = 0.0;   ///< (1/(d-c)) int f(a, y) dy
  double mean_right = 0.0;  ///< (1/(d-c)) int f(b, y) dy
  double mean = 0.0;        ///< (1/area) double integral of f
  double err_est = 0.0;     ///< sum of the quadrature error estimates (absolute, on the means)

  double corner_average() const noexcept { return 0.25 * (f_ac + f_bc + f_ad + f_bd); }
  double boundary_mean() const noexcept {
    return 0.25 * (mean_bottom + mean_top + mean_left + mean_right);
  }

  double midpoint_deviation() const noexcept;
  /// Weighted corner deviation with the coefficients obtained by integrating
  /// the weighted kernel by parts: r1/(r1+1) on the right edge mean,
  /// 1/(r1+1) on the left, r2/(r2+1) on the top, 1/(r2+1) on the bottom.
  double weighted_corner_deviation(const WeightPair& w) const noexcept;
  /// The same functional with the commonly printed edge coefficients
  /// (r2/(r2+1) on the right edge mean). Coincides with the above when r1 = r2.
  double weighted_corner_deviation_printed(const WeightPair& w) const noexcept;
  double trapezoid_deviation() const noexcept;
};

SurfaceMoments compute_moments(const SurfaceFunction& f, const Rectangle& rect,
                               const Tolerances& tol = {});

/// f(mid) - mean over the vertical midline - mean over the horizontal
/// midline + mean over the rectangle.
double midpoint_deviation(const SurfaceFunction& f, const Rectangle& rect,
                          const Tolerances& tol = {});

/// (1/area) times the integral of p(t) q(s) d2f/dtds(t, s) over the
/// rectangle, pre-split at the midlines. Without an analytic mixed partial
/// the finite-difference integrand is integrated by a fixed composite rule.
double midpoint_kernel_integral(const SurfaceFunction& f, const Rectangle& rect,
                                const Tolerances& tol = {});

double weighted_corner_deviation(const SurfaceFunction& f, const Rectangle& rect,
                                 const WeightPair& w, const Tolerances& tol = {});

/// area / ((r1+1)(r2+1)) times the integral over the unit square of
/// k_r1(t) k_r2(l) d2f/dxdy(a + t(b-a), c + l(d-c)), pre-split at 1/(r+1).
double weighted_kernel_integral(const SurfaceFunction& f, const Rectangle& rect,
                                const WeightPair& w, const Tolerances& tol = {});

enum class IdentityKind {
  Midpoint,        ///< midpoint deviation vs. midpoint kernel integral
  WeightedCorner,  ///< weighted corner deviation vs. weighted kernel integral
};

struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  ///< |lhs - rhs|
  double budget = 0.0;
  bool pass = false;      ///< residual <= budget
};

/// Throws InvalidArgument when kind is WeightedCorner and w is absent.
IdentityResidual verify_identity(IdentityKind kind, const SurfaceFunction& f,
                                 const Rectangle& rect, std::optional<WeightPair> w,
                                 const Tolerances& tol = {});

}  // namespace coordlab
