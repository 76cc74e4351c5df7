#pragma once

// Adaptive 1-D and 2-D quadrature, finite-difference mixed partials and a
// grid estimate of the mixed partial's sup norm.
//
// The 1-D rule is the 7-point Gauss / 15-point Kronrod pair with |K15 - G7|
// as the per-interval error estimate. Intervals are bisected at their
// midpoints, largest estimate first, until the estimates sum to at most
// the tolerance. An interval whose estimate is at the rounding floor of
// the rule is not split further. Endpoint singularities of the t^s kind
// converge because the budget is global rather than proportional to length.

#include <cstddef>
#include <functional>
#include <span>

#include "coordlab/domain.hpp"

namespace coordlab {

struct QuadratureEstimate {
  double value = 0.0;
  double err_est = 0.0;   ///< absolute, >= 0
  std::size_t evals = 0;  ///< integrand evaluations, >= 1
};

inline constexpr int kDefaultMaxDepth = 40;

/// Integrates g over [lo, hi] to absolute tolerance tol.
///
/// Breakpoints strictly inside (lo, hi) pre-split the interval; pass the
/// known kinks of piecewise integrands there. Throws InvalidArgument when
/// lo >= hi or tol <= 0 and NonConvergence when an interval past the depth
/// limit would need splitting or the integrand returns a non-finite value.
QuadratureEstimate integrate_1d(const std::function<double(double)>& g, double lo, double hi,
                                double tol, std::span<const double> breakpoints = {},
                                int max_depth = kDefaultMaxDepth);

/// Iterated integral of g over rect. Half of tol goes to the outer x
/// integral, the other half is spread over the inner y integrals.
QuadratureEstimate integrate_2d(const std::function<double(double, double)>& g,
                                const Rectangle& rect, double tol,
                                std::span<const double> x_breaks = {},
                                std::span<const double> y_breaks = {},
                                int max_depth = kDefaultMaxDepth);

/// Composite 15-point Kronrod rule on `panels` equal panels between
/// consecutive breakpoints, without error control. For integrands whose
/// noise (finite-difference mixed partials) defeats adaptive refinement.
double integrate_1d_fixed(const std::function<double(double)>& g, double lo, double hi,
                          std::size_t panels, std::span<const double> breakpoints = {});

/// Iterated product of integrate_1d_fixed over rect.
double integrate_2d_fixed(const std::function<double(double, double)>& g, const Rectangle& rect,
                          std::size_t panels, std::span<const double> x_breaks = {},
                          std::span<const double> y_breaks = {});

/// Central cross difference
/// [f(x+h,y+h) - f(x+h,y-h) - f(x-h,y+h) + f(x-h,y-h)] / (4h^2).
/// Throws DomainExceeded when a stencil point leaves f.valid_on.
double mixed_partial_fd(const SurfaceFunction& f, Point at, double h);

/// As above with the default step fd_step * max(1, |x|, |y|).
double mixed_partial_fd(const SurfaceFunction& f, Point at, const Tolerances& tol = {});

/// The mixed partial at `at`: analytic when available, otherwise the
/// central cross difference with its centre pushed inward just enough for
/// the stencil to fit inside valid_on (first-order accurate at edges).
double mixed_value(const SurfaceFunction& f, Point at, const Tolerances& tol = {});

/// Estimate of sup |d2f/dxdy| over rect: the maximum over a uniform
/// grid_n x grid_n grid, refined once at three times the resolution around
/// the arg-max node. A lower bound on the true sup.
double sup_norm_mixed(const SurfaceFunction& f, const Rectangle& rect, std::size_t grid_n,
                      const Tolerances& tol = {});

}  // namespace coordlab
