#pragma once

// Integration-by-parts kernels and their closed-form norms and moments.
//
// Two kernel families appear:
//  * the midpoint kernels p(t) = t - a on [a, (a+b)/2], t - b on ((a+b)/2, b]
//    (and q, its mirror on [c, d]);
//  * the weighted kernel k_r(t) = (r + 1) t - 1 on [0, 1] with r in [0, 1],
//    which changes sign at t = 1 / (r + 1).

#include "coordlab/domain.hpp"

namespace coordlab {

/// Midpoint kernel on [a,b]; the left branch is closed at the midpoint.
/// Throws OutOfDomain for t outside [a,b].
double kernel_p(double t, const Rectangle& rect);

/// Midpoint kernel on [c,d]. Throws OutOfDomain for s outside [c,d].
double kernel_q(double s, const Rectangle& rect);

/// (r + 1) t - 1.
double weighted_kernel(double t, double r) noexcept;

/// Integral of |p(t) q(s)| over the rectangle: (b-a)^2 (d-c)^2 / 16.
double kernel_l1_norm(const Rectangle& rect) noexcept;

/// (integral of |p q|^p)^(1/p) = [(b-a)(d-c)]^(1+1/p) / (4 (p+1)^(2/p)).
double kernel_lp_norm(const Rectangle& rect, const HolderExponents& he) noexcept;

/// Integral over [0,1] of |(r+1)t - 1|: (1 + r^2) / (2 (r + 1)).
double weighted_kernel_l1(double r);

/// Integral over [0,1] of |(r+1)t - 1|^p: (1 + r^(p+1)) / ((r + 1)(p + 1)).
double weighted_kernel_lp(double r, const HolderExponents& he);

/// Per-axis factor of the weighted Hoelder bound as it must be for the
/// bound to equal the kernel L^p norm: weighted_kernel_lp(r, p)^(1/p).
double holder_axis_factor(double r, const HolderExponents& he);

/// The per-axis factor as it is commonly printed,
/// (1 + r^((p+1)/p)) / ((r+1)(p+1))^(1/p). Agrees with holder_axis_factor
/// only at r = 0; kept for side-by-side reporting.
double holder_axis_factor_printed(double r, const HolderExponents& he);

/// s-moments of the weighted kernel:
/// near = integral of |(r+1)t - 1| t^s, far = integral of |(r+1)t - 1| (1-t)^s.
struct SMoments {
  double near = 0.0;
  double far = 0.0;
};

SMoments weighted_s_moments(double r, double s);

/// The "near" constant r(s+1) + 2 (1/(r+1))^(s+1) - 1, so that
/// near moment = value / ((s+1)(s+2)).
double near_constant(double r, double s);

/// The "far" constant s + 1 + 2 (r+1) (r/(r+1))^(s+2) - r; the power term is 0 at r = 0.
double far_constant(double r, double s);

/// M, N: far constants for r1, r2. K, L: near constants for r1, r2.
struct BoundConstants {
  double M = 0.0;
  double N = 0.0;
  double L = 0.0;
  double K = 0.0;
};

/// Throws InvalidArgument unless s in (0,1].
BoundConstants bound_constants(double s, const WeightPair& w);

}  // namespace coordlab
