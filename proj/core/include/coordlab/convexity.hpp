#pragma once

// Sampling refuters for the convexity classes.
//
// A checker draws random configurations and tests the defining inequality
// at each. A passing verdict means no violation larger than margin_tol was
// found, never that the class is proven. Half of the samples use a
// deterministic weight from {0.25, 0.5, 0.75, 0.01, 0.99} in rotation, the
// other half a uniform draw.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "coordlab/domain.hpp"

namespace coordlab {

inline constexpr std::size_t kDefaultSamples = 2000;
inline constexpr std::uint64_t kDefaultSeed = 20101229;

/// A configuration that violates
///   g(wf * first + ws * second) <= wf^s g(first) + ws^s g(second).
/// For one-dimensional checks only the x coordinates are used.
struct Witness {
  Point first;
  Point second;
  double weight_first = 0.0;
  double weight_second = 0.0;
  double s = 1.0;
  double lhs = 0.0;  ///< g at the combined point
  double rhs = 0.0;  ///< weighted right side

  double violation() const noexcept { return lhs - rhs; }
  Point combined() const noexcept {
    return {weight_first * first.x + weight_second * second.x,
            weight_first * first.y + weight_second * second.y};
  }
};

struct ConvexityVerdict {
  ConvexityClass class_checked = ConvexityClass::coord_convex();
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_violation = 0.0;    ///< >= 0
  std::optional<Witness> witness;  ///< the worst violation, present iff violations > 0
  bool pass = true;                ///< violations == 0
};

using UnivariateFn = std::function<double(double)>;

/// s-convexity in the first sense on [lo, hi] (alpha^s + beta^s = 1).
/// Throws InvalidArgument unless 0 <= lo < hi and s in (0,1].
ConvexityVerdict check_sconvex_first(const UnivariateFn& phi, double s, double lo, double hi,
                                     std::size_t n = kDefaultSamples,
                                     std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// s-convexity in the second sense on [lo, hi] (alpha + beta = 1).
ConvexityVerdict check_sconvex_second(const UnivariateFn& phi, double s, double lo, double hi,
                                      std::size_t n = kDefaultSamples,
                                      std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// Convexity of every partial map u -> f(u, y) and v -> f(x, v); n samples per direction.
ConvexityVerdict check_coord_convex(const SurfaceFunction& f, const Rectangle& rect,
                                    std::size_t n = kDefaultSamples,
                                    std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// s-convexity (second sense) of every partial map; n samples per direction.
/// Throws InvalidArgument when s < 1 and rect leaves the first quadrant.
ConvexityVerdict check_coord_sconvex(const SurfaceFunction& f, const Rectangle& rect, double s,
                                     std::size_t n = kDefaultSamples,
                                     std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// Joint convexity: f(l P + (1-l) Q) <= l f(P) + (1-l) f(Q) over arbitrary
/// pairs of points of rect.
ConvexityVerdict check_joint_convex(const SurfaceFunction& f, const Rectangle& rect,
                                    std::size_t n = kDefaultSamples,
                                    std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// Dispatches on the kind of cls. The one-dimensional kinds are rejected
/// with InvalidArgument.
ConvexityVerdict check_class(const SurfaceFunction& f, const Rectangle& rect,
                             const ConvexityClass& cls, std::size_t n = kDefaultSamples,
                             std::uint64_t seed = kDefaultSeed, double margin_tol = 1e-9);

/// Re-evaluates a witness directly against phi / f.
double witness_violation(const UnivariateFn& phi, const Witness& w);
double witness_violation(const SurfaceFunction& f, const Witness& w);

}  // namespace coordlab
