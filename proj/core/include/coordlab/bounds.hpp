#pragma once

// Inequality bounds as (deviation functional, right-hand side) pairs.
//
// Every bound is evaluated into an InequalityReport carrying the deviation
// (lhs), the bound (rhs), the margin rhs - |lhs| and whether the bound's
// hypothesis was confirmed by the convexity checkers. Hypotheses concern
// |d2f/dxdy|^q, never f itself, so the checkers run on that function.
//
// BoundEvaluator caches everything that depends only on (f, rect): the
// point values and means of f, the corner values of the mixed partial,
// its sup norm and the hypothesis verdicts. The free functions build a
// throwaway evaluator.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coordlab/convexity.hpp"
#include "coordlab/domain.hpp"
#include "coordlab/identities.hpp"

namespace coordlab {

/// Parameters a report was evaluated at; absent ones do not apply.
struct BoundParams {
  std::optional<double> s;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> r1;
  std::optional<double> r2;
  std::optional<double> x;
  std::optional<double> y;
  std::optional<OstrowskiAnchors> anchors;
};

struct InequalityReport {
  std::string bound_id;
  BoundParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  ///< rhs - |lhs|
  double ratio = 0.0;   ///< |lhs| / rhs, 0 when rhs = 0
  bool holds = false;   ///< margin >= -margin_tol
  bool hypothesis_ok = false;
  bool fd_fallback = false;  ///< mixed partial came from finite differences
  /// The right-hand side as commonly printed, where that differs in form.
  std::optional<double> printed_rhs;
};

/// Fills margin, ratio and holds from lhs and rhs.
InequalityReport finish_report(InequalityReport report, double margin_tol);

/// The five Hermite-Hadamard values in increasing order of the chain:
/// f(mid), mean of the two midline means, mean over the rectangle, mean of
/// the four edge means, corner average.
struct HadamardChain {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
  double v4 = 0.0;
  double v5 = 0.0;
  bool hypothesis_claimed = false;  ///< f claims CoordConvex

  std::array<double, 5> values() const noexcept { return {v1, v2, v3, v4, v5}; }
  /// v1 <= v2 <= ... <= v5 up to tol.
  bool nondecreasing(double tol) const noexcept;
};

HadamardChain hadamard_chain(const SurfaceFunction& f, const Rectangle& rect,
                             const Tolerances& tol = {});

enum class SupVariant { L1, Holder };
enum class TrapezoidVariant { Convex, Holder, PowerMean };
enum class CorollaryParent { WeightedSConvex, WeightedHolder, WeightedPowerMean };

/// Sampling settings of the hypothesis checks.
struct GateOptions {
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::size_t sup_grid = 33;  ///< grid_n of the sup-norm estimate
};

class BoundEvaluator {
 public:
  BoundEvaluator(SurfaceFunction f, Rectangle rect, Tolerances tol = {}, GateOptions gate = {});

  const SurfaceFunction& function() const noexcept { return f_; }
  const Rectangle& rect() const noexcept { return rect_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  const SurfaceMoments& moments() const noexcept { return moments_; }

  /// |d2f/dxdy| at (a,c), (b,c), (a,d), (b,d).
  const std::array<double, 4>& corner_mixed() const noexcept { return corner_; }
  /// Grid estimate of sup |d2f/dxdy|, computed on first use.
  double sup_norm() const;
  /// Whether |d2f/dxdy|^q passes the checker for cls on the rectangle.
  /// A rectangle outside the first quadrant fails every s < 1 class.
  bool hypothesis(const ConvexityClass& cls, double q) const;

  InequalityReport midpoint_corner() const;
  InequalityReport midpoint_holder(const HolderExponents& he) const;
  InequalityReport midpoint_power_mean(double q) const;
  InequalityReport midpoint_sup(SupVariant variant, std::optional<HolderExponents> he = {}) const;

  InequalityReport weighted_sconvex(double s, const WeightPair& w) const;
  InequalityReport weighted_holder(double s, const HolderExponents& he, const WeightPair& w) const;
  InequalityReport weighted_power_mean(double s, double q, const WeightPair& w) const;
  /// Parent bound at r1 = r2 = r with r in {0, 1}; printed_rhs carries the
  /// corollary as commonly printed.
  InequalityReport corollary(CorollaryParent parent, double r, double s,
                             std::optional<HolderExponents> he = {},
                             std::optional<double> q = {}) const;

  /// Trapezoid deviation against the convex, Hoelder (param = p) or power
  /// mean (param = q) right side.
  InequalityReport trapezoid(TrapezoidVariant variant, std::optional<double> param = {}) const;

  InequalityReport point_ostrowski(Point at) const;
  InequalityReport anchored_ostrowski(const OstrowskiAnchors& anchors) const;
  InequalityReport midpoint_ostrowski() const;

 private:
  double corner_power_sum(double q) const;
  double corner_weighted_sum(double s, const WeightPair& w, double q, bool printed) const;
  double point_ostrowski_lhs(Point at) const;
  double anchored_ostrowski_lhs(const OstrowskiAnchors& anchors) const;
  InequalityReport report(std::string id, BoundParams params, double lhs, double rhs,
                          bool hypothesis_ok) const;

  SurfaceFunction f_;
  Rectangle rect_;
  Tolerances tol_;
  GateOptions gate_;
  SurfaceMoments moments_;
  std::array<double, 4> corner_{};

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Free functions; each builds a BoundEvaluator for one report.

InequalityReport midpoint_corner_bound(const SurfaceFunction& f, const Rectangle& rect,
                                       const Tolerances& tol = {});
InequalityReport midpoint_holder_bound(const SurfaceFunction& f, const Rectangle& rect,
                                       const HolderExponents& he, const Tolerances& tol = {});
/// Throws InvalidArgument unless q >= 1.
InequalityReport midpoint_power_mean_bound(const SurfaceFunction& f, const Rectangle& rect,
                                           double q, const Tolerances& tol = {});
InequalityReport midpoint_sup_bound(const SurfaceFunction& f, const Rectangle& rect,
                                    SupVariant variant, std::optional<HolderExponents> he = {},
                                    const Tolerances& tol = {});
InequalityReport weighted_sconvex_bound(const SurfaceFunction& f, const Rectangle& rect,
                                        double s, const WeightPair& w,
                                        const Tolerances& tol = {});
InequalityReport weighted_holder_bound(const SurfaceFunction& f, const Rectangle& rect, double s,
                                       const HolderExponents& he, const WeightPair& w,
                                       const Tolerances& tol = {});
InequalityReport weighted_power_mean_bound(const SurfaceFunction& f, const Rectangle& rect,
                                           double s, double q, const WeightPair& w,
                                           const Tolerances& tol = {});
InequalityReport corollary_bound(CorollaryParent parent, const SurfaceFunction& f,
                                 const Rectangle& rect, double r, double s,
                                 std::optional<HolderExponents> he = {},
                                 std::optional<double> q = {}, const Tolerances& tol = {});
InequalityReport trapezoid_bound(const SurfaceFunction& f, const Rectangle& rect,
                                 TrapezoidVariant variant, std::optional<double> param = {},
                                 const Tolerances& tol = {});
InequalityReport point_ostrowski_bound(const SurfaceFunction& f, const Rectangle& rect, Point at,
                                       const Tolerances& tol = {});
InequalityReport anchored_ostrowski_bound(const SurfaceFunction& f, const Rectangle& rect,
                                          const OstrowskiAnchors& anchors,
                                          const Tolerances& tol = {});

/// Corner average minus the mean of the four edge means plus the mean over
/// the rectangle.
double trapezoid_deviation(const SurfaceFunction& f, const Rectangle& rect,
                           const Tolerances& tol = {});

/// area f(x,y) - (b-a) int_c^d f(x,t) dt - (d-c) int_a^b f(t,y) dt + double integral.
/// Throws OutOfDomain when at lies outside rect.
double point_ostrowski_deviation(const SurfaceFunction& f, const Rectangle& rect, Point at,
                                 const Tolerances& tol = {});

/// The anchored nine-term expression (signed). Throws AnchorOutOfRange.
double anchored_ostrowski_deviation(const SurfaceFunction& f, const Rectangle& rect,
                                    const OstrowskiAnchors& anchors, const Tolerances& tol = {});

/// One bound of a comparison: its id and the report.
struct BoundInvocation {
  std::string bound_id;
  BoundParams params;
};

struct BoundComparison {
  std::vector<InequalityReport> reports;
  /// ratios[i][j] = reports[i].rhs / reports[j].rhs (0 when the latter is 0).
  std::vector<std::vector<double>> ratios;
};

/// Evaluates each invocation on (f, rect) and tabulates pairwise rhs ratios.
/// Recognised ids are those of bound_ids() and the corollary ids
/// weighted-sconvex-r0, weighted-sconvex-r1, weighted-holder-r0,
/// weighted-holder-r1, weighted-power-r0 and weighted-power-r1. Throws
/// InvalidArgument for an unknown id or a missing parameter.
BoundComparison compare_bounds(const BoundEvaluator& eval,
                               const std::vector<BoundInvocation>& invocations);

/// Dispatches one invocation on an evaluator.
InequalityReport evaluate_bound(const BoundEvaluator& eval, const BoundInvocation& inv);

/// All recognised bound ids, corollaries excluded.
const std::vector<std::string>& bound_ids();

}  // namespace coordlab
