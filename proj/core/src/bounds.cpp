#include "coordlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "coordlab/error.hpp"
#include "coordlab/kernels.hpp"
#include "coordlab/quadrature.hpp"

namespace coordlab {

namespace {

double holder_midpoint_constant(double area, double p) {
  return area / (4.0 * std::pow(p + 1.0, 2.0 / p));
}

void require_q(double q) {
  if (!(q >= 1.0 && std::isfinite(q))) throw InvalidArgument("power-mean exponent q must be >= 1");
}

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("s must lie in (0,1]");
}

// Bracketed aggregate of the anchored Ostrowski bound along one axis.
double anchor_aggregate(double lo, double hi, double alpha, double beta) {
  const double e1 = alpha - lo;
  const double e2 = hi - beta;
  const double m1 = lo + hi - 2.0 * alpha;
  const double m2 = lo + hi - 2.0 * beta;
  return (e1 * e1 + e2 * e2) / 2.0 + (m1 * m1 + m2 * m2) / 8.0;
}

template <class T>
const T& need(const std::optional<T>& v, const std::string& id, const char* name) {
  if (!v) throw InvalidArgument(id + " needs parameter " + name);
  return *v;
}

}  // namespace

InequalityReport finish_report(InequalityReport report, double margin_tol) {
  report.margin = report.rhs - std::abs(report.lhs);
  report.ratio = report.rhs > 0.0 ? std::abs(report.lhs) / report.rhs : 0.0;
  report.holds = report.margin >= -margin_tol;
  return report;
}

bool HadamardChain::nondecreasing(double tol) const noexcept {
  const auto v = values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] - tol) return false;
  }
  return true;
}

HadamardChain hadamard_chain(const SurfaceFunction& f, const Rectangle& rect,
                             const Tolerances& tol) {
  const SurfaceMoments m = compute_moments(f, rect, tol);
  HadamardChain chain;
  chain.v1 = m.f_mid;
  chain.v2 = 0.5 * (m.mean_mid_x + m.mean_mid_y);
  chain.v3 = m.mean;
  chain.v4 = m.boundary_mean();
  chain.v5 = m.corner_average();
  chain.hypothesis_claimed = f.claims(ConvexityClass::coord_convex());
  return chain;
}

struct BoundEvaluator::Cache {
  std::mutex mutex;
  std::optional<double> sup;
  std::map<std::tuple<int, double, double>, bool> hypotheses;
};

BoundEvaluator::BoundEvaluator(SurfaceFunction f, Rectangle rect, Tolerances tol,
                               GateOptions gate)
    : f_(std::move(f)),
      rect_(rect),
      tol_(tol),
      gate_(gate),
      cache_(std::make_shared<Cache>()) {
  tol_.validate();
  moments_ = compute_moments(f_, rect_, tol_);
  const auto corners = rect_.corners();
  for (std::size_t i = 0; i < corners.size(); ++i) {
    corner_[i] = std::abs(mixed_value(f_, corners[i], tol_));
  }
}

double BoundEvaluator::sup_norm() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->sup) cache_->sup = sup_norm_mixed(f_, rect_, gate_.sup_grid, tol_);
  return *cache_->sup;
}

bool BoundEvaluator::hypothesis(const ConvexityClass& cls, double q) const {
  const auto key = std::make_tuple(static_cast<int>(cls.kind()), cls.s(), q);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->hypotheses.find(key); it != cache_->hypotheses.end()) return it->second;
  }

  // Positive scaling preserves every class, so the checked function is
  // normalised to keep margin_tol meaningful for large mixed partials.
  auto power = [this, q](double x, double y) {
    return std::pow(std::abs(mixed_value(f_, {x, y}, tol_)), q);
  };
  double scale = power(rect_.mid_x(), rect_.mid_y());
  for (const Point& c : rect_.corners()) scale = std::max(scale, power(c.x, c.y));
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;

  SurfaceFunction g;
  g.eval = [power, scale](double x, double y) { return power(x, y) / scale; };
  g.valid_on = rect_;
  g.label = "|mixed|^q of " + f_.label;

  bool ok = false;
  try {
    ok = check_class(g, rect_, cls, gate_.samples, gate_.seed, tol_.margin_tol).pass;
  } catch (const InvalidArgument&) {
    ok = false;  // s < 1 outside the first quadrant
  }

  std::lock_guard lock(cache_->mutex);
  cache_->hypotheses.emplace(key, ok);
  return ok;
}

InequalityReport BoundEvaluator::report(std::string id, BoundParams params, double lhs,
                                        double rhs, bool hypothesis_ok) const {
  InequalityReport r;
  r.bound_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.hypothesis_ok = hypothesis_ok;
  r.fd_fallback = !f_.has_mixed();
  return finish_report(std::move(r), tol_.margin_tol);
}

double BoundEvaluator::corner_power_sum(double q) const {
  double sum = 0.0;
  for (double m : corner_) sum += std::pow(m, q);
  return sum;
}

double BoundEvaluator::corner_weighted_sum(double s, const WeightPair& w, double q,
                                           bool printed) const {
  const BoundConstants k = bound_constants(s, w);
  const double m_ac = std::pow(corner_[0], q);
  const double m_bc = std::pow(corner_[1], q);
  const double m_ad = std::pow(corner_[2], q);
  const double m_bd = std::pow(corner_[3], q);
  if (printed) return k.M * k.N * m_ac + k.L * k.N * m_ad + k.K * k.M * m_bc + k.K * k.L * m_bd;
  return k.M * k.N * m_ac + k.M * k.L * m_ad + k.K * k.N * m_bc + k.K * k.L * m_bd;
}

InequalityReport BoundEvaluator::midpoint_corner() const {
  const double rhs = rect_.area() / 64.0 * corner_power_sum(1.0);
  return report("midpoint-corner", {}, moments_.midpoint_deviation(), rhs,
                hypothesis(ConvexityClass::coord_convex(), 1.0));
}

InequalityReport BoundEvaluator::midpoint_holder(const HolderExponents& he) const {
  const double p = he.p();
  const double q = he.q();
  const double rhs = holder_midpoint_constant(rect_.area(), p) *
                     std::pow(corner_power_sum(q) / 4.0, 1.0 / q);
  BoundParams params;
  params.p = p;
  params.q = q;
  return report("midpoint-holder", params, moments_.midpoint_deviation(), rhs,
                hypothesis(ConvexityClass::coord_convex(), q));
}

InequalityReport BoundEvaluator::midpoint_power_mean(double q) const {
  require_q(q);
  const double rhs = rect_.area() / 16.0 * std::pow(corner_power_sum(q) / 4.0, 1.0 / q);
  BoundParams params;
  params.q = q;
  return report("midpoint-power", params, moments_.midpoint_deviation(), rhs,
                hypothesis(ConvexityClass::coord_convex(), q));
}

InequalityReport BoundEvaluator::midpoint_sup(SupVariant variant,
                                              std::optional<HolderExponents> he) const {
  BoundParams params;
  double rhs = 0.0;
  std::string id;
  if (variant == SupVariant::L1) {
    id = "midpoint-sup-l1";
    rhs = rect_.area() / 16.0 * sup_norm();
  } else {
    id = "midpoint-sup-holder";
    const double p = need(he, id, "p").p();
    params.p = p;
    params.q = he->q();
    rhs = holder_midpoint_constant(rect_.area(), p) * sup_norm();
  }
  return report(std::move(id), params, moments_.midpoint_deviation(), rhs, true);
}

InequalityReport BoundEvaluator::weighted_sconvex(double s, const WeightPair& w) const {
  require_s(s);
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double scale =
      rect_.area() / ((r1 + 1.0) * (r2 + 1.0) * std::pow((s + 1.0) * (s + 2.0), 2.0));
  BoundParams params;
  params.s = s;
  params.r1 = r1;
  params.r2 = r2;
  auto r = report("weighted-sconvex", params, moments_.weighted_corner_deviation(w),
                  scale * corner_weighted_sum(s, w, 1.0, false),
                  hypothesis(ConvexityClass::coord_sconvex(s), 1.0));
  r.printed_rhs = scale * corner_weighted_sum(s, w, 1.0, true);
  return r;
}

InequalityReport BoundEvaluator::weighted_holder(double s, const HolderExponents& he,
                                                 const WeightPair& w) const {
  require_s(s);
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double p = he.p();
  const double q = he.q();
  const double scale = rect_.area() / ((r1 + 1.0) * (r2 + 1.0));
  const double tail = std::pow(corner_power_sum(q) / ((s + 1.0) * (s + 1.0)), 1.0 / q);
  const double kernel = holder_axis_factor(r1, he) * holder_axis_factor(r2, he);
  const double printed = holder_axis_factor_printed(r1, he) * holder_axis_factor_printed(r2, he);
  BoundParams params;
  params.s = s;
  params.p = p;
  params.q = q;
  params.r1 = r1;
  params.r2 = r2;
  auto r = report("weighted-holder", params, moments_.weighted_corner_deviation(w), scale * kernel * tail,
                  hypothesis(ConvexityClass::coord_sconvex(s), q));
  r.printed_rhs = scale * printed * tail;
  return r;
}

InequalityReport BoundEvaluator::weighted_power_mean(double s, double q,
                                                     const WeightPair& w) const {
  require_s(s);
  require_q(q);
  const double r1 = w.r1();
  const double r2 = w.r2();
  const double scale = rect_.area() / ((r1 + 1.0) * (r2 + 1.0)) *
                       std::pow(weighted_kernel_l1(r1) * weighted_kernel_l1(r2), 1.0 - 1.0 / q);
  const double denom = std::pow((s + 1.0) * (s + 2.0), 2.0);
  BoundParams params;
  params.s = s;
  params.q = q;
  params.r1 = r1;
  params.r2 = r2;
  auto r = report("weighted-power", params, moments_.weighted_corner_deviation(w),
                  scale * std::pow(corner_weighted_sum(s, w, q, false) / denom, 1.0 / q),
                  hypothesis(ConvexityClass::coord_sconvex(s), q));
  r.printed_rhs = scale * std::pow(corner_weighted_sum(s, w, q, true) / denom, 1.0 / q);
  return r;
}

InequalityReport BoundEvaluator::corollary(CorollaryParent parent, double r, double s,
                                           std::optional<HolderExponents> he,
                                           std::optional<double> q) const {
  if (r != 0.0 && r != 1.0) throw InvalidArgument("corollaries are defined for r = 0 and r = 1");
  require_s(s);
  const WeightPair w(r, r);
  const double area = rect_.area();
  const std::string suffix = r == 0.0 ? "-r0" : "-r1";
  const double s1 = s + 1.0;
  InequalityReport out;

  switch (parent) {
    case CorollaryParent::WeightedSConvex: {
      out = weighted_sconvex(s, w);
      out.bound_id = "weighted-sconvex" + suffix;
      const double denom = s1 * s1 * (s + 2.0) * (s + 2.0);
      if (r == 1.0) {
        const double k = s + std::pow(2.0, -s);
        out.printed_rhs = area / denom * k * k * corner_power_sum(1.0);
      } else {
        out.printed_rhs = area / denom *
                          (s1 * s1 * corner_[0] + s1 * corner_[2] + s1 * corner_[1] + corner_[3]);
      }
      break;
    }
    case CorollaryParent::WeightedHolder: {
      const auto& exps = need(he, "weighted-holder" + suffix, "p");
      out = weighted_holder(s, exps, w);
      out.bound_id = "weighted-holder" + suffix;
      const double p = exps.p();
      const double qq = exps.q();
      const double tail = std::pow(corner_power_sum(qq) / (s1 * s1), 1.0 / qq);
      const double lead = r == 1.0 ? holder_midpoint_constant(area, p)
                                   : area / std::pow(p + 1.0, 2.0 / p);
      out.printed_rhs = lead * tail;
      break;
    }
    case CorollaryParent::WeightedPowerMean: {
      const double qq = need(q, "weighted-power" + suffix, "q");
      out = weighted_power_mean(s, qq, w);
      out.bound_id = "weighted-power" + suffix;
      const double lead = (r == 1.0 ? area / 4.0 : area) * std::pow(0.25, 1.0 - 1.0 / qq);
      const double denom = s1 * s1 * (s + 2.0) * (s + 2.0);
      out.printed_rhs = lead * std::pow(corner_weighted_sum(s, w, qq, true) / denom, 1.0 / qq);
      break;
    }
  }
  return out;
}

InequalityReport BoundEvaluator::trapezoid(TrapezoidVariant variant,
                                           std::optional<double> param) const {
  const double lhs = moments_.trapezoid_deviation();
  const double area = rect_.area();
  BoundParams params;
  switch (variant) {
    case TrapezoidVariant::Convex:
      return report("trap-convex", params, lhs, area / 16.0 * corner_power_sum(1.0) / 4.0,
                    hypothesis(ConvexityClass::coord_convex(), 1.0));
    case TrapezoidVariant::Holder: {
      const auto he = HolderExponents::from_p(need(param, "trap-holder", "p"));
      params.p = he.p();
      params.q = he.q();
      const double rhs = holder_midpoint_constant(area, he.p()) *
                         std::pow(corner_power_sum(he.q()) / 4.0, 1.0 / he.q());
      return report("trap-holder", params, lhs, rhs,
                    hypothesis(ConvexityClass::coord_convex(), he.q()));
    }
    case TrapezoidVariant::PowerMean: {
      const double q = need(param, "trap-power", "q");
      require_q(q);
      params.q = q;
      const double rhs = area / 16.0 * std::pow(corner_power_sum(q) / 4.0, 1.0 / q);
      return report("trap-power", params, lhs, rhs, hypothesis(ConvexityClass::coord_convex(), q));
    }
  }
  throw InvalidArgument("unknown trapezoid variant");
}

double BoundEvaluator::point_ostrowski_lhs(Point at) const {
  if (!rect_.contains(at)) throw OutOfDomain("evaluation point outside the rectangle");
  const auto along_y = integrate_1d([&](double t) { return f_(at.x, t); }, rect_.c(), rect_.d(),
                                    tol_.quad_tol);
  const auto along_x = integrate_1d([&](double t) { return f_(t, at.y); }, rect_.a(), rect_.b(),
                                    tol_.quad_tol);
  const double area = rect_.area();
  return area * f_(at.x, at.y) - rect_.width() * along_y.value - rect_.height() * along_x.value +
         area * moments_.mean;
}

double BoundEvaluator::anchored_ostrowski_lhs(const OstrowskiAnchors& an) const {
  an.validate(rect_);
  const double a = rect_.a(), b = rect_.b(), c = rect_.c(), d = rect_.d();
  const double w = rect_.width();
  const double h = rect_.height();
  const double mx = rect_.mid_x();
  const double my = rect_.mid_y();
  const double left = an.alpha1 - a;
  const double right = b - an.beta1;
  const double low = an.alpha2 - c;
  const double high = d - an.beta2;
  const double span1 = an.beta1 - an.alpha1;
  const double span2 = an.beta2 - an.alpha2;
  const SurfaceMoments& m = moments_;

  const double H = left * (low * m.f_ac + high * m.f_ad) + right * (low * m.f_bc + high * m.f_bd);
  const double G = span1 * (low * f_(mx, c) + high * f_(mx, d)) +
                   span2 * (left * f_(a, my) + right * f_(b, my));
  return span1 * span2 * m.f_mid + H + G - span2 * w * m.mean_mid_x - span1 * h * m.mean_mid_y -
         w * (low * m.mean_bottom + high * m.mean_top) -
         h * (left * m.mean_left + right * m.mean_right) + rect_.area() * m.mean;
}

InequalityReport BoundEvaluator::point_ostrowski(Point at) const {
  const double lhs = point_ostrowski_lhs(at);
  const double dx = at.x - rect_.mid_x();
  const double dy = at.y - rect_.mid_y();
  const double w = rect_.width();
  const double h = rect_.height();
  const double rhs = (w * w / 4.0 + dx * dx) * (h * h / 4.0 + dy * dy) * sup_norm();
  BoundParams params;
  params.x = at.x;
  params.y = at.y;
  return report("ostrowski-point", params, lhs, rhs, true);
}

InequalityReport BoundEvaluator::anchored_ostrowski(const OstrowskiAnchors& anchors) const {
  const double lhs = anchored_ostrowski_lhs(anchors);
  const double rhs = anchor_aggregate(rect_.a(), rect_.b(), anchors.alpha1, anchors.beta1) *
                     anchor_aggregate(rect_.c(), rect_.d(), anchors.alpha2, anchors.beta2) *
                     sup_norm();
  BoundParams params;
  params.anchors = anchors;
  return report("ostrowski-anchored", params, lhs, rhs, true);
}

InequalityReport BoundEvaluator::midpoint_ostrowski() const {
  auto r = anchored_ostrowski({rect_.a(), rect_.b(), rect_.c(), rect_.d()});
  r.bound_id = "ostrowski-midpoint";
  r.params = {};
  return r;
}

InequalityReport midpoint_corner_bound(const SurfaceFunction& f, const Rectangle& rect,
                                       const Tolerances& tol) {
  return BoundEvaluator(f, rect, tol).midpoint_corner();
}

InequalityReport midpoint_holder_bound(const SurfaceFunction& f, const Rectangle& rect,
                                       const HolderExponents& he, const Tolerances& tol) {
  return BoundEvaluator(f, rect, tol).midpoint_holder(he);
}

InequalityReport midpoint_power_mean_bound(const SurfaceFunction& f, const Rectangle& rect,
                                           double q, const Tolerances& tol) {
  require_q(q);
  return BoundEvaluator(f, rect, tol).midpoint_power_mean(q);
}

InequalityReport midpoint_sup_bound(const SurfaceFunction& f, const Rectangle& rect,
                                    SupVariant variant, std::optional<HolderExponents> he,
                                    const Tolerances& tol) {
  return BoundEvaluator(f, rect, tol).midpoint_sup(variant, he);
}

InequalityReport weighted_sconvex_bound(const SurfaceFunction& f, const Rectangle& rect,
                                        double s, const WeightPair& w, const Tolerances& tol) {
  require_s(s);
  return BoundEvaluator(f, rect, tol).weighted_sconvex(s, w);
}

InequalityReport weighted_holder_bound(const SurfaceFunction& f, const Rectangle& rect, double s,
                                       const HolderExponents& he, const WeightPair& w,
                                       const Tolerances& tol) {
  require_s(s);
  return BoundEvaluator(f, rect, tol).weighted_holder(s, he, w);
}

InequalityReport weighted_power_mean_bound(const SurfaceFunction& f, const Rectangle& rect,
                                           double s, double q, const WeightPair& w,
                                           const Tolerances& tol) {
  require_s(s);
  require_q(q);
  return BoundEvaluator(f, rect, tol).weighted_power_mean(s, q, w);
}

InequalityReport corollary_bound(CorollaryParent parent, const SurfaceFunction& f,
                                 const Rectangle& rect, double r, double s,
                                 std::optional<HolderExponents> he, std::optional<double> q,
                                 const Tolerances& tol) {
  return BoundEvaluator(f, rect, tol).corollary(parent, r, s, he, q);
}

InequalityReport trapezoid_bound(const SurfaceFunction& f, const Rectangle& rect,
                                 TrapezoidVariant variant, std::optional<double> param,
                                 const Tolerances& tol) {
  return BoundEvaluator(f, rect, tol).trapezoid(variant, param);
}

InequalityReport point_ostrowski_bound(const SurfaceFunction& f, const Rectangle& rect, Point at,
                                       const Tolerances& tol) {
  if (!rect.contains(at)) throw OutOfDomain("evaluation point outside the rectangle");
  return BoundEvaluator(f, rect, tol).point_ostrowski(at);
}

InequalityReport anchored_ostrowski_bound(const SurfaceFunction& f, const Rectangle& rect,
                                          const OstrowskiAnchors& anchors,
                                          const Tolerances& tol) {
  anchors.validate(rect);
  return BoundEvaluator(f, rect, tol).anchored_ostrowski(anchors);
}

double trapezoid_deviation(const SurfaceFunction& f, const Rectangle& rect,
                           const Tolerances& tol) {
  return compute_moments(f, rect, tol).trapezoid_deviation();
}

double point_ostrowski_deviation(const SurfaceFunction& f, const Rectangle& rect, Point at,
                                 const Tolerances& tol) {
  if (!rect.contains(at)) throw OutOfDomain("evaluation point outside the rectangle");
  return BoundEvaluator(f, rect, tol).point_ostrowski(at).lhs;
}

double anchored_ostrowski_deviation(const SurfaceFunction& f, const Rectangle& rect,
                                    const OstrowskiAnchors& anchors, const Tolerances& tol) {
  anchors.validate(rect);
  return BoundEvaluator(f, rect, tol).anchored_ostrowski(anchors).lhs;
}

InequalityReport evaluate_bound(const BoundEvaluator& eval, const BoundInvocation& inv) {
  const std::string& id = inv.bound_id;
  const BoundParams& bp = inv.params;
  auto weights = [&] { return WeightPair(need(bp.r1, id, "r1"), need(bp.r2, id, "r2")); };
  auto holder = [&] { return HolderExponents::from_p(need(bp.p, id, "p")); };
  auto opt_holder = [&]() -> std::optional<HolderExponents> {
    if (!bp.p) return std::nullopt;
    return HolderExponents::from_p(*bp.p);
  };

  if (id == "midpoint-corner") return eval.midpoint_corner();
  if (id == "midpoint-holder") return eval.midpoint_holder(holder());
  if (id == "midpoint-power") return eval.midpoint_power_mean(need(bp.q, id, "q"));
  if (id == "midpoint-sup-l1") return eval.midpoint_sup(SupVariant::L1);
  if (id == "midpoint-sup-holder") return eval.midpoint_sup(SupVariant::Holder, holder());
  if (id == "weighted-sconvex") return eval.weighted_sconvex(need(bp.s, id, "s"), weights());
  if (id == "weighted-holder") return eval.weighted_holder(need(bp.s, id, "s"), holder(), weights());
  if (id == "weighted-power") {
    return eval.weighted_power_mean(need(bp.s, id, "s"), need(bp.q, id, "q"), weights());
  }
  if (id == "trap-convex") return eval.trapezoid(TrapezoidVariant::Convex);
  if (id == "trap-holder") return eval.trapezoid(TrapezoidVariant::Holder, need(bp.p, id, "p"));
  if (id == "trap-power") return eval.trapezoid(TrapezoidVariant::PowerMean, need(bp.q, id, "q"));
  if (id == "ostrowski-point") return eval.point_ostrowski({need(bp.x, id, "x"), need(bp.y, id, "y")});
  if (id == "ostrowski-anchored") return eval.anchored_ostrowski(need(bp.anchors, id, "anchors"));
  if (id == "ostrowski-midpoint") return eval.midpoint_ostrowski();

  for (const auto& [prefix, parent] :
       {std::pair{std::string("weighted-sconvex"), CorollaryParent::WeightedSConvex},
        std::pair{std::string("weighted-holder"), CorollaryParent::WeightedHolder},
        std::pair{std::string("weighted-power"), CorollaryParent::WeightedPowerMean}}) {
    for (const double r : {0.0, 1.0}) {
      const std::string cid = prefix + (r == 0.0 ? "-r0" : "-r1");
      if (id == cid) return eval.corollary(parent, r, need(bp.s, id, "s"), opt_holder(), bp.q);
    }
  }
  throw InvalidArgument("unknown bound id '" + id + "'");
}

BoundComparison compare_bounds(const BoundEvaluator& eval,
                               const std::vector<BoundInvocation>& invocations) {
  BoundComparison out;
  out.reports.reserve(invocations.size());
  for (const auto& inv : invocations) out.reports.push_back(evaluate_bound(eval, inv));
  const std::size_t n = out.reports.size();
  out.ratios.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double den = out.reports[j].rhs;
      out.ratios[i][j] = den != 0.0 ? out.reports[i].rhs / den : 0.0;
    }
  }
  return out;
}

const std::vector<std::string>& bound_ids() {
  static const std::vector<std::string> ids = {
      "midpoint-corner",     "midpoint-holder", "midpoint-power",  "midpoint-sup-l1",
      "midpoint-sup-holder", "weighted-sconvex", "weighted-holder", "weighted-power",
      "trap-convex",         "trap-holder",      "trap-power",      "ostrowski-point",
      "ostrowski-anchored",  "ostrowski-midpoint"};
  return ids;
}

}  // namespace coordlab
