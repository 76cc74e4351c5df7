#include "coordlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "coordlab/error.hpp"

namespace coordlab {

namespace {

// Kronrod abscissae on [-1,1]; odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct RuleResult {
  double kronrod;
  double gauss;
  double abs_kronrod;  // integral of |g| under the Kronrod rule
};

RuleResult gk15(const std::function<double(double)>& g, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = g(centre);
  double k = kWgk[7] * fc;
  double gs = kWg[3] * fc;
  double kabs = kWgk[7] * std::abs(fc);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(centre - dx);
    const double f2 = g(centre + dx);
    k += kWgk[j] * (f1 + f2);
    kabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gs += kWg[j / 2] * (f1 + f2);
  }
  return {k * half, gs * half, kabs * std::abs(half)};
}

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
  int depth;
};

bool smaller_error(const Panel& x, const Panel& y) { return x.err < y.err; }

// Panels are bisected in order of decreasing error estimate until the sum
// of the estimates meets tol. A panel whose estimate is at the rounding
// floor of the rule is final. Splitting beyond max_depth, or past
// kMaxPanels live panels, is a failure.
constexpr std::size_t kMaxPanels = 200000;

class Adaptive {
 public:
  Adaptive(const std::function<double(double)>& g, int max_depth) : g_(g), max_depth_(max_depth) {}

  void add(double lo, double hi, int depth) {
    const RuleResult r = gk15(g_, lo, hi);
    evals_ += 15;
    if (!std::isfinite(r.kronrod) || !std::isfinite(r.gauss)) {
      throw NonConvergence("non-finite integrand value on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    const double err = std::abs(r.kronrod - r.gauss);
    const Panel p{lo, hi, r.kronrod, err, depth};
    if (err <= 50.0 * kEps * r.abs_kronrod) {
      final_value_ += p.value;
      final_err_ += p.err;
      return;
    }
    open_.push_back(p);
    std::push_heap(open_.begin(), open_.end(), smaller_error);
    open_err_ += err;
  }

  QuadratureEstimate run(double tol) {
    while (!open_.empty() && final_err_ + open_err_ > tol) {
      std::pop_heap(open_.begin(), open_.end(), smaller_error);
      const Panel p = open_.back();
      open_.pop_back();
      const double mid = 0.5 * (p.lo + p.hi);
      if (p.depth >= max_depth_ || !(p.lo < mid && mid < p.hi) || open_.size() >= kMaxPanels) {
        throw NonConvergence("subdivision limit reached on [" + shortest(p.lo) + ", " +
                             shortest(p.hi) + "] with error estimate " + shortest(p.err) +
                             " against tolerance " + shortest(tol));
      }
      open_err_ -= p.err;
      add(p.lo, mid, p.depth + 1);
      add(mid, p.hi, p.depth + 1);
      if (open_err_ < 0.0 || open_.empty()) open_err_ = summed_open_error();
    }
    QuadratureEstimate out;
    out.value = final_value_;
    out.err_est = final_err_;
    for (const Panel& p : open_) {
      out.value += p.value;
      out.err_est += p.err;
    }
    out.evals = evals_;
    return out;
  }

 private:
  double summed_open_error() const {
    double sum = 0.0;
    for (const Panel& p : open_) sum += p.err;
    return sum;
  }

  static std::string shortest(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  const std::function<double(double)>& g_;
  int max_depth_;
  std::vector<Panel> open_;
  double open_err_ = 0.0;
  double final_value_ = 0.0;
  double final_err_ = 0.0;
  std::size_t evals_ = 0;
};

std::vector<double> segment_points(double lo, double hi, std::span<const double> breaks) {
  std::vector<double> pts{lo};
  std::vector<double> inner;
  for (double b : breaks) {
    if (b > lo && b < hi) inner.push_back(b);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  pts.insert(pts.end(), inner.begin(), inner.end());
  pts.push_back(hi);
  return pts;
}

}  // namespace

QuadratureEstimate integrate_1d(const std::function<double(double)>& g, double lo, double hi,
                                double tol, std::span<const double> breakpoints,
                                int max_depth) {
  if (!(lo < hi)) throw InvalidArgument("integrate_1d requires lo < hi");
  if (!(tol > 0.0)) throw InvalidArgument("integrate_1d requires tol > 0");

  const std::vector<double> pts = segment_points(lo, hi, breakpoints);
  Adaptive adaptive(g, max_depth);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) adaptive.add(pts[i], pts[i + 1], 0);
  return adaptive.run(tol);
}

QuadratureEstimate integrate_2d(const std::function<double(double, double)>& g,
                                const Rectangle& rect, double tol,
                                std::span<const double> x_breaks,
                                std::span<const double> y_breaks, int max_depth) {
  if (!(tol > 0.0)) throw InvalidArgument("integrate_2d requires tol > 0");

  const double inner_tol = 0.5 * tol / rect.width();
  double worst_inner_err = 0.0;
  std::size_t inner_evals = 0;

  auto outer = [&](double x) {
    const QuadratureEstimate inner = integrate_1d([&](double y) { return g(x, y); }, rect.c(),
                                                  rect.d(), inner_tol, y_breaks, max_depth);
    worst_inner_err = std::max(worst_inner_err, inner.err_est);
    inner_evals += inner.evals;
    return inner.value;
  };

  QuadratureEstimate est = integrate_1d(outer, rect.a(), rect.b(), 0.5 * tol, x_breaks, max_depth);
  est.err_est += rect.width() * worst_inner_err;
  est.evals = inner_evals;
  return est;
}

double integrate_1d_fixed(const std::function<double(double)>& g, double lo, double hi,
                          std::size_t panels, std::span<const double> breakpoints) {
  if (!(lo < hi)) throw InvalidArgument("integrate_1d_fixed requires lo < hi");
  if (panels == 0) throw InvalidArgument("integrate_1d_fixed requires panels >= 1");
  const std::vector<double> pts = segment_points(lo, hi, breakpoints);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double step = (pts[i + 1] - pts[i]) / static_cast<double>(panels);
    for (std::size_t k = 0; k < panels; ++k) {
      const double a = pts[i] + step * static_cast<double>(k);
      const double b = k + 1 == panels ? pts[i + 1] : a + step;
      sum += gk15(g, a, b).kronrod;
    }
  }
  return sum;
}

double integrate_2d_fixed(const std::function<double(double, double)>& g, const Rectangle& rect,
                          std::size_t panels, std::span<const double> x_breaks,
                          std::span<const double> y_breaks) {
  auto outer = [&](double x) {
    return integrate_1d_fixed([&](double y) { return g(x, y); }, rect.c(), rect.d(), panels,
                              y_breaks);
  };
  return integrate_1d_fixed(outer, rect.a(), rect.b(), panels, x_breaks);
}

double mixed_partial_fd(const SurfaceFunction& f, Point at, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const Rectangle& dom = f.valid_on;
  if (!dom.contains(Point{at.x - h, at.y - h}) || !dom.contains(Point{at.x + h, at.y + h})) {
    throw DomainExceeded("finite-difference stencil around (" + std::to_string(at.x) + ", " +
                         std::to_string(at.y) + ") leaves " + dom.label() + " of " + f.label);
  }
  const double fpp = f(at.x + h, at.y + h);
  const double fpm = f(at.x + h, at.y - h);
  const double fmp = f(at.x - h, at.y + h);
  const double fmm = f(at.x - h, at.y - h);
  return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
}

double mixed_partial_fd(const SurfaceFunction& f, Point at, const Tolerances& tol) {
  const double h = tol.fd_step * std::max({1.0, std::abs(at.x), std::abs(at.y)});
  return mixed_partial_fd(f, at, h);
}

double mixed_value(const SurfaceFunction& f, Point at, const Tolerances& tol) {
  if (f.has_mixed()) return f.mixed(at.x, at.y);

  const double h = tol.fd_step * std::max({1.0, std::abs(at.x), std::abs(at.y)});
  const Rectangle& dom = f.valid_on;
  if (dom.width() <= 2.0 * h || dom.height() <= 2.0 * h) {
    throw DomainExceeded("valid_on of " + f.label + " is too small for a difference stencil");
  }
  Point centre{std::clamp(at.x, dom.a() + h, dom.b() - h), std::clamp(at.y, dom.c() + h, dom.d() - h)};
  return mixed_partial_fd(f, centre, h);
}

double sup_norm_mixed(const SurfaceFunction& f, const Rectangle& rect, std::size_t grid_n,
                      const Tolerances& tol) {
  if (grid_n < 2) throw InvalidArgument("sup_norm_mixed requires grid_n >= 2");

  const double hx = rect.width() / static_cast<double>(grid_n - 1);
  const double hy = rect.height() / static_cast<double>(grid_n - 1);
  auto node = [&](double lo, double hi, double h, std::size_t i, std::size_t n) {
    return i + 1 == n ? hi : lo + h * static_cast<double>(i);
  };

  double best = -1.0;
  Point arg = rect.midpoint();
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double x = node(rect.a(), rect.b(), hx, i, grid_n);
    for (std::size_t j = 0; j < grid_n; ++j) {
      const double y = node(rect.c(), rect.d(), hy, j, grid_n);
      const double v = std::abs(mixed_value(f, {x, y}, tol));
      if (v > best) {
        best = v;
        arg = {x, y};
      }
    }
  }

  // Refine over the cells adjacent to the arg-max node at spacing h/3.
  for (int i = -3; i <= 3; ++i) {
    const double x = arg.x + hx * static_cast<double>(i) / 3.0;
    if (x < rect.a() || x > rect.b()) continue;
    for (int j = -3; j <= 3; ++j) {
      const double y = arg.y + hy * static_cast<double>(j) / 3.0;
      if (y < rect.c() || y > rect.d()) continue;
      best = std::max(best, std::abs(mixed_value(f, {x, y}, tol)));
    }
  }
  return best;
}

}  // namespace coordlab
