#pragma once

// Reference integrals for the tests, computed with double-exponential
// (tanh-sinh) quadrature. Deliberately unrelated to the library's adaptive
// Gauss-Kronrod code: fixed step, no adaptivity, endpoint singularities of
// the t^s kind are handled by the variable transformation itself.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "coordlab/domain.hpp"

namespace oracle {

struct Node {
  double offset_lo;  // distance of the node from lo, in units of (hi - lo)
  double weight;     // weight on the unit interval
};

// Nodes on [0, 1] for step 2^-level, truncated where the weights underflow.
inline const std::vector<Node>& nodes(int level) {
  static std::vector<std::vector<Node>> cache(12);
  auto& out = cache.at(static_cast<std::size_t>(level));
  if (!out.empty()) return out;
  const double h = std::ldexp(1.0, -level);
  const double half_pi = std::numbers::pi / 2.0;
  const int kmax = static_cast<int>(3.6 / h);
  for (int k = -kmax; k <= kmax; ++k) {
    const double t = k * h;
    const double u = half_pi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (ch * ch) * h / 2.0;
    // 1 - tanh|u| computed without cancellation.
    const double comp = 2.0 / (std::exp(2.0 * std::abs(u)) + 1.0);
    const double offset = k < 0 ? comp / 2.0 : (k == 0 ? 0.5 : 1.0 - comp / 2.0);
    if (w < 1e-300 || offset <= 0.0 || offset >= 1.0) continue;
    out.push_back({offset, w});
  }
  return out;
}

inline double integrate(const std::function<double(double)>& g, double lo, double hi,
                        int level = 7) {
  const double len = hi - lo;
  double sum = 0.0;
  for (const Node& n : nodes(level)) {
    // Evaluate close to the nearer endpoint to keep the abscissa exact.
    const double x = n.offset_lo < 0.5 ? lo + len * n.offset_lo : hi - len * (1.0 - n.offset_lo);
    sum += n.weight * g(x);
  }
  return sum * len;
}

// Integral over [lo, hi] split at the given interior points.
inline double integrate_pieces(const std::function<double(double)>& g, double lo, double hi,
                               std::vector<double> breaks, int level = 7) {
  breaks.insert(breaks.begin(), lo);
  breaks.push_back(hi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) sum += integrate(g, breaks[i], breaks[i + 1], level);
  }
  return sum;
}

inline double integrate2(const std::function<double(double, double)>& g, double a, double b,
                         double c, double d, std::vector<double> xb = {},
                         std::vector<double> yb = {}, int level = 6) {
  return integrate_pieces(
      [&](double x) {
        return integrate_pieces([&](double y) { return g(x, y); }, c, d, yb, level);
      },
      a, b, xb, level);
}

inline double integrate2(const std::function<double(double, double)>& g,
                         const coordlab::Rectangle& r, std::vector<double> xb = {},
                         std::vector<double> yb = {}, int level = 6) {
  return integrate2(g, r.a(), r.b(), r.c(), r.d(), std::move(xb), std::move(yb), level);
}

// Deviation functionals written out from their definitions.

inline double mean_x(const std::function<double(double, double)>& f, const coordlab::Rectangle& r,
                     double y) {
  return integrate([&](double x) { return f(x, y); }, r.a(), r.b()) / r.width();
}

inline double mean_y(const std::function<double(double, double)>& f, const coordlab::Rectangle& r,
                     double x) {
  return integrate([&](double y) { return f(x, y); }, r.c(), r.d()) / r.height();
}

inline double mean(const std::function<double(double, double)>& f, const coordlab::Rectangle& r) {
  return integrate2(f, r) / r.area();
}

inline double midpoint_deviation(const std::function<double(double, double)>& f,
                                 const coordlab::Rectangle& r) {
  const double mx = r.mid_x();
  const double my = r.mid_y();
  return f(mx, my) - mean_y(f, r, mx) - mean_x(f, r, my) + mean(f, r);
}

inline double weighted_deviation(const std::function<double(double, double)>& f,
                                 const coordlab::Rectangle& r, double r1, double r2) {
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d();
  const double corners =
      (f(a, c) + r2 * f(a, d) + r1 * f(b, c) + r1 * r2 * f(b, d)) / ((r1 + 1) * (r2 + 1));
  return corners - r1 / (r1 + 1) * mean_y(f, r, b) - 1 / (r1 + 1) * mean_y(f, r, a) -
         r2 / (r2 + 1) * mean_x(f, r, d) - 1 / (r2 + 1) * mean_x(f, r, c) + mean(f, r);
}

inline double trapezoid_deviation(const std::function<double(double, double)>& f,
                                  const coordlab::Rectangle& r) {
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d();
  const double corners = (f(a, c) + f(a, d) + f(b, c) + f(b, d)) / 4;
  const double edges =
      (mean_y(f, r, a) + mean_y(f, r, b) + mean_x(f, r, c) + mean_x(f, r, d)) / 2;
  return corners - edges + mean(f, r);
}

// (1/area) int int p(t) q(s) m(t, s).
inline double midpoint_kernel_rhs(const std::function<double(double, double)>& m,
                                  const coordlab::Rectangle& r) {
  auto p = [&](double t) { return t <= r.mid_x() ? t - r.a() : t - r.b(); };
  auto q = [&](double s) { return s <= r.mid_y() ? s - r.c() : s - r.d(); };
  return integrate2([&](double t, double s) { return p(t) * q(s) * m(t, s); }, r, {r.mid_x()},
                    {r.mid_y()}) /
         r.area();
}

// (area/((r1+1)(r2+1))) int_0^1 int_0^1 k_r1(t) k_r2(l) m(a + t w, c + l h).
inline double weighted_kernel_rhs(const std::function<double(double, double)>& m,
                                  const coordlab::Rectangle& r, double r1, double r2) {
  auto g = [&](double t, double l) {
    return ((r1 + 1) * t - 1) * ((r2 + 1) * l - 1) *
           m(r.a() + t * r.width(), r.c() + l * r.height());
  };
  return r.area() * integrate2(g, 0, 1, 0, 1, {1 / (r1 + 1)}, {1 / (r2 + 1)}) /
         ((r1 + 1) * (r2 + 1));
}

}  // namespace oracle
