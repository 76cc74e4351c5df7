#include "coordlab/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "coordlab/error.hpp"

namespace coordlab {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_range(double lo, double hi) {
  return "[" + shortest(lo) + ":" + shortest(hi) + "]";
}

}  // namespace

Rectangle::Rectangle(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  // Negated comparisons so that NaN endpoints are rejected as well.
  if (!(a < b) || !(c < d) || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw DegenerateDomain("degenerate rectangle " + fmt_range(a, b) + "x" + fmt_range(c, d));
  }
}

std::array<Point, 4> Rectangle::corners() const noexcept {
  return {Point{a_, c_}, Point{b_, c_}, Point{a_, d_}, Point{b_, d_}};
}

bool Rectangle::contains(Point p) const noexcept {
  return p.x >= a_ && p.x <= b_ && p.y >= c_ && p.y <= d_;
}

bool Rectangle::contains(const Rectangle& o) const noexcept {
  return o.a_ >= a_ && o.b_ <= b_ && o.c_ >= c_ && o.d_ <= d_;
}

std::string Rectangle::label() const { return fmt_range(a_, b_) + "x" + fmt_range(c_, d_); }

Rectangle make_rectangle(double a, double b, double c, double d) { return Rectangle(a, b, c, d); }

HolderExponents HolderExponents::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("Hoelder exponent p must be > 1, got " + shortest(p));
  }
  return HolderExponents(p);
}

HolderExponents HolderExponents::from_q(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw InvalidArgument("Hoelder exponent q must be > 1, got " + shortest(q));
  }
  return HolderExponents(q / (q - 1.0));
}

WeightPair::WeightPair(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!(r1 >= 0.0 && r1 <= 1.0) || !(r2 >= 0.0 && r2 <= 1.0)) {
    throw InvalidArgument("weights must lie in [0,1], got (" + shortest(r1) + ", " +
                          shortest(r2) + ")");
  }
}

void OstrowskiAnchors::validate(const Rectangle& rect) const {
  const bool ok = rect.a() <= alpha1 && alpha1 < beta1 && beta1 <= rect.b() &&
                  rect.c() <= alpha2 && alpha2 < beta2 && beta2 <= rect.d();
  if (!ok) {
    throw AnchorOutOfRange("anchors (" + shortest(alpha1) + ", " + shortest(beta1) + ", " +
                           shortest(alpha2) + ", " + shortest(beta2) + ") outside " +
                           rect.label());
  }
}

void Tolerances::validate() const {
  if (!(quad_tol > 0.0) || !(identity_tol > 0.0) || !(margin_tol > 0.0) || !(fd_step > 0.0)) {
    throw InvalidArgument("tolerances must be strictly positive");
  }
  if (identity_tol < 10.0 * quad_tol) {
    throw InvalidArgument("identity_tol must be at least 10 x quad_tol");
  }
}

ConvexityClass::ConvexityClass(Kind kind, double s) : kind_(kind), s_(s) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw InvalidArgument("s must lie in (0,1], got " + shortest(s));
  }
}

bool ConvexityClass::carries_s() const noexcept {
  return kind_ == Kind::CoordSConvex || kind_ == Kind::SConvexFirst ||
         kind_ == Kind::SConvexSecond;
}

std::string ConvexityClass::name() const {
  switch (kind_) {
    case Kind::CoordConvex:
      return "CoordConvex";
    case Kind::JointConvex:
      return "JointConvex";
    case Kind::CoordSConvex:
      return "CoordSConvex(" + shortest(s_) + ")";
    case Kind::SConvexFirst:
      return "SConvexFirst(" + shortest(s_) + ")";
    case Kind::SConvexSecond:
      return "SConvexSecond(" + shortest(s_) + ")";
  }
  return "?";
}

bool SurfaceFunction::claims(const ConvexityClass& cls) const {
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

}  // namespace coordlab
