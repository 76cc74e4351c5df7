#pragma once

// Value types shared by every module: the rectangle, evaluation points,
// exponent and weight parameters, tolerances and the surface functions
// whose inequalities are verified.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coordlab {

/// A point (x, y) of the plane.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// The closed rectangle [a,b] x [c,d] with a < b and c < d.
class Rectangle {
 public:
  /// Throws DegenerateDomain unless a < b and c < d (NaN endpoints included).
  Rectangle(double a, double b, double c, double d);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  double width() const noexcept { return b_ - a_; }
  double height() const noexcept { return d_ - c_; }
  double area() const noexcept { return width() * height(); }
  double mid_x() const noexcept { return 0.5 * (a_ + b_); }
  double mid_y() const noexcept { return 0.5 * (c_ + d_); }
  Point midpoint() const noexcept { return {mid_x(), mid_y()}; }

  /// Corners in the order (a,c), (b,c), (a,d), (b,d).
  std::array<Point, 4> corners() const noexcept;

  bool contains(Point p) const noexcept;
  bool contains(const Rectangle& other) const noexcept;
  /// True when the rectangle lies in the closed first quadrant.
  bool nonnegative() const noexcept { return a_ >= 0.0 && c_ >= 0.0; }

  /// Compact label "[a:b]x[c:d]" using shortest round-trip decimals.
  std::string label() const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  double a_, b_, c_, d_;
};

Rectangle make_rectangle(double a, double b, double c, double d);

/// Conjugate Hoelder exponents; q is always derived from p.
class HolderExponents {
 public:
  /// Throws InvalidArgument unless p > 1 and finite.
  static HolderExponents from_p(double p);
  /// Throws InvalidArgument unless q > 1 and finite.
  static HolderExponents from_q(double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return p_ / (p_ - 1.0); }

 private:
  explicit HolderExponents(double p) : p_(p) {}
  double p_;
};

/// Corner weights r1, r2 in [0,1] of the weighted corner deviation.
class WeightPair {
 public:
  /// Throws InvalidArgument unless both weights lie in [0,1].
  WeightPair(double r1, double r2);

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }

 private:
  double r1_, r2_;
};

/// Anchor abscissae of the anchored Ostrowski expression.
struct OstrowskiAnchors {
  double alpha1 = 0.0;
  double beta1 = 0.0;
  double alpha2 = 0.0;
  double beta2 = 0.0;

  /// Throws AnchorOutOfRange unless a <= alpha1 < beta1 <= b and c <= alpha2 < beta2 <= d.
  void validate(const Rectangle& rect) const;
};

/// Numerical budgets used across the library.
struct Tolerances {
  double quad_tol = 1e-12;      ///< absolute quadrature tolerance
  double identity_tol = 1e-9;   ///< identity residual budget
  double margin_tol = 1e-9;     ///< allowed bound violation
  double fd_step = 1e-5;        ///< relative finite-difference step

  /// Throws InvalidArgument unless all are positive and identity_tol >= 10 * quad_tol.
  void validate() const;
};

/// A convexity class claim. Classes carrying s require s in (0,1].
class ConvexityClass {
 public:
  enum class Kind { CoordConvex, CoordSConvex, SConvexFirst, SConvexSecond, JointConvex };

  static ConvexityClass coord_convex() { return ConvexityClass(Kind::CoordConvex, 1.0); }
  static ConvexityClass joint_convex() { return ConvexityClass(Kind::JointConvex, 1.0); }
  static ConvexityClass coord_sconvex(double s) { return ConvexityClass(Kind::CoordSConvex, s); }
  static ConvexityClass sconvex_first(double s) { return ConvexityClass(Kind::SConvexFirst, s); }
  static ConvexityClass sconvex_second(double s) { return ConvexityClass(Kind::SConvexSecond, s); }

  Kind kind() const noexcept { return kind_; }
  /// s for the s-convex kinds; 1 for the plain convex kinds.
  double s() const noexcept { return s_; }
  bool carries_s() const noexcept;

  std::string name() const;

  friend bool operator==(const ConvexityClass&, const ConvexityClass&) = default;

 private:
  ConvexityClass(Kind kind, double s);
  Kind kind_;
  double s_;
};

using SurfaceFn = std::function<double(double, double)>;

/// A bivariate function, optionally with its analytic mixed partial d2f/dxdy.
struct SurfaceFunction {
  SurfaceFn eval;
  SurfaceFn mixed;  ///< empty when no analytic mixed partial is known
  std::vector<ConvexityClass> classes;
  Rectangle valid_on{0.0, 1.0, 0.0, 1.0};
  std::string label;

  bool has_mixed() const noexcept { return static_cast<bool>(mixed); }
  bool claims(const ConvexityClass& cls) const;
  double operator()(double x, double y) const { return eval(x, y); }
};

}  // namespace coordlab
