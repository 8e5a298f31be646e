#pragma once

// Intrinsic geometry of the anti-de Sitter plane, the universal cover of the
// one-sheeted hyperboloid -x1^2 - x2^2 + x3^2 = -1 with metric
//
//   g = dtheta^2 - cosh^2(theta) dphi^2.
//
// phi is never reduced modulo 2*pi: points (theta, phi) and (theta, phi + 2*pi)
// are distinct on the cover.

#include <cmath>
#include <numbers>
#include <string_view>
#include <utility>

namespace ads {

inline constexpr double kPi = std::numbers::pi;

// Absolute tolerance on u1^2 - u2^2 below which a vector counts as lightlike.
inline constexpr double kConeTolerance = 1e-12;

struct Point {
  double theta = 0.0;
  double phi = 0.0;

  bool finite() const { return std::isfinite(theta) && std::isfinite(phi); }
};

// Coefficients on the coordinate basis (d/dtheta, d/dphi).
struct TangentVector {
  double d_theta = 0.0;
  double d_phi = 0.0;

  bool finite() const { return std::isfinite(d_theta) && std::isfinite(d_phi); }
};

inline TangentVector operator+(TangentVector a, TangentVector b) {
  return {a.d_theta + b.d_theta, a.d_phi + b.d_phi};
}
inline TangentVector operator-(TangentVector a, TangentVector b) {
  return {a.d_theta - b.d_theta, a.d_phi - b.d_phi};
}
inline TangentVector operator*(double s, TangentVector v) {
  return {s * v.d_theta, s * v.d_phi};
}
inline TangentVector operator-(TangentVector v) { return {-v.d_theta, -v.d_phi}; }

// Control (u1, u2) driving q' = u1 X1(q) + u2 X2(q).
struct Control {
  double u1 = 0.0;
  double u2 = 0.0;
};

// Admissible controls: u1 > 0 and u1^2 - u2^2 >= 0 (up to kConeTolerance).
bool in_control_cone(const Control& u);

struct AmbientPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

// Gudermannian gd(x) = arctan(sinh x); the lightlike curves through the origin
// are phi = gd(|theta|).
inline double gudermannian(double x) { return std::atan(std::sinh(x)); }

double metric_eval(const Point& p, const TangentVector& v, const TangentVector& w);

struct Frame {
  TangentVector x1;  // timelike, g(X1, X1) = -1
  TangentVector x2;  // spacelike, g(X2, X2) = 1
};

Frame frame(const Point& p);

// Coordinates of v in the orthonormal frame at p.
Control frame_coordinates(const Point& p, const TangentVector& v);

// Velocity of the control system at p.
TangentVector velocity(const Point& p, const Control& u);

enum class CausalClass {
  TimelikeFuture,
  LightlikeFuture,
  Spacelike,
  TimelikePast,
  LightlikePast,
  Zero,
};

std::string_view to_string(CausalClass c);

// Future means increasing phi (u1 > 0).
CausalClass causal_class(const TangentVector& v, const Point& p);

// Hyperboloid model. For tests and plotting only; nothing else depends on it.
AmbientPoint embed(const Point& p);

// -x1^2 - x2^2 + x3^2, equal to -1 on the hyperboloid.
double hyperboloid_form(const AmbientPoint& x);

}  // namespace ads
