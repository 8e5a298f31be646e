#include "ads/geometry.hpp"

namespace ads {

bool in_control_cone(const Control& u) {
  return u.u1 > 0.0 && u.u1 * u.u1 - u.u2 * u.u2 >= -kConeTolerance;
}

double metric_eval(const Point& p, const TangentVector& v, const TangentVector& w) {
  const double ch = std::cosh(p.theta);
  return v.d_theta * w.d_theta - ch * ch * (v.d_phi * w.d_phi);
}

Frame frame(const Point& p) {
  return {TangentVector{0.0, 1.0 / std::cosh(p.theta)}, TangentVector{1.0, 0.0}};
}

Control frame_coordinates(const Point& p, const TangentVector& v) {
  return {v.d_phi * std::cosh(p.theta), v.d_theta};
}

TangentVector velocity(const Point& p, const Control& u) {
  return {u.u2, u.u1 / std::cosh(p.theta)};
}

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::TimelikeFuture: return "TimelikeFuture";
    case CausalClass::LightlikeFuture: return "LightlikeFuture";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::TimelikePast: return "TimelikePast";
    case CausalClass::LightlikePast: return "LightlikePast";
    case CausalClass::Zero: return "Zero";
  }
  return "?";
}

CausalClass causal_class(const TangentVector& v, const Point& p) {
  if (v.d_theta == 0.0 && v.d_phi == 0.0) return CausalClass::Zero;
  const Control u = frame_coordinates(p, v);
  const double q = u.u1 * u.u1 - u.u2 * u.u2;
  if (q < -kConeTolerance) return CausalClass::Spacelike;
  const bool lightlike = q <= kConeTolerance;
  if (u.u1 > 0.0) return lightlike ? CausalClass::LightlikeFuture : CausalClass::TimelikeFuture;
  if (u.u1 < 0.0) return lightlike ? CausalClass::LightlikePast : CausalClass::TimelikePast;
  // u1 == 0 with u2 != 0 lies outside the cone regardless of tolerance.
  return CausalClass::Spacelike;
}

AmbientPoint embed(const Point& p) {
  const double ch = std::cosh(p.theta);
  return {ch * std::cos(p.phi), ch * std::sin(p.phi), std::sinh(p.theta)};
}

double hyperboloid_form(const AmbientPoint& x) {
  return -x.x1 * x.x1 - x.x2 * x.x2 + x.x3 * x.x3;
}

}  // namespace ads
