#include "ads/exp_map.hpp"

#include <algorithm>
#include <cmath>

#include "ads/errors.hpp"
#include "ads/extremals.hpp"

namespace ads {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Outside: return "Outside";
    case Region::LowerBoundary: return "LowerBoundary";
    case Region::Interior: return "Interior";
    case Region::UpperBoundary: return "UpperBoundary";
    case Region::Apex: return "Apex";
    case Region::Beyond: return "Beyond";
  }
  return "?";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left: return "Left";
    case Side::Right: return "Right";
    case Side::Center: return "Center";
  }
  return "?";
}

Point exp_map(const ExpCoords& c) {
  if (!(c.t > 0.0 && c.t < kPi)) throw DomainError("exp_map: t must lie in (0, pi)");
  return normal_extremal(c.psi0, c.t).point();
}

ExpCoords log_map(const Point& p) {
  if (classify(p).region != Region::Interior) {
    throw DomainError("log_map: point is not in the interior of the diamond");
  }
  // With T = tan^2(phi) and S = sinh(theta):
  //   sin^2 t0 = (T - S^2) / (1 + T) = sin^2(phi) - S^2 cos^2(phi)
  //   cos^2 t0 = cosh^2(theta) cos^2(phi)
  // so t0 = atan2(sqrt(.), cosh(theta) cos(phi)) covers phi <, =, > pi/2 at
  // once and never evaluates tan(pi/2).
  const double s = std::sinh(p.theta);
  const double sin_phi = std::sin(p.phi);
  const double cos_phi = std::cos(p.phi);
  double sin2_t = sin_phi * sin_phi - s * s * cos_phi * cos_phi;
  // Roundoff next to the boundary.
  if (sin2_t < 0.0 && sin2_t > -1e-12) sin2_t = 0.0;
  const double sin_t = std::sqrt(sin2_t);

  ExpCoords out;
  out.t = std::atan2(sin_t, std::cosh(p.theta) * cos_phi);
  // sinh(theta) = sinh(psi0) sin(t0).
  out.psi0 = std::asinh(s / sin_t);
  return out;
}

ReachabilityClass classify(const Point& p) {
  const double g = gudermannian(std::abs(p.theta));
  const double lower = g;
  const double upper = kPi - g;

  ReachabilityClass out;
  out.side = p.theta > kBoundaryTolerance    ? Side::Right
             : p.theta < -kBoundaryTolerance ? Side::Left
                                             : Side::Center;

  if (out.side == Side::Center && std::abs(p.phi - kPi) <= kBoundaryTolerance) {
    out.region = Region::Apex;
  } else if (std::abs(p.phi - lower) <= kBoundaryTolerance) {
    out.region = Region::LowerBoundary;
  } else if (p.phi < lower) {
    out.region = Region::Outside;
  } else if (std::abs(p.phi - upper) <= kBoundaryTolerance) {
    out.region = Region::UpperBoundary;
  } else if (p.phi > upper) {
    out.region = Region::Beyond;
  } else {
    out.region = Region::Interior;
  }
  return out;
}

}  // namespace ads
