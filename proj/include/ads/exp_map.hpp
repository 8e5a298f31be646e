#pragma once

// The exponential map (psi0, t) -> endpoint of the unit-speed normal extremal,
// a diffeomorphism of R x (0, pi) onto the diamond
//
//   C' = { gd(|theta|) < phi < pi - gd(|theta|) },
//
// its inverse, and the classification of target points relative to the causal
// structure of the origin.

#include <string_view>

#include "ads/geometry.hpp"

namespace ads {

// Absolute tolerance on phi for boundary membership.
inline constexpr double kBoundaryTolerance = 1e-10;

struct ExpCoords {
  double psi0 = 0.0;
  double t = 0.0;
};

enum class Region { Outside, LowerBoundary, Interior, UpperBoundary, Apex, Beyond };
enum class Side { Left, Right, Center };

std::string_view to_string(Region r);
std::string_view to_string(Side s);

struct ReachabilityClass {
  Region region = Region::Outside;
  Side side = Side::Center;  // sign of theta; Center when |theta| <= kBoundaryTolerance

  friend bool operator==(const ReachabilityClass&, const ReachabilityClass&) = default;
};

// Throws DomainError unless t lies in (0, pi).
Point exp_map(const ExpCoords& c);

// Inverse of exp_map on C'. Throws DomainError unless classify(p) is Interior.
ExpCoords log_map(const Point& p);

// Boundary checks use kBoundaryTolerance. The origin is LowerBoundary/Center;
// (0, pi) is Apex. Where the diamond is thinner than the tolerance
// (|theta| > ~23) lower-boundary membership wins.
ReachabilityClass classify(const Point& p);

}  // namespace ads
