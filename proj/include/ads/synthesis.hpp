#pragma once

// Optimal synthesis from the origin and the Lorentzian distance d((0,0), p).
//
//   Outside         no causal curve; d = 0 by convention
//   LowerBoundary   reached only by a lightlike abnormal curve; d = 0
//   Interior        unique normal extremal, d = arrival time in (0, pi)
//   Apex (0, pi)    a continuum of normal extremals, d = pi
//   UpperBoundary   d = pi, not attained
//   Beyond          d = +inf

#include <optional>
#include <stdexcept>
#include <string>

#include "ads/exp_map.hpp"
#include "ads/geometry.hpp"
#include "ads/trajectory.hpp"

namespace ads {

struct DistanceResult {
  ReachabilityClass cls;
  double value = 0.0;           // +inf for Beyond
  std::optional<double> time;   // arrival time of an optimal trajectory, if one exists

  bool attained() const { return time.has_value(); }
};

class NoOptimalTrajectory : public std::runtime_error {
 public:
  NoOptimalTrajectory(ReachabilityClass cls, double distance);

  ReachabilityClass cls() const { return cls_; }
  double distance() const { return distance_; }

 private:
  ReachabilityClass cls_;
  double distance_;
};

// Vertical coordinate of the optimal extremal ending at p. Requires p Interior.
double psi_for_target(const Point& p);

// Arrival time of the optimal extremal at p; identical to log_map(p).t.
double time_for_target(const Point& p);

DistanceResult lorentz_distance_from_origin(const Point& p);

// n_samples points uniform in t on the optimal trajectory from the origin to p.
// Interior targets give the normal extremal, lower-boundary targets the
// lightlike abnormal curve, the apex the psi0 = 0 representative (flagged as a
// continuum). Throws NoOptimalTrajectory for Outside/UpperBoundary/Beyond and
// DomainError for the origin itself or n_samples < 2.
Trajectory synthesis_trajectory(const Point& p, int n_samples);

// Length of the three-piece admissible curve to a Beyond target p: along the
// lower lightlike boundary out to |theta| = alpha, straight up with control
// (1, 0), then along the lightlike curve through p back to p. Only the middle
// piece has nonzero length:
//
//   L(alpha) = (phi1 + gd(|theta1|) - 2 gd(alpha)) cosh(alpha),
//
// which grows without bound. The curve itself exists for alpha >= |theta1|.
// Throws DomainError unless p is Beyond and alpha > 0.
double bypass_curve_length(const Point& p, double alpha);

// Smallest admissible index for upper_boundary_distance_sequence.
long long upper_boundary_min_index(double theta_tilde);

// d((0,0), q_n) for q_n = (theta~, pi - gd(|theta~|) - 1/n), a sequence of
// interior points approaching the upper boundary. Throws DomainError for
// theta~ == 0 or n below upper_boundary_min_index(theta~).
double upper_boundary_distance_sequence(double theta_tilde, long long n);

struct ReachabilityCheck {
  // p lies on or above both lightlike curves leaving q0
  // (phi - phi0 >= |gd(theta) - gd(theta0)|).
  bool reachable = false;
  // The shifted-cone formula phi - phi0 >= gd(|theta - theta0|); agrees with
  // `reachable` when theta0 == 0.
  bool shifted_cone_formula = false;
};

ReachabilityCheck reachable_from(const Point& q0, const Point& p);

}  // namespace ads
