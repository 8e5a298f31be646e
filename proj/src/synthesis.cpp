#include "ads/synthesis.hpp"

#include <cmath>
#include <limits>

#include "ads/errors.hpp"
#include "ads/extremals.hpp"

namespace ads {

namespace {

std::string no_trajectory_message(ReachabilityClass cls, double distance) {
  std::string msg(to_string(cls.region));
  msg += ": distance=";
  msg += std::isinf(distance) ? std::string("inf") : std::to_string(distance);
  return msg;
}

void require_interior(const Point& p, const char* what) {
  if (classify(p).region != Region::Interior) {
    throw DomainError(std::string(what) + ": point is not in the interior of the diamond");
  }
}

Trajectory uniform_samples(int n, double duration, auto&& sample_at) {
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = i + 1 == n ? duration : duration * i / (n - 1);
    traj.samples.push_back(sample_at(t));
  }
  return traj;
}

}  // namespace

NoOptimalTrajectory::NoOptimalTrajectory(ReachabilityClass cls, double distance)
    : std::runtime_error(no_trajectory_message(cls, distance)), cls_(cls), distance_(distance) {}

double psi_for_target(const Point& p) {
  require_interior(p, "psi_for_target");
  return log_map(p).psi0;
}

double time_for_target(const Point& p) {
  require_interior(p, "time_for_target");
  return log_map(p).t;
}

DistanceResult lorentz_distance_from_origin(const Point& p) {
  DistanceResult out;
  out.cls = classify(p);
  switch (out.cls.region) {
    case Region::Outside:
      out.value = 0.0;
      break;
    case Region::LowerBoundary:
      out.value = 0.0;
      out.time = 0.0;
      break;
    case Region::Interior:
      out.value = time_for_target(p);
      out.time = out.value;
      break;
    case Region::Apex:
      out.value = kPi;
      out.time = kPi;
      break;
    case Region::UpperBoundary:
      out.value = kPi;
      break;
    case Region::Beyond:
      out.value = std::numeric_limits<double>::infinity();
      break;
  }
  return out;
}

Trajectory synthesis_trajectory(const Point& p, int n_samples) {
  if (n_samples < 2) throw DomainError("synthesis_trajectory: need at least 2 samples");
  const ReachabilityClass cls = classify(p);

  switch (cls.region) {
    case Region::Interior: {
      const ExpCoords c = log_map(p);
      Trajectory traj = uniform_samples(n_samples, c.t, [&](double t) {
        const ExtremalState s = normal_extremal(c.psi0, t);
        return TrajectorySample{t, s.point(), normal_control(s)};
      });
      traj.kind = ExtremalClass::Normal;
      return traj;
    }
    case Region::Apex: {
      Trajectory traj = uniform_samples(n_samples, kPi, [](double t) {
        return TrajectorySample{t, Point{0.0, t}, Control{1.0, 0.0}};
      });
      traj.kind = ExtremalClass::Normal;
      traj.continuum = true;
      return traj;
    }
    case Region::LowerBoundary: {
      if (cls.side == Side::Center) {
        throw DomainError("synthesis_trajectory: target coincides with the origin");
      }
      const ExtremalClass kind =
          cls.side == Side::Right ? ExtremalClass::AbnormalPlus : ExtremalClass::AbnormalMinus;
      const Point origin{0.0, 0.0};
      Trajectory traj = uniform_samples(n_samples, std::abs(p.theta), [&](double t) {
        return TrajectorySample{t, abnormal_extremal(kind, origin, t), abnormal_control(kind)};
      });
      traj.kind = kind;
      return traj;
    }
    case Region::Outside:
    case Region::UpperBoundary:
    case Region::Beyond:
      break;
  }
  throw NoOptimalTrajectory(cls, lorentz_distance_from_origin(p).value);
}

double bypass_curve_length(const Point& p, double alpha) {
  if (classify(p).region != Region::Beyond) {
    throw DomainError("bypass_curve_length: target must lie beyond the upper boundary");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("bypass_curve_length: alpha must be positive");
  }
  // The three sign cases of theta1 share one expression once the lightlike
  // pieces are written with gd(|theta1|).
  return (p.phi + gudermannian(std::abs(p.theta)) - 2.0 * gudermannian(alpha)) * std::cosh(alpha);
}

long long upper_boundary_min_index(double theta_tilde) {
  return static_cast<long long>(
      std::ceil(1.0 / (kPi / 2.0 - gudermannian(std::abs(theta_tilde)))));
}

double upper_boundary_distance_sequence(double theta_tilde, long long n) {
  if (theta_tilde == 0.0 || !std::isfinite(theta_tilde)) {
    throw DomainError("upper_boundary_distance_sequence: theta must be finite and nonzero");
  }
  if (n < upper_boundary_min_index(theta_tilde)) {
    throw DomainError("upper_boundary_distance_sequence: n below the admissible start index");
  }
  const Point qn{theta_tilde,
                 kPi - gudermannian(std::abs(theta_tilde)) - 1.0 / static_cast<double>(n)};
  return time_for_target(qn);
}

ReachabilityCheck reachable_from(const Point& q0, const Point& p) {
  const double rise = p.phi - q0.phi;
  ReachabilityCheck out;
  out.reachable =
      rise >= std::abs(gudermannian(p.theta) - gudermannian(q0.theta)) - kBoundaryTolerance;
  out.shifted_cone_formula =
      rise >= gudermannian(std::abs(p.theta - q0.theta)) - kBoundaryTolerance;
  return out;
}

}  // namespace ads
