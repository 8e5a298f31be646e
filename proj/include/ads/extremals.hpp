#pragma once

// Pontryagin extremals of the time-maximization problem
//
//   q' = u1 X1(q) + u2 X2(q),  u1 > 0,  u1^2 - u2^2 >= 0,
//   integral of sqrt(u1^2 - u2^2) dt -> max.
//
// Normal extremals are parametrized by Lorentzian arclength (u1^2 - u2^2 = 1)
// and described through the vertical coordinate psi with h1 = -cosh(psi),
// h2 = sinh(psi); optimal controls are then u1 = cosh(psi), u2 = sinh(psi).
// Abnormal extremals are the lightlike curves, parametrized with u1 = 1.

#include <array>

#include "ads/geometry.hpp"
#include "ads/trajectory.hpp"

namespace ads {

struct ExtremalState {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;

  Point point() const { return {theta, phi}; }
};

// lambda = xi1 dtheta + xi2 dphi.
struct AdjointCovector {
  double xi1 = 0.0;
  double xi2 = 0.0;
};

struct StateRate {
  double d_theta = 0.0;
  double d_phi = 0.0;
  double d_psi = 0.0;
};

// (sinh psi, cosh psi / cosh theta, -cosh psi tanh theta).
StateRate hamiltonian_rhs(const ExtremalState& s);

// D = cosh(psi) cosh(theta), conserved along normal extremals; always >= 1.
double first_integral(const ExtremalState& s);

// xi1 = h2 = sinh psi, xi2 = h1 cosh theta = -D.
AdjointCovector adjoint_covector(const ExtremalState& s);

// Optimal control along a normal extremal.
inline Control normal_control(const ExtremalState& s) {
  return {std::cosh(s.psi), std::sinh(s.psi)};
}

// Unit-speed normal extremal from the origin with initial vertical coordinate
// psi0. Defined for every real t; phi is the continuous, strictly increasing
// continuation of arctan(cosh(psi0) tan t) through the seams t = (2n+1) pi / 2,
// with phi(n pi) = n pi.
ExtremalState normal_extremal(double psi0, double t);

// Lightlike curve from q0 after time t >= 0 with u1 = 1:
//   AbnormalPlus:  (theta0 + t, phi0 + gd(theta0 + t) - gd(theta0))
//   AbnormalMinus: (theta0 - t, phi0 - gd(theta0 - t) + gd(theta0))
// Throws DomainError for ExtremalClass::Normal or t < 0.
Point abnormal_extremal(ExtremalClass cls, const Point& q0, double t);

// Control driving an abnormal extremal: (1, +1) or (1, -1).
Control abnormal_control(ExtremalClass cls);

enum class MaximalityCase { NoMax, AbnormalPlus, AbnormalMinus, NormalCone };

std::string_view to_string(MaximalityCase c);

// Whether h1 u1 + h2 u2 - nu sqrt(u1^2 - u2^2) attains a maximum over the
// control cone, for multiplier nu in {0, -1}. Equalities are tested with
// kConeTolerance. Throws DomainError for any other nu.
//   nu = 0:  h1 = h2 < 0   -> AbnormalMinus (max 0 at u1 = -u2)
//            h1 = -h2 < 0  -> AbnormalPlus  (max 0 at u1 = u2)
//   nu = -1: h1^2 - h2^2 = 1, h1 < 0 -> NormalCone
MaximalityCase maximality_case(double h1, double h2, int nu);

}  // namespace ads
