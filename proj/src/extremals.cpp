#include "ads/extremals.hpp"

#include <algorithm>
#include <cmath>

#include "ads/errors.hpp"

namespace ads {

std::string_view to_string(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::Normal: return "Normal";
    case ExtremalClass::AbnormalPlus: return "AbnormalPlus";
    case ExtremalClass::AbnormalMinus: return "AbnormalMinus";
  }
  return "?";
}

std::string_view to_string(MaximalityCase c) {
  switch (c) {
    case MaximalityCase::NoMax: return "NoMax";
    case MaximalityCase::AbnormalPlus: return "AbnormalPlus";
    case MaximalityCase::AbnormalMinus: return "AbnormalMinus";
    case MaximalityCase::NormalCone: return "NormalCone";
  }
  return "?";
}

StateRate hamiltonian_rhs(const ExtremalState& s) {
  const double chp = std::cosh(s.psi);
  return {std::sinh(s.psi), chp / std::cosh(s.theta), -chp * std::tanh(s.theta)};
}

double first_integral(const ExtremalState& s) { return std::cosh(s.psi) * std::cosh(s.theta); }

AdjointCovector adjoint_covector(const ExtremalState& s) {
  return {std::sinh(s.psi), -first_integral(s)};
}

ExtremalState normal_extremal(double psi0, double t) {
  const double s0 = std::sinh(psi0);
  const double c0 = std::cosh(psi0);
  const double sin_t = std::sin(t);
  const double cos_t = std::cos(t);

  ExtremalState out;
  out.theta = std::asinh(s0 * sin_t);
  out.psi = std::asinh(s0 * cos_t / std::sqrt(1.0 + s0 * s0 * sin_t * sin_t));

  // On each half-period [n pi, (n+1) pi), tau = t - n pi, the two-branch
  // continuation n pi + arctan(c0 tan tau) / (n+1) pi - arctan(c0 tan(pi - tau))
  // equals n pi + atan2(c0 sin tau, cos tau); the seam value pi/2 comes out
  // exactly from atan2(c0, 0).
  const double n = std::floor(t / kPi);
  const double tau = t - n * kPi;
  // sin(tau) is clamped at +0 so that tau rounding to just below 0 or just
  // above pi cannot flip atan2 onto the wrong branch.
  out.phi = n * kPi + std::atan2(c0 * std::max(0.0, std::sin(tau)), std::cos(tau));
  return out;
}

Point abnormal_extremal(ExtremalClass cls, const Point& q0, double t) {
  if (!(t >= 0.0)) throw DomainError("abnormal_extremal: t must be nonnegative");
  switch (cls) {
    case ExtremalClass::AbnormalPlus: {
      const double th = q0.theta + t;
      return {th, q0.phi + gudermannian(th) - gudermannian(q0.theta)};
    }
    case ExtremalClass::AbnormalMinus: {
      const double th = q0.theta - t;
      return {th, q0.phi - gudermannian(th) + gudermannian(q0.theta)};
    }
    case ExtremalClass::Normal: break;
  }
  throw DomainError("abnormal_extremal: class must be AbnormalPlus or AbnormalMinus");
}

Control abnormal_control(ExtremalClass cls) {
  switch (cls) {
    case ExtremalClass::AbnormalPlus: return {1.0, 1.0};
    case ExtremalClass::AbnormalMinus: return {1.0, -1.0};
    case ExtremalClass::Normal: break;
  }
  throw DomainError("abnormal_control: class must be AbnormalPlus or AbnormalMinus");
}

MaximalityCase maximality_case(double h1, double h2, int nu) {
  if (nu == 0) {
    // The linear form h1 u1 + h2 u2 is bounded above on the cone only on the
    // two boundary rays; everywhere else it is unbounded or the sup is not
    // attained at a nonzero control.
    if (h1 < 0.0 && std::abs(h1 - h2) <= kConeTolerance) return MaximalityCase::AbnormalMinus;
    if (h1 < 0.0 && std::abs(h1 + h2) <= kConeTolerance) return MaximalityCase::AbnormalPlus;
    return MaximalityCase::NoMax;
  }
  if (nu == -1) {
    if (h1 < 0.0 && std::abs(h1 * h1 - h2 * h2 - 1.0) <= kConeTolerance) {
      return MaximalityCase::NormalCone;
    }
    return MaximalityCase::NoMax;
  }
  throw DomainError("maximality_case: nu must be 0 or -1");
}

}  // namespace ads
