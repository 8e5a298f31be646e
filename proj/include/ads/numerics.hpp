#pragma once

// Generic numerical machinery used to cross-check the closed forms: a fixed-step
// RK4 integrator, central differences and the Lorentzian length functional.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ads/trajectory.hpp"

namespace ads {

using State = std::vector<double>;
using OdeRhs = std::function<State(double t, std::span<const double> y)>;

struct OdeProblem {
  OdeRhs rhs;
  State initial;
  double t0 = 0.0;
  double t1 = 0.0;
  double step = 1e-3;  // magnitude; integration runs backwards when t1 < t0
  // Record every k-th step in the dense output (0 keeps only the endpoints).
  std::size_t sample_stride = 1;

  std::size_t dimension() const { return initial.size(); }
};

struct OdeSolution {
  State final_state;
  std::vector<double> times;
  std::vector<State> states;
};

// Classical RK4 with a fixed step; the last step is shortened so that t1 is hit
// exactly. Throws NonFiniteState on any non-finite stage value and DomainError
// on a malformed problem.
OdeSolution rk4_integrate(const OdeProblem& prob);

// (f(x + h) - f(x - h)) / (2h).
std::vector<double> central_diff(const std::function<std::vector<double>(double)>& f, double x,
                                 double h);

// Composite trapezoid rule for the integral of sqrt(u1^2 - u2^2) over the stored
// samples. Values of u1^2 - u2^2 at or below kConeTolerance contribute 0.
double length_functional(const Trajectory& traj);

}  // namespace ads
