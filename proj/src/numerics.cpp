#include "ads/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ads/errors.hpp"

namespace ads {

namespace {

void check_finite(const State& y, double t) {
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw NonFiniteState("rk4: non-finite state at t = " + std::to_string(t));
    }
  }
}

State evaluate(const OdeRhs& rhs, double t, const State& y, std::size_t dim) {
  State k = rhs(t, y);
  if (k.size() != dim) throw DomainError("rk4: rhs returned a vector of the wrong dimension");
  check_finite(k, t);
  return k;
}

}  // namespace

OdeSolution rk4_integrate(const OdeProblem& prob) {
  const std::size_t dim = prob.dimension();
  if (dim == 0) throw DomainError("rk4: empty initial state");
  if (!(prob.step > 0.0) || !std::isfinite(prob.step)) throw DomainError("rk4: step must be positive");
  if (!std::isfinite(prob.t0) || !std::isfinite(prob.t1)) throw DomainError("rk4: non-finite time span");
  if (!prob.rhs) throw DomainError("rk4: missing rhs");

  const double span = prob.t1 - prob.t0;
  const double dir = span < 0.0 ? -1.0 : 1.0;
  const double h = dir * prob.step;
  // Tolerate span/step landing a hair above an integer.
  const auto n_steps = std::max<long long>(
      1, static_cast<long long>(std::ceil(std::abs(span) / prob.step - 1e-9)));

  OdeSolution sol;
  State y = prob.initial;
  check_finite(y, prob.t0);
  sol.times.push_back(prob.t0);
  sol.states.push_back(y);
  if (span == 0.0) {
    sol.final_state = y;
    return sol;
  }

  State tmp(dim);
  for (long long k = 0; k < n_steps; ++k) {
    const double t = prob.t0 + static_cast<double>(k) * h;
    const bool last = k + 1 == n_steps;
    const double hk = last ? prob.t1 - t : h;
    const double t_next = last ? prob.t1 : t + h;

    const State k1 = evaluate(prob.rhs, t, y, dim);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * hk * k1[i];
    const State k2 = evaluate(prob.rhs, t + 0.5 * hk, tmp, dim);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * hk * k2[i];
    const State k3 = evaluate(prob.rhs, t + 0.5 * hk, tmp, dim);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + hk * k3[i];
    const State k4 = evaluate(prob.rhs, t + hk, tmp, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] += hk / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    check_finite(y, t_next);

    const bool stride_hit =
        prob.sample_stride != 0 && (static_cast<std::size_t>(k + 1) % prob.sample_stride == 0);
    if (last || stride_hit) {
      sol.times.push_back(t_next);
      sol.states.push_back(y);
    }
  }
  sol.final_state = y;
  return sol;
}

std::vector<double> central_diff(const std::function<std::vector<double>(double)>& f, double x,
                                 double h) {
  if (!(h > 0.0)) throw DomainError("central_diff: step must be positive");
  const std::vector<double> plus = f(x + h);
  const std::vector<double> minus = f(x - h);
  if (plus.size() != minus.size()) throw DomainError("central_diff: inconsistent dimensions");
  std::vector<double> out(plus.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (plus[i] - minus[i]) / (2.0 * h);
  return out;
}

double length_functional(const Trajectory& traj) {
  const auto integrand = [](const Control& u) {
    const double q = u.u1 * u.u1 - u.u2 * u.u2;
    return q <= kConeTolerance ? 0.0 : std::sqrt(q);
  };
  double total = 0.0;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const auto& a = traj.samples[i - 1];
    const auto& b = traj.samples[i];
    total += 0.5 * (b.t - a.t) * (integrand(a.control) + integrand(b.control));
  }
  return total;
}

}  // namespace ads
