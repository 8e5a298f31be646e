#include "ads/acceptance.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ads/errors.hpp"
#include "ads/exp_map.hpp"
#include "ads/extremals.hpp"
#include "ads/synthesis.hpp"

namespace ads::acceptance {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

CriterionResult make(int id, std::string name, bool passed, std::string detail) {
  return {id, std::move(name), passed, std::move(detail)};
}

// State (theta, phi, psi) of the normal Hamiltonian flow.
OdeProblem hamiltonian_problem(double psi0, double t1, double step) {
  OdeProblem prob;
  prob.rhs = [](double, std::span<const double> y) {
    const StateRate r = hamiltonian_rhs({y[0], y[1], y[2]});
    return State{r.d_theta, r.d_phi, r.d_psi};
  };
  prob.initial = {0.0, 0.0, psi0};
  prob.t0 = 0.0;
  prob.t1 = t1;
  prob.step = step;
  return prob;
}

// theta' = u2, phi' = u1 / cosh(theta) with constant control.
OdeProblem control_problem(const Point& start, const Control& u, double t0, double t1,
                           double step) {
  OdeProblem prob;
  prob.rhs = [u](double, std::span<const double> y) {
    return State{u.u2, u.u1 / std::cosh(y[0])};
  };
  prob.initial = {start.theta, start.phi};
  prob.t0 = t0;
  prob.t1 = t1;
  prob.step = step;
  return prob;
}

Trajectory to_trajectory(const OdeSolution& sol, const Control& u) {
  Trajectory traj;
  for (std::size_t i = 0; i < sol.times.size(); ++i) {
    traj.samples.push_back({sol.times[i], Point{sol.states[i][0], sol.states[i][1]}, u});
  }
  return traj;
}

// --- 1 ----------------------------------------------------------------------
CriterionResult closed_form_vs_oracle() {
  const double psis[] = {-3.0, -1.0, -0.5, 0.5, 1.0, 3.0};
  const double times[] = {0.5, kPi / 2.0, 2.0, 3.0};
  double worst = 0.0;
  for (double psi0 : psis) {
    for (double t : times) {
      OdeProblem prob = hamiltonian_problem(psi0, t, 1e-4);
      prob.sample_stride = 0;
      const State y = rk4_integrate(prob).final_state;
      const ExtremalState s = normal_extremal(psi0, t);
      worst = std::max({worst, std::abs(y[0] - s.theta), std::abs(y[1] - s.phi),
                        std::abs(y[2] - s.psi)});
    }
  }
  return make(1, "closed-form extremals vs RK4 oracle", worst < 1e-8,
              "max component error " + fmt(worst) + " (tol 1e-8)");
}

// --- 2 ----------------------------------------------------------------------
CriterionResult first_integral_drift() {
  const double psis[] = {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0};
  const double t_end = 3.0 * kPi;
  double closed = 0.0;
  double rk4 = 0.0;
  for (double psi0 : psis) {
    const double d0 = std::cosh(psi0);
    for (int i = 0; i < 1000; ++i) {
      const double t = t_end * i / 999.0;
      closed = std::max(closed, std::abs(first_integral(normal_extremal(psi0, t)) - d0));
    }
    OdeProblem prob = hamiltonian_problem(psi0, t_end, 1e-4);
    prob.sample_stride = 100;
    const OdeSolution sol = rk4_integrate(prob);
    for (const State& y : sol.states) {
      rk4 = std::max(rk4, std::abs(first_integral({y[0], y[1], y[2]}) - d0));
    }
  }
  return make(2, "first integral cosh(psi) cosh(theta) conserved", closed < 1e-9 && rk4 < 1e-9,
              "max drift closed form " + fmt(closed) + ", RK4 " + fmt(rk4) + " (tol 1e-9)");
}

// --- 3 ----------------------------------------------------------------------
CriterionResult exp_log_roundtrip() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> psi_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> t_dist(0.01, kPi - 0.01);
  double coord_err = 0.0;
  double point_err = 0.0;
  int not_interior = 0;
  for (int i = 0; i < 10000; ++i) {
    const ExpCoords c{psi_dist(rng), t_dist(rng)};
    const Point p = exp_map(c);
    if (classify(p).region != Region::Interior) {
      ++not_interior;
      continue;
    }
    const ExpCoords back = log_map(p);
    coord_err = std::max({coord_err, std::abs(back.psi0 - c.psi0), std::abs(back.t - c.t)});
    const Point again = exp_map(back);
    point_err = std::max({point_err, std::abs(again.theta - p.theta), std::abs(again.phi - p.phi)});
  }
  const bool ok = not_interior == 0 && coord_err < 1e-9 && point_err < 1e-9;
  return make(3, "exp/log roundtrip on 1e4 interior points", ok,
              "max error (psi0,t) " + fmt(coord_err) + ", point " + fmt(point_err) +
                  ", non-interior images " + std::to_string(not_interior) + " (tol 1e-9)");
}

// --- 4 ----------------------------------------------------------------------
CriterionResult distance_table() {
  const DistanceResult quarter = lorentz_distance_from_origin({0.0, kPi / 2.0});
  const DistanceResult lower = lorentz_distance_from_origin({2.0, gudermannian(2.0)});
  const DistanceResult apex = lorentz_distance_from_origin({0.0, kPi});
  const DistanceResult beyond = lorentz_distance_from_origin({1.0, 3.0});
  const bool ok = quarter.cls.region == Region::Interior &&
                  std::abs(quarter.value - kPi / 2.0) <= 1e-12 &&
                  lower.cls.region == Region::LowerBoundary && lower.value == 0.0 &&
                  apex.cls.region == Region::Apex && std::abs(apex.value - kPi) <= 1e-12 &&
                  beyond.cls.region == Region::Beyond && std::isinf(beyond.value) &&
                  beyond.value > 0.0;
  std::ostringstream os;
  os << std::setprecision(17) << "d(0,pi/2)=" << quarter.value << " d(2,gd 2)=" << lower.value
     << " d(0,pi)=" << apex.value << " d(1,3)=" << beyond.value;
  return make(4, "distance table", ok, os.str());
}

// --- 5 ----------------------------------------------------------------------
CriterionResult upper_boundary_limit() {
  bool increasing = true;
  double prev = -1.0;
  double last = 0.0;
  for (long long n = 10; n <= 1000000; n *= 10) {
    last = upper_boundary_distance_sequence(1.0, n);
    if (!(last > prev)) increasing = false;
    prev = last;
  }
  const double gap = kPi - last;
  return make(5, "upper-boundary sequence tends to pi", increasing && gap < 0.01,
              std::string("strictly increasing: ") + (increasing ? "yes" : "no") +
                  ", pi - d(q_1e6) = " + fmt(gap) + " (tol 0.01)");
}

// --- 6 ----------------------------------------------------------------------
CriterionResult bypass_family() {
  const Point target{1.0, 2.8};
  double alpha_hit = -1.0;
  for (double alpha = 0.5; alpha <= 10.0 + 1e-12; alpha += 0.5) {
    if (bypass_curve_length(target, alpha) > 1e3) {
      alpha_hit = alpha;
      break;
    }
  }
  double worst_rel = 0.0;
  double worst_end = 0.0;
  for (double alpha : {1.0, 2.0, 5.0}) {
    const double closed = bypass_curve_length(target, alpha);
    const SampledBypass sampled = sampled_bypass_length(target, alpha);
    worst_rel = std::max(worst_rel, std::abs(sampled.length - closed) / closed);
    worst_end = std::max(worst_end, sampled.endpoint_error);
  }
  const bool ok = alpha_hit > 0.0 && worst_rel < 1e-3 && worst_end < 1e-6;
  return make(6, "unbounded bypass-curve lengths", ok,
              "L > 1e3 first at alpha = " + std::to_string(alpha_hit) +
                  ", max rel. error vs sampled curve " + fmt(worst_rel) + " (tol 1e-3)");
}

// --- 7 ----------------------------------------------------------------------
CriterionResult killing_suite(const std::array<VectorField, 3>& fields) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(-2.0, 2.0);
  std::uniform_real_distribution<double> ph(-3.0, 3.0);
  const CoordinateField coords[] = {CoordinateField::DTheta, CoordinateField::DPhi};

  double residual = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Point p{th(rng), ph(rng)};
    for (const VectorField& f : fields) {
      for (CoordinateField v : coords) {
        for (CoordinateField w : coords) {
          residual = std::max(residual, std::abs(killing_residual(f, p, v, w)));
        }
      }
    }
  }

  double bracket = 0.0;
  const auto diff = [](TangentVector a, TangentVector b) {
    return std::max(std::abs(a.d_theta - b.d_theta), std::abs(a.d_phi - b.d_phi));
  };
  for (int i = 0; i < 100; ++i) {
    const Point p{th(rng), ph(rng)};
    const TangentVector k1 = fields[0].value(p);
    const TangentVector k2 = fields[1].value(p);
    const TangentVector k3 = fields[2].value(p);
    bracket = std::max({bracket, diff(lie_bracket(fields[0], fields[1], p), k3),
                        diff(lie_bracket(fields[1], fields[2], p), -k1),
                        diff(lie_bracket(fields[2], fields[0], p), k2)});
  }
  return make(7, "Killing equation and sl(2) bracket table", residual < 1e-6 && bracket < 1e-12,
              "max residual " + fmt(residual) + " (tol 1e-6), max bracket error " + fmt(bracket) +
                  " (tol 1e-12)");
}

// --- 8 ----------------------------------------------------------------------
CriterionResult transport() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double translation = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double phi0 = -3.0 + 6.0 * unit(rng);
    const Point q1{-2.0 + 4.0 * unit(rng), phi0 - 0.5 + 4.0 * unit(rng)};
    const DistanceResult a = transport_distance({0.0, phi0}, q1);
    const DistanceResult b = lorentz_distance_from_origin({q1.theta, q1.phi - phi0});
    const double err = (std::isinf(a.value) && std::isinf(b.value)) ? 0.0
                       : a.cls.region != b.cls.region
                           ? std::numeric_limits<double>::infinity()
                           : std::abs(a.value - b.value);
    translation = std::max(translation, err);
  }

  double recovered = 0.0;
  double halving = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Point q0{-2.0 + 4.0 * unit(rng), -3.0 + 6.0 * unit(rng)};
    const ExpCoords c{-2.0 + 4.0 * unit(rng), 0.1 + (kPi - 0.2) * unit(rng)};
    const Point q1 = apply_route(inverse_route(route_to_origin(q0)), exp_map(c));
    const DistanceResult d = transport_distance(q0, q1);
    const DistanceResult d_half = transport_distance(q0, q1, kDefaultFlowStep / 2.0);
    recovered = std::max(recovered, d.cls.region == Region::Interior
                                        ? std::abs(d.value - c.t)
                                        : std::numeric_limits<double>::infinity());
    halving = std::max(halving, std::abs(d.value - d_half.value));
  }
  const bool ok = translation < 1e-9 && recovered < 1e-5 && halving < 1e-8;
  return make(8, "transport distance via Killing isometries", ok,
              "phi-translation " + fmt(translation) + " (tol 1e-9), recovered t " +
                  fmt(recovered) + " (tol 1e-5), step halving " + fmt(halving) + " (tol 1e-8)");
}

// --- 9 ----------------------------------------------------------------------
CriterionResult geodesic_additivity() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double psi0 = -3.0 + 6.0 * unit(rng);
    const double t = 0.05 + (kPi - 0.1) * unit(rng);
    const double s = (0.1 + 0.8 * unit(rng)) * t;
    const Point q1 = exp_map({psi0, t});
    const Point mid = normal_extremal(psi0, s).point();
    const double sum =
        lorentz_distance_from_origin(mid).value + transport_distance(mid, q1).value;
    worst = std::max(worst, std::abs(sum - t));
  }
  return make(9, "distance additivity along optimal geodesics", worst < 1e-5,
              "max |d(0,m) + d(m,q1) - t| " + fmt(worst) + " (tol 1e-5)");
}

// --- 10 ---------------------------------------------------------------------
CriterionResult lightlike_boundary() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double norm = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ExtremalClass cls = i % 2 == 0 ? ExtremalClass::AbnormalPlus : ExtremalClass::AbnormalMinus;
    const Point q0{-1.0 + 2.0 * unit(rng), -1.0 + 2.0 * unit(rng)};
    const double t = 0.01 + 2.0 * unit(rng);
    const auto f = [&](double tau) {
      const Point p = abnormal_extremal(cls, q0, tau);
      return std::vector<double>{p.theta, p.phi};
    };
    // Richardson-extrapolated central difference, O(h^4).
    const std::vector<double> coarse = central_diff(f, t, 2e-3);
    const std::vector<double> fine = central_diff(f, t, 1e-3);
    const TangentVector v{(4.0 * fine[0] - coarse[0]) / 3.0, (4.0 * fine[1] - coarse[1]) / 3.0};
    norm = std::max(norm, std::abs(metric_eval(abnormal_extremal(cls, q0, t), v, v)));
  }

  double length = 0.0;
  for (const Point& target : {Point{2.0, gudermannian(2.0)}, Point{-1.5, gudermannian(1.5)},
                              Point{0.3, gudermannian(0.3)}}) {
    length = std::max(length, std::abs(length_functional(synthesis_trajectory(target, 200))));
  }
  return make(10, "abnormal curves are lightlike with zero length", norm < 1e-10 && length < 1e-12,
              "max |g(v,v)| " + fmt(norm) + " (tol 1e-10), max length " + fmt(length) +
                  " (tol 1e-12)");
}

// --- 11 ---------------------------------------------------------------------
struct CliOutcome {
  int exit_code = -1;
  std::string out;
};

CliOutcome run_subprocess(const std::string& exe, const std::string& args) {
  CliOutcome r;
  const std::string cmd = "'" + exe + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliOutcome run_in_process(const CliRunner& cli, const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliOutcome r;
  r.exit_code = cli(args, out, err);
  r.out = out.str();
  return r;
}

std::string fifteen_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

CriterionResult cli_contract(const Config& config) {
  const bool external = !config.cli_executable.empty();
  if (!external && !config.cli) {
    return make(11, "CLI contract", false, "no CLI available to check");
  }
  const auto invoke = [&](const std::vector<std::string>& args) {
    if (!external) return run_in_process(config.cli, args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    return run_subprocess(config.cli_executable, joined);
  };

  std::string detail;
  bool ok = true;
  if (external) {
    const CliOutcome self = invoke({"selftest"});
    ok = ok && self.exit_code == 0;
    detail += "selftest exit " + std::to_string(self.exit_code) + "; ";
  }

  const CliOutcome dist = invoke({"dist", "0", "1.5707963267948966"});
  bool dist_ok = false;
  try {
    const auto j = nlohmann::json::parse(dist.out);
    const double d = j.at("distance").get<double>();
    dist_ok = dist.exit_code == 0 && fifteen_digits(d) == fifteen_digits(kPi / 2.0);
    detail += "dist 0 pi/2 -> " + fifteen_digits(d) + "; ";
  } catch (const std::exception&) {
    detail += "dist output unparsable; ";
  }
  ok = ok && dist_ok;

  const CliOutcome traj = invoke({"traj", "1", "3.0"});
  ok = ok && traj.exit_code == 2;
  detail += "traj 1 3.0 exit " + std::to_string(traj.exit_code);
  if (!external) detail += " (selftest not re-entered in-process)";
  return make(11, "CLI contract", ok, detail);
}

}  // namespace

bool Report::all_passed() const {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

SampledBypass sampled_bypass_length(const Point& target, double alpha, double step) {
  if (alpha < std::abs(target.theta)) {
    throw DomainError("sampled_bypass_length: the curve needs alpha >= |theta1|");
  }
  const double sign = target.theta >= 0.0 ? 1.0 : -1.0;
  const Control out_ctrl{1.0, sign};
  const Control up_ctrl{1.0, 0.0};
  const Control back_ctrl{1.0, -sign};

  // Leg 1: along the lower boundary from the origin.
  const OdeSolution leg1 = rk4_integrate(control_problem({0.0, 0.0}, out_ctrl, 0.0, alpha, step));
  const Point corner{leg1.final_state[0], leg1.final_state[1]};

  // Leg 3 run backwards from the target until |theta| = alpha.
  const double back_duration = alpha - std::abs(target.theta);
  OdeProblem back = control_problem(target, back_ctrl, back_duration, 0.0, step);
  back.sample_stride = 0;
  const State junction = rk4_integrate(back).final_state;

  // Leg 2: theta stays at the corner value, phi' = 1 / cosh(theta).
  const double up_duration = (junction[1] - corner.phi) * std::cosh(corner.theta);
  if (up_duration < 0.0) throw DomainError("sampled_bypass_length: target not beyond the cone");
  const double t2 = alpha + up_duration;
  const OdeSolution leg2 = rk4_integrate(control_problem(corner, up_ctrl, alpha, t2, step));
  const Point top{leg2.final_state[0], leg2.final_state[1]};
  const OdeSolution leg3 =
      rk4_integrate(control_problem(top, back_ctrl, t2, t2 + back_duration, step));

  SampledBypass out;
  out.length = length_functional(to_trajectory(leg1, out_ctrl)) +
               length_functional(to_trajectory(leg2, up_ctrl)) +
               length_functional(to_trajectory(leg3, back_ctrl));
  out.endpoint_error = std::hypot(leg3.final_state[0] - target.theta,
                                  leg3.final_state[1] - target.phi);
  return out;
}

Report run(const Config& config) {
  Report report;
  const auto guarded = [&](int id, const char* name, auto&& fn) {
    try {
      report.results.push_back(fn());
    } catch (const std::exception& e) {
      report.results.push_back(make(id, name, false, std::string("exception: ") + e.what()));
    }
  };
  guarded(1, "closed-form extremals vs RK4 oracle", closed_form_vs_oracle);
  guarded(2, "first integral conserved", first_integral_drift);
  guarded(3, "exp/log roundtrip", exp_log_roundtrip);
  guarded(4, "distance table", distance_table);
  guarded(5, "upper-boundary sequence", upper_boundary_limit);
  guarded(6, "bypass-curve lengths", bypass_family);
  guarded(7, "Killing suite", [&] { return killing_suite(config.killing_fields); });
  guarded(8, "transport distance", transport);
  guarded(9, "geodesic additivity", geodesic_additivity);
  guarded(10, "lightlike boundary", lightlike_boundary);
  guarded(11, "CLI contract", [&] { return cli_contract(config); });
  return report;
}

void print(const Report& report, std::ostream& out) {
  for (const CriterionResult& r : report.results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.name << " -- "
        << r.detail << '\n';
  }
  out << (report.all_passed() ? "all criteria passed" : "some criteria FAILED") << '\n';
}

}  // namespace ads::acceptance
