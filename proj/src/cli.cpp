#include "ads/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ads/acceptance.hpp"
#include "ads/errors.hpp"
#include "ads/exp_map.hpp"
#include "ads/killing.hpp"
#include "ads/synthesis.hpp"

namespace ads::cli {

namespace {

using nlohmann::json;

constexpr int kJsonSchemaVersion = 1;

// 17 significant digits round-trips every double.
std::string number(double v) {
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json json_number(double v) {
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  return v;
}

struct Bounds {
  std::vector<double> theta{-1.0, 1.0};
  std::vector<double> phi{0.0, kPi};
  int nx = 41;
  int ny = 41;
};

void add_bounds(CLI::App* cmd, Bounds& b) {
  cmd->add_option("--theta", b.theta, "theta range: min max")->expected(2)->capture_default_str();
  cmd->add_option("--phi", b.phi, "phi range: min max")->expected(2)->capture_default_str();
  cmd->add_option("--nx", b.nx, "grid points along theta")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--ny", b.ny, "grid points along phi")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
}

double grid_coord(const std::vector<double>& range, int i, int n) {
  return range[0] + (range[1] - range[0]) * i / (n - 1);
}

bool all_finite(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

// ADS_LORENTZ_STEP overrides the Killing-flow RK4 step.
double flow_step_from_env() {
  const char* raw = std::getenv("ADS_LORENTZ_STEP");
  if (raw == nullptr || *raw == '\0') return kDefaultFlowStep;
  char* end = nullptr;
  const double step = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(step > 0.0) || step > kMaxFlowStep) {
    throw DomainError("ADS_LORENTZ_STEP must be a number in (0, 1e-2]");
  }
  return step;
}

int cmd_traj(const Point& target, int samples, const std::string& format, std::ostream& out,
             std::ostream& err) {
  if (!target.finite()) {
    err << "error: target coordinates must be finite\n";
    return kUsage;
  }
  Trajectory traj;
  try {
    traj = synthesis_trajectory(target, samples);
  } catch (const NoOptimalTrajectory& e) {
    err << to_string(e.cls().region) << ": distance=" << number(e.distance()) << '\n';
    return kNoOptimalTrajectory;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (format == "json") {
    json rows = json::array();
    for (const auto& s : traj.samples) {
      rows.push_back({{"t", s.t},
                      {"theta", s.point.theta},
                      {"phi", s.point.phi},
                      {"u1", s.control.u1},
                      {"u2", s.control.u2}});
    }
    const DistanceResult d = lorentz_distance_from_origin(target);
    json doc = {{"schema_version", kJsonSchemaVersion},
                {"class", std::string(to_string(d.cls.region))},
                {"kind", std::string(to_string(traj.kind))},
                {"continuum", traj.continuum},
                {"distance", json_number(d.value)},
                {"samples", rows}};
    out << doc.dump() << '\n';
    return kOk;
  }

  out << "t,theta,phi,u1,u2\n";
  for (const auto& s : traj.samples) {
    out << number(s.t) << ',' << number(s.point.theta) << ',' << number(s.point.phi) << ','
        << number(s.control.u1) << ',' << number(s.control.u2) << '\n';
  }
  return kOk;
}

int cmd_dist(const Point& target, const std::vector<double>& from, std::ostream& out,
             std::ostream& err) {
  if (!target.finite() || (!from.empty() && !all_finite({from[0], from[1]}))) {
    err << "error: coordinates must be finite\n";
    return kUsage;
  }
  const DistanceResult d = from.empty()
                               ? lorentz_distance_from_origin(target)
                               : transport_distance({from[0], from[1]}, target, flow_step_from_env());
  json doc = {{"class", std::string(to_string(d.cls.region))},
              {"side", std::string(to_string(d.cls.side))},
              {"distance", json_number(d.value)},
              {"time_attained", d.time ? json(*d.time) : json(nullptr)}};
  out << doc.dump() << '\n';
  return kOk;
}

int cmd_grid(const std::string& what, const Bounds& b, std::ostream& out, std::ostream& err) {
  if (!all_finite({b.theta[0], b.theta[1], b.phi[0], b.phi[1]})) {
    err << "error: bounds must be finite\n";
    return kUsage;
  }
  const bool dist = what == "dist";
  out << (dist ? "theta,phi,class,distance\n" : "theta,phi,class,side\n");
  for (int j = 0; j < b.ny; ++j) {
    const double phi = grid_coord(b.phi, j, b.ny);
    for (int i = 0; i < b.nx; ++i) {
      const Point p{grid_coord(b.theta, i, b.nx), phi};
      out << number(p.theta) << ',' << number(p.phi) << ',';
      if (dist) {
        const DistanceResult d = lorentz_distance_from_origin(p);
        out << to_string(d.cls.region) << ',' << number(d.value) << '\n';
      } else {
        const ReachabilityClass c = classify(p);
        out << to_string(c.region) << ',' << to_string(c.side) << '\n';
      }
    }
  }
  return kOk;
}

int cmd_stream(int field, const Bounds& b, std::ostream& out, std::ostream& err) {
  if (!all_finite({b.theta[0], b.theta[1], b.phi[0], b.phi[1]})) {
    err << "error: bounds must be finite\n";
    return kUsage;
  }
  const KillingField k = field == 1 ? KillingField::K1
                         : field == 2 ? KillingField::K2
                                      : KillingField::K3;
  out << "theta,phi,v_theta,v_phi\n";
  for (const StreamSample& s :
       stream_samples(k, b.theta[0], b.theta[1], b.phi[0], b.phi[1], b.nx, b.ny)) {
    out << number(s.point.theta) << ',' << number(s.point.phi) << ',' << number(s.vector.d_theta)
        << ',' << number(s.vector.d_phi) << '\n';
  }
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  acceptance::Config config;
  config.cli = [](const std::vector<std::string>& args, std::ostream& o, std::ostream& e) {
    return run(args, o, e);
  };
  const acceptance::Report report = acceptance::run(config);
  acceptance::print(report, out);
  return report.all_passed() ? kOk : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentzian geometry of the anti-de Sitter plane", "ads_lorentz"};
  app.require_subcommand(1);

  double theta1 = 0.0;
  double phi1 = 0.0;

  auto* traj = app.add_subcommand("traj", "optimal trajectory from the origin to (theta, phi)");
  int samples = 101;
  std::string format = "csv";
  traj->add_option("theta", theta1)->required();
  traj->add_option("phi", phi1)->required();
  traj->add_option("--samples", samples, "number of samples, uniform in t")
      ->check(CLI::Range(2, 1 << 24))
      ->capture_default_str();
  traj->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* dist = app.add_subcommand("dist", "Lorentzian distance to (theta, phi)");
  std::vector<double> from;
  dist->add_option("theta", theta1)->required();
  dist->add_option("phi", phi1)->required();
  dist->add_option("--from", from, "base point theta0 phi0 (default: the origin)")->expected(2);

  auto* grid = app.add_subcommand("grid", "classification or distance on a grid");
  std::string what = "dist";
  Bounds grid_bounds;
  grid->add_option("--what", what)->check(CLI::IsMember({"dist", "reach"}))->capture_default_str();
  add_bounds(grid, grid_bounds);

  auto* stream = app.add_subcommand("stream", "Killing field samples on a grid");
  int field = 1;
  Bounds stream_bounds;
  stream->add_option("--field", field)->check(CLI::IsMember({1, 2, 3}))->required();
  add_bounds(stream, stream_bounds);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (traj->parsed()) return cmd_traj({theta1, phi1}, samples, format, out, err);
    if (dist->parsed()) return cmd_dist({theta1, phi1}, from, out, err);
    if (grid->parsed()) return cmd_grid(what, grid_bounds, out, err);
    if (stream->parsed()) return cmd_stream(field, stream_bounds, out, err);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonFiniteState& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ads::cli
