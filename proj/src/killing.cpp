#include "ads/killing.hpp"

#include <cmath>

#include "ads/errors.hpp"
#include "ads/numerics.hpp"

namespace ads {

std::string_view to_string(KillingField k) {
  switch (k) {
    case KillingField::K1: return "K1";
    case KillingField::K2: return "K2";
    case KillingField::K3: return "K3";
  }
  return "?";
}

TangentVector killing_eval(KillingField k, const Point& p) {
  switch (k) {
    case KillingField::K1:
      return {0.0, 1.0};
    case KillingField::K2:
      return {std::sin(p.phi), std::tanh(p.theta) * std::cos(p.phi)};
    case KillingField::K3:
      return {std::cos(p.phi), -std::tanh(p.theta) * std::sin(p.phi)};
  }
  return {};
}

Jacobian killing_jacobian(KillingField k, const Point& p) {
  const double s = std::sin(p.phi);
  const double c = std::cos(p.phi);
  const double th = std::tanh(p.theta);
  const double sech2 = 1.0 - th * th;
  Jacobian j;
  switch (k) {
    case KillingField::K1:
      break;
    case KillingField::K2:
      j.d[0] = {0.0, c};
      j.d[1] = {sech2 * c, -th * s};
      break;
    case KillingField::K3:
      j.d[0] = {0.0, -s};
      j.d[1] = {-sech2 * s, -th * c};
      break;
  }
  return j;
}

VectorField as_vector_field(KillingField k) {
  return {[k](const Point& p) { return killing_eval(k, p); },
          [k](const Point& p) { return killing_jacobian(k, p); }};
}

namespace {

// J v, i.e. the derivative of the field along v.
TangentVector apply(const Jacobian& j, const TangentVector& v) {
  return {j.d[0][0] * v.d_theta + j.d[0][1] * v.d_phi,
          j.d[1][0] * v.d_theta + j.d[1][1] * v.d_phi};
}

TangentVector coordinate_vector(CoordinateField f) {
  return f == CoordinateField::DTheta ? TangentVector{1.0, 0.0} : TangentVector{0.0, 1.0};
}

Point advance(const Point& p, const TangentVector& v, double h) {
  return {p.theta + h * v.d_theta, p.phi + h * v.d_phi};
}

}  // namespace

TangentVector lie_bracket(const VectorField& a, const VectorField& b, const Point& p) {
  return apply(b.jacobian(p), a.value(p)) - apply(a.jacobian(p), b.value(p));
}

TangentVector lie_bracket(KillingField a, KillingField b, const Point& p) {
  return lie_bracket(as_vector_field(a), as_vector_field(b), p);
}

double killing_residual(const VectorField& x, const Point& p, CoordinateField v,
                        CoordinateField w) {
  constexpr double h = 1e-5;
  const TangentVector vv = coordinate_vector(v);
  const TangentVector ww = coordinate_vector(w);
  const TangentVector xp = x.value(p);

  const double lhs =
      (metric_eval(advance(p, xp, h), vv, ww) - metric_eval(advance(p, xp, -h), vv, ww)) /
      (2.0 * h);

  // V, W have constant coefficients, so [X, V] = -(dX) V.
  const Jacobian j = x.jacobian(p);
  const TangentVector xv = -apply(j, vv);
  const TangentVector xw = -apply(j, ww);
  return lhs - metric_eval(p, xv, ww) - metric_eval(p, vv, xw);
}

double killing_residual(KillingField k, const Point& p, CoordinateField v, CoordinateField w) {
  return killing_residual(as_vector_field(k), p, v, w);
}

Point killing_flow(KillingField k, const Point& p, double s, double step) {
  if (!(step > 0.0) || step > kMaxFlowStep) {
    throw DomainError("killing_flow: step must lie in (0, 1e-2]");
  }
  if (k == KillingField::K1) return {p.theta, p.phi + s};
  if (s == 0.0) return p;

  OdeProblem prob;
  prob.rhs = [k](double, std::span<const double> y) {
    const TangentVector v = killing_eval(k, Point{y[0], y[1]});
    return State{v.d_theta, v.d_phi};
  };
  prob.initial = {p.theta, p.phi};
  prob.t0 = 0.0;
  prob.t1 = s;
  prob.step = step;
  prob.sample_stride = 0;
  const OdeSolution sol = rk4_integrate(prob);
  return {sol.final_state[0], sol.final_state[1]};
}

ConvergedFlow killing_flow_converged(KillingField k, const Point& p, double s, double step) {
  ConvergedFlow out;
  out.step = step;
  out.point = killing_flow(k, p, s, step);
  if (k == KillingField::K1 || s == 0.0) {
    out.converged = true;
    return out;
  }
  constexpr int kMaxHalvings = 6;
  for (int i = 0; i < kMaxHalvings; ++i) {
    const double finer_step = out.step / 2.0;
    const Point finer = killing_flow(k, p, s, finer_step);
    const double diff = std::hypot(finer.theta - out.point.theta, finer.phi - out.point.phi);
    out.point = finer;
    out.step = finer_step;
    if (diff < 1e-9) {
      out.converged = true;
      break;
    }
  }
  return out;
}

IsometryRoute route_to_origin(const Point& q0) {
  return {{RouteLeg{KillingField::K1, -q0.phi}, RouteLeg{KillingField::K3, -q0.theta}}};
}

IsometryRoute inverse_route(const IsometryRoute& route) {
  IsometryRoute out;
  for (auto it = route.legs.rbegin(); it != route.legs.rend(); ++it) {
    out.legs.push_back({it->field, -it->duration});
  }
  return out;
}

Point apply_route(const IsometryRoute& route, const Point& p, double step) {
  Point q = p;
  for (const RouteLeg& leg : route.legs) {
    q = killing_flow_converged(leg.field, q, leg.duration, step).point;
    if (!q.finite()) throw NonFiniteState("apply_route: non-finite point");
  }
  return q;
}

DistanceResult transport_distance(const Point& q0, const Point& q1, double step) {
  return lorentz_distance_from_origin(apply_route(route_to_origin(q0), q1, step));
}

std::vector<StreamSample> stream_samples(KillingField k, double theta_min, double theta_max,
                                         double phi_min, double phi_max, int nx, int ny) {
  if (nx < 2 || ny < 2) throw DomainError("stream_samples: need nx, ny >= 2");
  std::vector<StreamSample> out;
  out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    const double phi = phi_min + (phi_max - phi_min) * j / (ny - 1);
    for (int i = 0; i < nx; ++i) {
      const double theta = theta_min + (theta_max - theta_min) * i / (nx - 1);
      const Point p{theta, phi};
      out.push_back({p, killing_eval(k, p)});
    }
  }
  return out;
}

}  // namespace ads
