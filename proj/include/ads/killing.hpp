#pragma once

// Killing fields of the anti-de Sitter plane. In the orthonormal frame
//
//   K1 = cosh(theta) X1 = d/dphi
//   K2 = sinh(theta) cos(phi) X1 + sin(phi) X2
//   K3 = -sinh(theta) sin(phi) X1 + cos(phi) X2
//
// with [K1, K2] = K3, [K2, K3] = -K1, [K3, K1] = K2 (a copy of sl(2)).
// Their flows are isometries, which lets distances between arbitrary points be
// reduced to distances from the origin.

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "ads/geometry.hpp"
#include "ads/synthesis.hpp"

namespace ads {

// Default RK4 step for the K2/K3 flows.
inline constexpr double kDefaultFlowStep = 1e-3;
inline constexpr double kMaxFlowStep = 1e-2;

// d(coefficient_i)/d(coordinate_j), coordinates ordered (theta, phi).
struct Jacobian {
  std::array<std::array<double, 2>, 2> d{};
};

// A vector field with analytically known first derivatives.
struct VectorField {
  std::function<TangentVector(const Point&)> value;
  std::function<Jacobian(const Point&)> jacobian;
};

enum class KillingField { K1, K2, K3 };

std::string_view to_string(KillingField k);

TangentVector killing_eval(KillingField k, const Point& p);
Jacobian killing_jacobian(KillingField k, const Point& p);
VectorField as_vector_field(KillingField k);

// [a, b]^i = a^j d_j b^i - b^j d_j a^i, from the analytic Jacobians.
TangentVector lie_bracket(const VectorField& a, const VectorField& b, const Point& p);
TangentVector lie_bracket(KillingField a, KillingField b, const Point& p);

enum class CoordinateField { DTheta, DPhi };

// X(g(V, W)) - g([X, V], W) - g(V, [X, W]) at p for coordinate fields V, W.
// The derivative of g(V, W) along X is a central difference with step 1e-5;
// the brackets use X's Jacobian. Zero (to ~1e-6) exactly for Killing fields.
double killing_residual(const VectorField& x, const Point& p, CoordinateField v, CoordinateField w);
double killing_residual(KillingField k, const Point& p, CoordinateField v, CoordinateField w);

// Time-s flow of k starting at p. K1 is an exact phi-translation; K2 and K3 use
// fixed-step RK4 with the given step (<= kMaxFlowStep, else DomainError).
Point killing_flow(KillingField k, const Point& p, double s, double step = kDefaultFlowStep);

struct ConvergedFlow {
  Point point;
  double step = 0.0;  // step of the accepted (finest) integration
  bool converged = false;
};

// killing_flow with the step halved until two successive endpoints agree to
// 1e-9 (at most 6 halvings).
ConvergedFlow killing_flow_converged(KillingField k, const Point& p, double s,
                                     double step = kDefaultFlowStep);

struct RouteLeg {
  KillingField field = KillingField::K1;
  double duration = 0.0;
};

struct IsometryRoute {
  std::vector<RouteLeg> legs;
};

// (K1, -phi0) to reach the line phi = 0, then (K3, -theta0) along that line,
// on which K3 = d/dtheta. Applying the route to q0 gives the origin.
IsometryRoute route_to_origin(const Point& q0);

// Same legs in reverse order with negated durations.
IsometryRoute inverse_route(const IsometryRoute& route);

Point apply_route(const IsometryRoute& route, const Point& p, double step = kDefaultFlowStep);

// d(q0, q1): move q0 to the origin along route_to_origin(q0), carry q1 along
// the same isometry, and evaluate the distance from the origin there.
// Throws NonFiniteState if a flow integration blows up.
DistanceResult transport_distance(const Point& q0, const Point& q1,
                                  double step = kDefaultFlowStep);

struct StreamSample {
  Point point;
  TangentVector vector;
};

// k on an nx-by-ny grid, row-major: one row per phi value, theta fastest.
// Throws DomainError when nx or ny < 2.
std::vector<StreamSample> stream_samples(KillingField k, double theta_min, double theta_max,
                                         double phi_min, double phi_max, int nx, int ny);

}  // namespace ads
