#include <gtest/gtest.h>

#include <cmath>

#include "ads/errors.hpp"
#include "ads/extremals.hpp"
#include "ads/numerics.hpp"

namespace ads {
namespace {

const double kPsis[] = {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0};

State rk4_state(double psi0, double t1) {
  OdeProblem prob;
  prob.rhs = [](double, std::span<const double> y) {
    const StateRate r = hamiltonian_rhs({y[0], y[1], y[2]});
    return State{r.d_theta, r.d_phi, r.d_psi};
  };
  prob.initial = {0.0, 0.0, psi0};
  prob.t1 = t1;
  prob.step = 1e-4;
  prob.sample_stride = 0;
  return rk4_integrate(prob).final_state;
}

std::vector<double> as_vec(const ExtremalState& s) { return {s.theta, s.phi, s.psi}; }

TEST(HamiltonianRhs, Examples) {
  const StateRate a = hamiltonian_rhs({0, 0, 0});
  EXPECT_EQ(a.d_theta, 0.0);
  EXPECT_EQ(a.d_phi, 1.0);
  EXPECT_EQ(a.d_psi, 0.0);

  const StateRate b = hamiltonian_rhs({0, 0, 1});
  EXPECT_NEAR(b.d_theta, 1.1752011936438015, 1e-15);
  EXPECT_NEAR(b.d_phi, 1.5430806348152438, 1e-15);
  EXPECT_EQ(b.d_psi, 0.0);
}

TEST(FirstIntegral, Examples) {
  EXPECT_EQ(first_integral({0, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(first_integral({0, 0, 0.7}), std::cosh(0.7));
  EXPECT_NEAR(first_integral({1, 42.0, 1}), 2.3810978455418157, 1e-15);
}

TEST(FirstIntegral, ConservedAlongRk4Flow) {
  for (double psi0 : kPsis) {
    const State y = rk4_state(psi0, 3.0);
    EXPECT_NEAR(first_integral({y[0], y[1], y[2]}), std::cosh(psi0), 1e-10) << psi0;
  }
}

TEST(AdjointCovector, NormalExtremal) {
  const ExtremalState s = normal_extremal(0.9, 1.3);
  const AdjointCovector l = adjoint_covector(s);
  EXPECT_DOUBLE_EQ(l.xi1, std::sinh(s.psi));
  EXPECT_NEAR(l.xi2, -std::cosh(0.9), 1e-14);
  // h1 = xi2 / cosh(theta) = -cosh(psi), h2 = xi1 = sinh(psi) lie on the normal cone.
  EXPECT_EQ(maximality_case(l.xi2 / std::cosh(s.theta), l.xi1, -1), MaximalityCase::NormalCone);
}

TEST(NormalExtremal, VerticalGeodesic) {
  for (double t : {0.0, 0.3, kPi / 2, 2.0, 5.0, 9.0}) {
    const ExtremalState s = normal_extremal(0.0, t);
    EXPECT_EQ(s.theta, 0.0);
    EXPECT_NEAR(s.phi, t, 1e-14);
    EXPECT_EQ(s.psi, 0.0);
  }
}

TEST(NormalExtremal, QuarterPeriod) {
  const ExtremalState s = normal_extremal(1.0, kPi / 2);
  EXPECT_NEAR(s.theta, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.phi, kPi / 2);
  EXPECT_NEAR(s.psi, 0.0, 1e-16);
}

TEST(NormalExtremal, FrozenValuesAgainstOracle) {
  // Reference values from an independent high-precision ODE solve.
  const ExtremalState a = normal_extremal(1.0, kPi / 4);
  EXPECT_NEAR(a.theta, 0.75668700329825198, 1e-14);
  EXPECT_NEAR(a.phi, 0.99579014421648477, 1e-14);
  EXPECT_NEAR(a.psi, 0.60208055926871692, 1e-14);

  const ExtremalState b = normal_extremal(1.0, 3 * kPi / 4);
  EXPECT_NEAR(b.theta, 0.75668700329825198, 1e-14);
  EXPECT_NEAR(b.phi, 2.1458025093733085, 1e-14);
  EXPECT_NEAR(b.psi, -0.60208055926871692, 1e-14);

  for (double t : {kPi / 4, 3 * kPi / 4}) {
    const State y = rk4_state(1.0, t);
    const ExtremalState s = normal_extremal(1.0, t);
    EXPECT_NEAR(y[0], s.theta, 1e-8);
    EXPECT_NEAR(y[1], s.phi, 1e-8);
    EXPECT_NEAR(y[2], s.psi, 1e-8);
  }
}

TEST(NormalExtremal, MatchesRk4AcrossSeams) {
  for (double psi0 : kPsis) {
    for (double t : {1.0, kPi / 2, kPi, 4.0, 3 * kPi / 2, 3 * kPi}) {
      const State y = rk4_state(psi0, t);
      const ExtremalState s = normal_extremal(psi0, t);
      EXPECT_NEAR(y[0], s.theta, 1e-8) << psi0 << " " << t;
      EXPECT_NEAR(y[1], s.phi, 1e-8) << psi0 << " " << t;
      EXPECT_NEAR(y[2], s.psi, 1e-8) << psi0 << " " << t;
    }
  }
}

TEST(NormalExtremal, SeamValues) {
  for (double psi0 : kPsis) {
    for (int n = 0; n < 4; ++n) {
      EXPECT_NEAR(normal_extremal(psi0, n * kPi).phi, n * kPi, 1e-12);
      EXPECT_NEAR(normal_extremal(psi0, (2 * n + 1) * kPi / 2).phi, (2 * n + 1) * kPi / 2, 1e-12);
    }
  }
}

TEST(NormalExtremal, FirstIntegralAlongClosedForm) {
  for (double psi0 : kPsis) {
    for (int i = 0; i < 1000; ++i) {
      const double t = 3 * kPi * i / 999.0;
      EXPECT_NEAR(first_integral(normal_extremal(psi0, t)), std::cosh(psi0), 1e-9);
    }
  }
}

TEST(NormalExtremal, SolvesHamiltonianSystemIncludingSeams) {
  for (double psi0 : kPsis) {
    for (double t : {0.3, kPi / 2, 2.0, kPi, 4.0, 3 * kPi / 2, 7.5}) {
      const auto d = central_diff([&](double tau) { return as_vec(normal_extremal(psi0, tau)); },
                                  t, 1e-6);
      const StateRate r = hamiltonian_rhs(normal_extremal(psi0, t));
      const double scale = std::cosh(psi0);
      EXPECT_NEAR(d[0], r.d_theta, 1e-6 * scale) << psi0 << " " << t;
      EXPECT_NEAR(d[1], r.d_phi, 1e-6 * scale) << psi0 << " " << t;
      EXPECT_NEAR(d[2], r.d_psi, 1e-6 * scale) << psi0 << " " << t;
    }
  }
}

TEST(NormalExtremal, PhiStrictlyIncreasingWithBoundedRate) {
  for (double psi0 : kPsis) {
    const double big_d = std::cosh(psi0);
    double prev = -1.0;
    for (int i = 0; i <= 3000; ++i) {
      const double t = 3 * kPi * i / 3000.0;
      const double phi = normal_extremal(psi0, t).phi;
      EXPECT_GT(phi, prev);
      prev = phi;
      const double rate = hamiltonian_rhs(normal_extremal(psi0, t)).d_phi;
      const double sin_t = std::sin(t);
      EXPECT_NEAR(rate, big_d / (1 + (big_d * big_d - 1) * sin_t * sin_t), 1e-12 * big_d);
      EXPECT_GT(rate, 0.0);
      EXPECT_LE(rate, big_d * (1 + 1e-14));
    }
  }
}

TEST(NormalExtremal, ReflectionSymmetry) {
  for (double psi0 : {0.3, 1.0, 2.5}) {
    for (double t : {0.1, 1.0, kPi / 2, 2.9, 6.0}) {
      const ExtremalState a = normal_extremal(psi0, t);
      const ExtremalState b = normal_extremal(-psi0, t);
      EXPECT_DOUBLE_EQ(b.theta, -a.theta);
      EXPECT_DOUBLE_EQ(b.phi, a.phi);
      EXPECT_DOUBLE_EQ(b.psi, -a.psi);
    }
  }
}

TEST(NormalExtremal, NegativeTimeIsOddInPhi) {
  for (double t : {0.2, 1.4, 2.5, 4.0}) {
    EXPECT_NEAR(normal_extremal(0.8, -t).phi, -normal_extremal(0.8, t).phi, 1e-13);
    EXPECT_NEAR(normal_extremal(0.8, -t).theta, -normal_extremal(0.8, t).theta, 1e-14);
  }
}

TEST(AbnormalExtremal, FromOrigin) {
  for (double t : {0.0, 0.5, 1.0, 4.0}) {
    const Point p = abnormal_extremal(ExtremalClass::AbnormalPlus, {0, 0}, t);
    EXPECT_DOUBLE_EQ(p.theta, t);
    EXPECT_DOUBLE_EQ(p.phi, std::atan(std::sinh(t)));
  }
  const Point m = abnormal_extremal(ExtremalClass::AbnormalMinus, {0, 0}, 1.0);
  EXPECT_DOUBLE_EQ(m.theta, -1.0);
  EXPECT_NEAR(m.phi, 0.86576948323965862, 1e-15);
}

TEST(AbnormalExtremal, IdentityAtZero) {
  const Point q0{0.7, -2.0};
  for (auto cls : {ExtremalClass::AbnormalPlus, ExtremalClass::AbnormalMinus}) {
    const Point p = abnormal_extremal(cls, q0, 0.0);
    EXPECT_EQ(p.theta, q0.theta);
    EXPECT_EQ(p.phi, q0.phi);
  }
}

TEST(AbnormalExtremal, SolvesControlSystemAndIsLightlike) {
  for (auto cls : {ExtremalClass::AbnormalPlus, ExtremalClass::AbnormalMinus}) {
    const Point q0{-0.4, 1.1};
    const Control u = abnormal_control(cls);
    for (double t : {0.1, 0.8, 1.7}) {
      const auto d = central_diff(
          [&](double tau) {
            const Point p = abnormal_extremal(cls, q0, tau);
            return std::vector<double>{p.theta, p.phi};
          },
          t, 1e-6);
      const Point p = abnormal_extremal(cls, q0, t);
      const TangentVector v = velocity(p, u);
      EXPECT_NEAR(d[0], v.d_theta, 1e-6);
      EXPECT_NEAR(d[1], v.d_phi, 1e-6);
      EXPECT_NEAR(metric_eval(p, v, v), 0.0, 1e-10);
      EXPECT_EQ(causal_class(v, p), CausalClass::LightlikeFuture);
    }
  }
}

TEST(AbnormalExtremal, Errors) {
  EXPECT_THROW(abnormal_extremal(ExtremalClass::Normal, {0, 0}, 1.0), DomainError);
  EXPECT_THROW(abnormal_extremal(ExtremalClass::AbnormalPlus, {0, 0}, -1.0), DomainError);
  EXPECT_THROW(abnormal_control(ExtremalClass::Normal), DomainError);
}

TEST(MaximalityCase, AbnormalCases) {
  EXPECT_EQ(maximality_case(-1.0, -1.0, 0), MaximalityCase::AbnormalMinus);
  EXPECT_EQ(maximality_case(-2.0, 2.0, 0), MaximalityCase::AbnormalPlus);
}

TEST(MaximalityCase, NormalCone) {
  EXPECT_EQ(maximality_case(-std::cosh(1.0), std::sinh(1.0), -1), MaximalityCase::NormalCone);
  EXPECT_EQ(maximality_case(-1.0, 0.0, -1), MaximalityCase::NormalCone);
  EXPECT_EQ(maximality_case(std::cosh(1.0), std::sinh(1.0), -1), MaximalityCase::NoMax);
  EXPECT_EQ(maximality_case(-2.0, 0.0, -1), MaximalityCase::NoMax);
}

TEST(MaximalityCase, NineCaseAnalysisForZeroMultiplier) {
  // Every configuration other than the two boundary rays has no maximum.
  EXPECT_EQ(maximality_case(1.0, 0.0, 0), MaximalityCase::NoMax);    // h2 = 0, h1 > 0
  EXPECT_EQ(maximality_case(-1.0, 0.0, 0), MaximalityCase::NoMax);   // h2 = 0, h1 < 0
  EXPECT_EQ(maximality_case(0.0, 1.0, 0), MaximalityCase::NoMax);    // h1 = 0
  EXPECT_EQ(maximality_case(0.0, -1.0, 0), MaximalityCase::NoMax);
  EXPECT_EQ(maximality_case(1.0, 1.0, 0), MaximalityCase::NoMax);    // h1 = h2 > 0
  EXPECT_EQ(maximality_case(1.0, -1.0, 0), MaximalityCase::NoMax);   // h1 = -h2 > 0
  EXPECT_EQ(maximality_case(1.0, 0.5, 0), MaximalityCase::NoMax);    // h1 > 0
  EXPECT_EQ(maximality_case(-1.0, 2.0, 0), MaximalityCase::NoMax);   // -h1 < h2
  EXPECT_EQ(maximality_case(-1.0, -2.0, 0), MaximalityCase::NoMax);  // h2 < h1 < 0
  EXPECT_EQ(maximality_case(-2.0, 1.0, 0), MaximalityCase::NoMax);   // h2 < -h1
  EXPECT_EQ(maximality_case(-2.0, -1.0, 0), MaximalityCase::NoMax);  // h1 < h2 < 0
}

TEST(MaximalityCase, RejectsOtherMultipliers) {
  EXPECT_THROW(maximality_case(-1.0, 0.0, 1), DomainError);
}

}  // namespace
}  // namespace ads
