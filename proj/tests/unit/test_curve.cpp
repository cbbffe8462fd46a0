// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bianchi/curve/curve.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/modular/modular.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::curve {
namespace {

using exact::make_rational;

constexpr double kDist = 1e-9;

struct Torus {
  std::mt19937_64 rng{2026};
  Complex tau{0.1, 1.2};

  double u() { return std::uniform_real_distribution<double>(-0.5, 0.5)(rng); }
  Complex z() { return u() + u() * tau; }
  NumericPoint at(Complex w) const { return NumericPoint{theta::theta_vector(w, tau)}; }
  Complex phi() const { return theta::phi_numeric(tau); }
};

Complex eval(const PuiseuxSeries& s, double q) {
  double sum = 0;
  for (const auto& [e, c] : s.terms()) sum += exact::to_double(c) * std::pow(q, exact::to_double(e));
  return sum;
}

TEST(Curve, NeutralOnCurve) {
  for (const auto& r : quadric_residuals(neutral(Complex(0.3, 0.1)), Complex(0.3, 0.1))) EXPECT_EQ(std::abs(r), 0.0);
  auto phi = modular::named_series("phi", make_rational(10));
  for (const auto& r : quadric_residuals(neutral(phi), phi)) EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(quadric_residuals(neutral(Complex(0.0)), Complex(0.0)), DivisionByZero);
}

TEST(Curve, ThetaPointsOnCurve) {
  Torus t;
  for (int i = 0; i < 20; ++i) EXPECT_LT(quadric_residual_rel(t.at(t.z()), t.phi()), 1e-10);
  // the neutral point is the theta vector at z = 0
  EXPECT_LT(projective_distance(t.at(0.0), neutral(t.phi())), 1e-28);
}

TEST(Curve, NegateInvolution) {
  Torus t;
  auto o = neutral(t.phi());
  EXPECT_LT(projective_distance(negate(o), o), 1e-30);
  for (int i = 0; i < 10; ++i) {
    Complex w = t.z();
    auto p = t.at(w);
    EXPECT_EQ(projective_distance(negate(negate(p)), p), 0.0);
    EXPECT_LT(projective_distance(negate(p), t.at(-w)), 1e-24);
  }
}

TEST(Curve, GroupLawProperties) {
  Torus t;
  auto o = neutral(t.phi());
  for (int i = 0; i < 50; ++i) {
    Complex x = t.z(), y = t.z(), w = t.z();
    auto p = t.at(x), q = t.at(y), r = t.at(w);
    EXPECT_LT(projective_distance(add(p, o), p), kDist);
    EXPECT_LT(projective_distance(add(p, q), add(q, p)), kDist);
    EXPECT_LT(projective_distance(add(add(p, q), r), add(p, add(q, r))), kDist);
    EXPECT_LT(projective_distance(add(p, negate(p)), o), kDist);
    EXPECT_LT(projective_distance(add(p, q), t.at(x + y)), kDist);
  }
}

TEST(Curve, FormulasAgreeWhenBothValid) {
  Torus t;
  for (int i = 0; i < 20; ++i) {
    auto p = t.at(t.z()), q = t.at(t.z());
    EXPECT_LT(projective_distance(add_a1(p, q), add_a2(p, q)), kDist);
  }
}

TEST(Curve, BadCaseFallsBackToA2) {
  Torus t;
  const Complex zeta = std::polar(1.0, 2 * std::numbers::pi / 5);
  for (int m = 0; m < 5; ++m) {
    Complex x = t.z();
    auto p = t.at(x);
    NumericPoint q;
    for (int k = 0; k < 5; ++k) q[k] = p[k] * std::pow(zeta, -k * m);
    auto res = add_with_formula(p, q);
    EXPECT_EQ(res.formula, AddFormula::A2) << m;
    EXPECT_LT(quadric_residual_rel(res.point, t.phi()), 1e-9);
    // the twist is translation by m/5
    EXPECT_LT(projective_distance(res.point, t.at(2.0 * x + m / 5.0)), kDist) << m;
  }
  auto o = neutral(Complex(0.4));
  EXPECT_EQ(add_with_formula(o, o).formula, AddFormula::A2);
  NumericPoint zero{};
  EXPECT_THROW(add(zero, zero), BothFormulasDegenerate);
}

TEST(Curve, Duplication) {
  Torus t;
  auto o = neutral(t.phi());
  EXPECT_LT(projective_distance(duplicate(o), o), 1e-28);
  for (int i = 0; i < 20; ++i) {
    Complex x = t.z();
    auto p = t.at(x);
    EXPECT_LT(projective_distance(duplicate(p), t.at(2.0 * x)), kDist);
    EXPECT_LT(projective_distance(duplicate_cubic(p), t.at(2.0 * x)), kDist);
    EXPECT_LT(projective_distance(duplicate(p), add_a2(p, p)), kDist);
  }
  NumericPoint zero{};
  EXPECT_THROW(duplicate(zero), DegenerateResult);
  EXPECT_THROW(duplicate_cubic(zero), DegenerateResult);
}

TEST(Curve, DuplicationConstantSign) {
  // theta3(0)^3 theta_k(2z) matches the cubic family; theta2(0)^3 has the wrong sign
  Torus t;
  Complex x = t.z();
  auto p = t.at(x);
  auto twice = t.at(2.0 * x);
  Complex t3 = theta::theta_k(3, 0.0, t.tau), t2 = theta::theta_k(2, 0.0, t.tau);
  for (int k = 0; k < 5; ++k) {
    int m = 3 * k;
    Complex rhs = p[m + 2] * p[m + 1] * p[m + 1] * p[m + 1] - p[m - 1] * p[m - 1] * p[m - 1] * p[m - 2];
    EXPECT_LT(theta::relative_residual({t3 * t3 * t3 * twice[k], -rhs}), 1e-10);
    EXPECT_GT(theta::relative_residual({t2 * t2 * t2 * twice[k], -rhs}), 0.5);
  }
}

TEST(Curve, FiveTorsion) {
  Torus t;
  Complex phi = t.phi();
  auto pts = five_torsion_points(phi);
  ASSERT_EQ(pts.size(), 25u);
  auto o = neutral(phi);
  const Complex zeta = std::polar(1.0, 2 * std::numbers::pi / 5);
  NumericPoint twist{{0.0, phi / zeta, -std::pow(zeta, -2), std::pow(zeta, -3), -phi * std::pow(zeta, -4)}};
  EXPECT_LT(projective_distance(pts[1], twist), 1e-28);
  for (const auto& p : pts) {
    EXPECT_LT(quadric_residual_rel(p, phi), 1e-10);
    int zeros = 0;
    for (int k = 0; k < 5; ++k) zeros += std::abs(p[k]) < 1e-14;
    EXPECT_EQ(zeros, 1);
    auto q = p;
    for (int i = 0; i < 4; ++i) q = add(q, p);
    EXPECT_LT(projective_distance(q, o), 1e-8);
  }
}

TEST(Curve, CubicRoots) {
  const Complex tau(0.0, 1.1);
  Complex phi = theta::phi_numeric(tau);
  auto roots = cubic_roots(phi);
  Complex sum = roots[0] + roots[1] + roots[2];
  EXPECT_LT(std::abs(sum - 1.0), 1e-12);
  EXPECT_LT(std::abs(roots[0] * roots[1] * roots[2] + std::pow(phi, 5)), 1e-12);
  for (auto r : roots) EXPECT_LT(std::abs(kk_model(r, phi)), 1e-13);
  // series oracle at q = exp(-2.2 pi), nearest-root pairing
  double q = std::exp(-2.2 * std::numbers::pi);
  for (int i = 1; i <= 3; ++i) {
    Complex g = eval(modular::g_series(i, make_rational(60)), q);
    double best = 1e9;
    for (auto r : roots) best = std::min(best, std::abs(r - g));
    EXPECT_LT(best, 1e-6) << i;
  }
  Complex d = (roots[0] - roots[1]) * (roots[1] - roots[2]) * (roots[2] - roots[0]);
  EXPECT_LT(std::abs(d * d - cubic_discriminant(phi)), 1e-10);
}

TEST(Curve, CubicDiscriminantIsDeltaSquared) {
  auto phi = modular::named_series("phi", make_rational(30));
  auto delta = modular::named_series("delta", make_rational(30));
  EXPECT_TRUE((cubic_discriminant(phi) - delta * delta).is_zero());
}

TEST(Curve, TwoTorsionNumeric) {
  Torus t;
  Complex phi = t.phi();
  auto o = neutral(phi);
  for (const auto& p : two_torsion_points(phi)) {
    EXPECT_EQ(p[1], p[4]);
    EXPECT_EQ(p[2], p[3]);
    EXPECT_LT(quadric_residual_rel(p, phi), 1e-10);
    EXPECT_LT(projective_distance(negate(p), p), 1e-30);
    EXPECT_LT(projective_distance(duplicate(p), o), 1e-9);
  }
  double root = std::pow((5 * std::sqrt(5.0) - 11) / 2, 0.2);
  EXPECT_THROW(two_torsion_points(Complex(root)), SingularCurve);
  EXPECT_THROW(two_torsion_points(Complex(0.0)), SingularCurve);
}

TEST(Curve, TwoTorsionSeries) {
  // the quadrics lose a little precision to the division by g, so start one step past 30
  auto t = two_torsion_points_series(make_rational(31));
  auto o = neutral(t.phi);
  for (const auto& p : t.points) {
    for (const auto& r : quadric_residuals(p, t.phi)) {
      EXPECT_TRUE(r.is_zero());
      EXPECT_GE(r.order(), make_rational(30));
    }
    EXPECT_TRUE(same_point(duplicate(p), o));
    EXPECT_TRUE(same_point(negate(p), p));
    EXPECT_TRUE(hulek_craig_model(p[0], p[1], p[2]).is_zero());
  }
  EXPECT_FALSE(same_point(t.points[0], t.points[1]));
}

TEST(Curve, PlaneModels) {
  Complex phi(0.27, 0.05);
  auto o = neutral(phi);
  EXPECT_EQ(std::abs(quintic_model(o[1], o[2], o[3], phi)), 0.0);
  Torus t;
  for (int i = 0; i < 10; ++i) {
    auto p = normalized(t.at(t.z()));
    EXPECT_LT(std::abs(plane_model_residual(PlaneModel::Quintic, p, t.phi())), 1e-9);
  }
  auto s = two_torsion_points_series(make_rational(30));
  for (int i = 0; i < 3; ++i) {
    const auto& p = s.points[static_cast<std::size_t>(i)];
    EXPECT_TRUE(plane_model_residual(PlaneModel::HulekCraig, p, s.phi).is_zero());
    EXPECT_TRUE(plane_model_residual(PlaneModel::KK, p, s.phi).is_zero());
    EXPECT_TRUE(plane_model_residual(PlaneModel::Weber, p, s.phi).is_zero());
    EXPECT_TRUE(weber_model(-s.g[static_cast<std::size_t>(i)], -s.phi).is_zero());
  }
}

}  // namespace
}  // namespace bianchi::curve
