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

#include <random>

#include "bianchi/curve/weierstrass.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::curve {
namespace {

using exact::BigRational;
using exact::make_rational;

Complex rhs(Complex x, Complex phi) { return x * x * x + weierstrass_a()(phi) * x + weierstrass_b()(phi); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

TEST(Weierstrass, CoefficientsFromP20P30) {
  EXPECT_TRUE((make_rational(48) * weierstrass_a() + p20()).is_zero());
  EXPECT_TRUE((make_rational(864) * weierstrass_b() - p30()).is_zero());
}

TEST(Weierstrass, QuotedDiscriminantDoesNotHold) {
  EXPECT_FALSE(discriminant_check());
  EXPECT_TRUE(discriminant_check(p20(), p30(), discriminant_closed_form()));
  EXPECT_FALSE(discriminant_closed_form() == discriminant_closed_form_quoted());
}

TEST(Weierstrass, PerturbedP20Fails) {
  for (int k = 0; k <= 20; k += 5) {
    QPoly bumped = p20() + QPoly::monomial(make_rational(1), k);
    EXPECT_FALSE(discriminant_check(bumped, p30(), discriminant_closed_form())) << k;
  }
}

TEST(Weierstrass, ClosedFormExpansion) {
  // (1 - 11 t - t^2)^5 by integer convolution, t = phi^5
  std::vector<long long> acc{1};
  const std::vector<long long> f{1, -11, -1};
  for (int i = 0; i < 5; ++i) {
    std::vector<long long> next(acc.size() + 2, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < 3; ++b) next[a + b] += acc[a] * f[b];
    acc = next;
  }
  QPoly form = discriminant_closed_form();
  EXPECT_EQ(form.degree(), 55);
  EXPECT_EQ(form.low_degree(), 5);
  EXPECT_EQ(form.coeff(55), -1);
  EXPECT_EQ(form.coeff(5), 1);
  for (std::size_t i = 0; i < acc.size(); ++i)
    EXPECT_EQ(form.coeff(static_cast<int>(5 + 5 * i)), BigRational(static_cast<long>(acc[i]))) << i;
  EXPECT_EQ(discriminant_closed_form_quoted().coeff(55), 1);
}

TEST(Weierstrass, CubicDiscriminantFactorization) {
  EXPECT_EQ(kk_cubic_discriminant(), kk_discriminant_closed_form());
  EXPECT_EQ(kk_discriminant_factored(), kk_discriminant_closed_form());
}

class WeierstrassMap : public ::testing::Test {
 protected:
  Complex tau{-0.2, 1.05};
  std::mt19937_64 rng{99};
  NumericPoint sample() {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    return NumericPoint{theta::theta_vector(u(rng) + u(rng) * tau, tau)};
  }
};

TEST_F(WeierstrassMap, CorrectedMapLandsOnCurve) {
  Complex phi = theta::phi_numeric(tau);
  for (int i = 0; i < 20; ++i) {
    auto w = weierstrass_map(sample(), phi);
    EXPECT_LT(rel(w.Ya, w.Yb), 1e-9);
    EXPECT_LT(rel(w.Ya * w.Ya, rhs(w.X, phi)), 1e-8);
  }
}

TEST_F(WeierstrassMap, QuotedYExpressionsDisagree) {
  Complex phi = theta::phi_numeric(tau);
  for (int i = 0; i < 5; ++i) {
    auto w = weierstrass_map(sample(), phi, true);
    EXPECT_GT(rel(w.Ya, w.Yb), 1e-3);
    EXPECT_GT(std::min(rel(w.Ya * w.Ya, rhs(w.X, phi)), rel(w.Yb * w.Yb, rhs(w.X, phi))), 1e-3);
  }
}

TEST_F(WeierstrassMap, TwoTorsionMapsToRoots) {
  Complex phi = theta::phi_numeric(tau);
  for (const auto& p : two_torsion_points(phi)) {
    auto w = weierstrass_map(p, phi);
    EXPECT_EQ(w.Ya, Complex(0.0));
    EXPECT_LT(std::abs(rhs(w.X, phi)), 1e-9 * std::max(1.0, std::pow(std::abs(w.X), 3)));
  }
  auto s = two_torsion_points_series(make_rational(20));
  for (const auto& p : s.points) {
    auto w = weierstrass_map(p, s.phi);
    EXPECT_TRUE(w.Ya.is_zero());
    auto x = w.X;
    auto cubic = x * x * x + weierstrass_a()(s.phi) * x + weierstrass_b()(s.phi);
    EXPECT_TRUE(cubic.is_zero());
  }
}

TEST_F(WeierstrassMap, ExceptionalLocus) {
  Complex phi = theta::phi_numeric(tau);
  EXPECT_THROW(weierstrass_map(neutral(phi), phi), DenominatorVanishes);
  for (const auto& p : five_torsion_points(phi)) {
    if (std::abs(p[0]) < 1e-14) EXPECT_THROW(weierstrass_map(p, phi), DenominatorVanishes);
  }
}

}  // namespace
}  // namespace bianchi::curve
