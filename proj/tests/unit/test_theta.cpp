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

#include "bianchi/errors.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::theta {
namespace {

constexpr double kPi = std::numbers::pi;

// Plain symmetric window, summed in index order.
Complex fixed_window(double p, double qc, Complex z, Complex tau, int half) {
  Complex s = 0;
  for (int n = -half; n <= half; ++n) {
    double t = n + p;
    s += std::exp(Complex(0, kPi) * (t * t * tau + 2.0 * t * (z + qc)));
  }
  return s;
}

TEST(Theta, IndexArithmetic) {
  EXPECT_EQ(idx(7), idx(2));
  EXPECT_EQ(idx(-1), idx(4));
  EXPECT_EQ(ThetaIndex::from_double(2.5).twice(), 5);
  EXPECT_TRUE(ThetaIndex::from_double(0.5).is_half_integer());
  EXPECT_EQ(idx(3) + idx(4), idx(2));
  EXPECT_THROW(ThetaIndex::from_double(0.3), DomainError);
}

TEST(Theta, AgreesWithFixedWindowOracle) {
  Complex z(0.3, 0.2), tau(0.0, 1.1);
  for (int tw = 0; tw < 10; ++tw) {
    ThetaIndex k = ThetaIndex::from_twice(tw);
    Complex ours = theta_k(k, z, tau);
    Complex ref = Complex(0, -1) * fixed_window(0.5 - k.value() / 5.0, 2.5, 5.0 * z, 5.0 * tau, 60);
    EXPECT_LT(std::abs(ours - ref), 1e-12 * std::max(1.0, std::abs(ref))) << tw;
  }
  Complex a = theta_pq(0.1, 0.3, Complex(0.2, -0.4), Complex(0.25, 0.7));
  Complex b = fixed_window(0.1, 0.3, Complex(0.2, -0.4), Complex(0.25, 0.7), 60);
  EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(b));
}

TEST(Theta, ParityAndPeriod) {
  Complex z(0.17, -0.09), tau(0.2, 0.9);
  for (int k = 0; k < 5; ++k) {
    Complex t = theta_k(k, z, tau);
    EXPECT_LT(std::abs(theta_k(-k, -z, tau) + t), 1e-12 * std::abs(t));
    EXPECT_LT(std::abs(theta_k(k, z + 1.0, tau) + t), 1e-12 * std::abs(t));
  }
  EXPECT_LT(std::abs(theta_k(0, 0.0, tau)), 1e-14);
}

TEST(Theta, PhiAtI) {
  const Complex tau(0.0, 1.0);
  Complex phi = phi_numeric(tau);
  // closed form of the continued fraction at tau = i
  double closed = std::sqrt((5.0 + std::sqrt(5.0)) / 2.0) - (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(phi.real(), closed, 1e-13);
  EXPECT_NEAR(phi.imag(), 0.0, 1e-13);
  EXPECT_NEAR(phi.real(), 0.2840790438, 1e-10);
  // product form
  double q = std::exp(-2.0 * kPi);
  double prod = std::pow(q, 0.2);
  for (int n = 1; n < 40; ++n) {
    int r = n % 5;
    if (r == 1 || r == 4) prod *= 1 - std::pow(q, n);
    if (r == 2 || r == 3) prod /= 1 - std::pow(q, n);
  }
  EXPECT_NEAR(phi.real(), prod, 1e-14);
}

TEST(Theta, PhiMatchesProductOffAxis) {
  const Complex tau(0.31, 0.85);
  Complex q = std::exp(Complex(0, 2 * kPi) * tau);
  Complex prod = std::exp(Complex(0, 2 * kPi / 5) * tau);
  for (int n = 1; n < 80; ++n) {
    int r = n % 5;
    if (r == 1 || r == 4) prod *= 1.0 - std::pow(q, n);
    if (r == 2 || r == 3) prod /= 1.0 - std::pow(q, n);
  }
  EXPECT_LT(std::abs(phi_numeric(tau) - prod), 1e-13);
}

TEST(Theta, ErrorPaths) {
  EXPECT_THROW(theta_k(1, 0.0, Complex(0.3, 0.0)), DomainError);
  EXPECT_THROW(theta_k(1, Complex(0.0, 400.0), Complex(0.0, 1.0)), NumericOverflow);
  SumOptions tight;
  tight.max_terms = 2;
  EXPECT_THROW(theta_pq(0.0, 0.0, 0.0, Complex(0.0, 0.01), tight), ConvergenceError);
}

TEST(Theta, RelativeResidual) {
  EXPECT_EQ(relative_residual({Complex(1, 0), Complex(-1, 0)}), 0.0);
  EXPECT_DOUBLE_EQ(relative_residual({Complex(2, 0), Complex(-1, 0)}), 0.5);
  EXPECT_EQ(relative_residual(std::span<const Complex>()), 0.0);
}

}  // namespace
}  // namespace bianchi::theta
