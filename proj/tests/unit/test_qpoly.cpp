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

#include "bianchi/exact/qpoly.hpp"

namespace bianchi::exact {
namespace {

TEST(QPoly, NormalizesAndPrints) {
  auto p = QPoly::from_terms({{2, 1}, {0, -1}, {5, 0}});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "x^2 - 1");
  EXPECT_EQ(QPoly().to_string(), "0");
  EXPECT_EQ(QPoly::from_terms({{10, -1}, {5, -11}, {0, 1}}).to_string("phi"), "-phi^10 - 11*phi^5 + 1");
  EXPECT_EQ(QPoly::from_terms({{3, 2}, {1, 0}}).low_degree(), 3);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(QPoly, ArithmeticIdentities) {
  auto x = QPoly::x();
  auto a = x + QPoly::constant(1);
  auto b = x - QPoly::constant(1);
  EXPECT_EQ(a * b, pow(x, 2) - QPoly::constant(1));
  EXPECT_EQ(pow(a, 5).coeff(2), 10);
  EXPECT_EQ(pow(a, 0), QPoly::constant(1));
  EXPECT_EQ(BigRational(3) * a, a * BigRational(3));
  EXPECT_EQ(-a + a, QPoly());
}

TEST(QPoly, EvaluateOnEveryCarrier) {
  auto p = QPoly::from_terms({{10, -1}, {5, -11}, {0, 1}});
  EXPECT_EQ(p(make_rational(1)), -11);
  EXPECT_EQ(p(make_rational(1, 2)), BigRational(make_rational(1024 - 11 * 32 - 1, 1024)));
  auto z = p(std::complex<double>(0.0, 1.0));
  EXPECT_NEAR(z.real(), 2.0, 1e-15);
  EXPECT_NEAR(z.imag(), -11.0, 1e-15);
  auto q = PuiseuxSeries::monomial(make_rational(1), make_rational(1, 5), make_rational(4));
  auto s = p(q);
  EXPECT_EQ(s.coeff(make_rational(0)), 1);
  EXPECT_EQ(s.coeff(make_rational(1)), -11);
  EXPECT_EQ(s.coeff(make_rational(2)), -1);
  EXPECT_GE(s.order(), make_rational(4));
}

}  // namespace
}  // namespace bianchi::exact
