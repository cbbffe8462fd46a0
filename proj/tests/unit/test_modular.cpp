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

#include <future>
#include <vector>

#include "bianchi/errors.hpp"
#include "bianchi/exact/pochhammer.hpp"
#include "bianchi/modular/modular.hpp"

namespace bianchi::modular {
namespace {

using exact::make_rational;

BigRational r(long n, long d = 1) { return make_rational(n, d); }

void expect_terms(const PuiseuxSeries& s, std::vector<std::pair<BigRational, long>> terms) {
  for (const auto& [e, c] : terms) EXPECT_EQ(s.coeff(e), c) << "exponent " << exact::to_string(e);
}

TEST(Modular, PhiLeadingTerms) {
  auto phi = phi_series(r(11));
  expect_terms(phi, {{r(1, 5), 1}, {r(6, 5), -1}, {r(11, 5), 1}, {r(16, 5), 0}, {r(21, 5), -1}, {r(26, 5), 1},
                     {r(31, 5), -1}, {r(36, 5), 1}, {r(41, 5), 0}, {r(46, 5), -1}, {r(51, 5), 2}});
  EXPECT_EQ(phi.ram(), 5);
  EXPECT_EQ(phi.coeff(r(2, 5)), 0);
}

TEST(Modular, PhiBruteForceProduct) {
  // coefficient of q^12 in the product, from the first 70 factors taken one at a time
  const int len = 13;
  std::vector<long long> p(len, 0);
  p[0] = 1;
  for (int n = 1; n <= 70; ++n) {
    int m = n % 5;
    if (m == 0) continue;
    std::vector<long long> next(p);
    if (m == 1 || m == 4) {
      for (int i = n; i < len; ++i) next[i] -= p[i - n];
    } else {
      for (int i = n; i < len; ++i) next[i] += next[i - n];
    }
    p = next;
  }
  auto phi = phi_series(r(14));
  EXPECT_EQ(phi.coeff(r(61, 5)), BigRational(static_cast<long>(p[12])));
  for (int k = 0; k < len; ++k) EXPECT_EQ(phi.coeff(r(5 * k + 1, 5)), BigRational(static_cast<long>(p[k]))) << k;
}

TEST(Modular, GSeriesLeadingTerms) {
  auto g1 = g_series(1, r(7));
  expect_terms(g1, {{r(0), 1}, {r(1), -2}, {r(2), 4}, {r(3), -4}, {r(4), 2}, {r(5), 2}, {r(6), -8}});
  auto g2 = g_series(2, r(4));
  expect_terms(g2, {{r(1, 2), -1}, {r(1), 1}, {r(3, 2), 1}, {r(2), -2}, {r(5, 2), 0}, {r(3), 2}, {r(7, 2), -2}});
  auto g3 = g_series(3, r(4));
  expect_terms(g3, {{r(1, 2), 1}, {r(1), 1}, {r(3, 2), -1}, {r(2), -2}, {r(5, 2), 0}, {r(3), 2}, {r(7, 2), 2}});
  EXPECT_THROW(g_series(4, r(3)), DomainError);
}

TEST(Modular, GSeriesFromPhiQuotients) {
  const BigRational order = r(12);
  auto phi = phi_series(r(30));
  auto phi2 = subst_qpow(phi, r(2));
  auto phih = subst_qpow(phi, r(1, 2));
  EXPECT_TRUE(same_value((phi * phi / phi2).truncated(order), g_series(1, order)));
  EXPECT_TRUE(same_value((-phih * phi * phi).truncated(order), g_series(2, order)));
  EXPECT_TRUE(same_value((phi * phi2 / phih).truncated(order), g_series(3, order)));
}

TEST(Modular, SymmetricFunctions) {
  const BigRational order = r(30);
  auto g1 = g_series(1, order), g2 = g_series(2, order), g3 = g_series(3, order);
  auto phi5 = named_series("phi5", order);
  EXPECT_TRUE((g1 + g2 + g3 - 1).is_zero());
  EXPECT_TRUE((g1 * g2 + g2 * g3 + g3 * g1 - phi5).is_zero());
  EXPECT_TRUE((g1 * g2 * g3 + phi5).is_zero());
  EXPECT_GE((g1 * g2 * g3).order(), order);
}

TEST(Modular, DeltaAndAntisymmetry) {
  auto d = delta_series(r(4));
  expect_terms(d, {{r(1, 2), 2}, {r(3, 2), -16}, {r(5, 2), 60}, {r(7, 2), -140}});
  auto g1 = g_series(1, r(6)), g2 = g_series(2, r(6)), g3 = g_series(3, r(6));
  auto swapped = (g1 - g3) * (g3 - g2) * (g2 - g1);
  EXPECT_TRUE((swapped + delta_series(r(6))).truncated(swapped.order()).is_zero());
}

TEST(Modular, EtaQuotients) {
  const EtaFactor j5[] = {{1, 6}, {5, -6}};
  expect_terms(eta_quotient_series(j5, r(4)), {{r(-1), 1}, {r(0), -6}, {r(1), 9}, {r(2), 10}, {r(3), -30}});
  const EtaFactor j10[] = {{2, 1}, {5, 5}, {1, -1}, {10, -5}};
  expect_terms(eta_quotient_series(j10, r(4)), {{r(-1), 1}, {r(0), 1}, {r(1), 1}, {r(2), 2}, {r(3), 2}});
  auto one = eta_quotient_series({}, r(5));
  EXPECT_TRUE(same_value(one, PuiseuxSeries::constant(r(1), r(5))));
  const EtaFactor zero[] = {{3, 0}};
  EXPECT_TRUE(same_value(eta_quotient_series(zero, r(5)), one));
  const EtaFactor eta24[] = {{1, 24}};
  auto d = eta_quotient_series(eta24, r(4));
  expect_terms(d, {{r(1), 1}, {r(2), -24}, {r(3), 252}});
  const EtaFactor bad[] = {{0, 1}};
  EXPECT_THROW(eta_quotient_series(bad, r(3)), DomainError);
}

TEST(Modular, EtaQuotientMatchesSubstitutionRoute) {
  // eta(m tau) as q^(1/24) (q;q)_inf with q -> q^m
  const exact::PochhammerFactor f[] = {{1, 1, 1}};
  auto eta = exact::pochhammer_product(f, r(1, 24), r(8));
  auto route = pow(subst_qpow(eta, r(2)), 1) * pow(subst_qpow(eta, r(5)), 5) * pow(eta, -1) *
               pow(subst_qpow(eta, r(10)), -5);
  const EtaFactor j10[] = {{2, 1}, {5, 5}, {1, -1}, {10, -5}};
  auto direct = eta_quotient_series(j10, r(3));
  EXPECT_TRUE(same_value(route.truncated(r(3)), direct));
}

TEST(Modular, JInvariant) {
  auto j = j_series(r(4));
  expect_terms(j, {{r(-1), 1}, {r(0), 744}, {r(1), 196884}, {r(2), 21493760}, {r(3), 864299970}});
  // independent E4^3 / Delta by integer long division
  const int len = 6;
  std::vector<long long> e4(len, 0), delta(len, 0);
  e4[0] = 1;
  for (int n = 1; n < len; ++n) {
    long long s3 = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s3 += 1LL * d * d * d;
    e4[n] = 240 * s3;
  }
  std::vector<long long> eta(len, 0);
  eta[0] = 1;
  for (int n = 1; n < len; ++n)
    for (int k = 0; k < 24; ++k)
      for (int i = len - 1; i >= n; --i) eta[i] -= eta[i - n];
  delta = eta;  // Delta / q
  std::vector<long long> cube(len, 0), sq(len, 0);
  for (int i = 0; i < len; ++i)
    for (int k = 0; k + i < len; ++k) sq[i + k] += e4[i] * e4[k];
  for (int i = 0; i < len; ++i)
    for (int k = 0; k + i < len; ++k) cube[i + k] += sq[i] * e4[k];
  std::vector<long long> quot(len, 0);
  for (int i = 0; i < len; ++i) {
    long long acc = cube[i];
    for (int k = 1; k <= i; ++k) acc -= delta[k] * quot[i - k];
    quot[i] = acc / delta[0];
  }
  for (int i = 0; i < 5; ++i) EXPECT_EQ(j.coeff(r(i - 1)), BigRational(static_cast<long>(quot[i]))) << i;
}

TEST(Modular, NamedSeries) {
  expect_terms(named_series("neg_g2_2tau", r(8)),
               {{r(1), 1}, {r(2), -1}, {r(3), -1}, {r(4), 2}, {r(5), 0}, {r(6), -2}, {r(7), 2}});
  expect_terms(named_series("phi5", r(6)), {{r(1), 1}, {r(2), -5}, {r(3), 15}, {r(4), -30}, {r(5), 40}});
  expect_terms(named_series("eta", r(3)), {{r(1, 24), 1}, {r(25, 24), -1}, {r(49, 24), -1}});
  EXPECT_THROW(named_series("psi", r(3)), UnknownName);
  for (const auto& name : series_names()) {
    auto s = named_series(name, r(5));
    EXPECT_GE(s.order(), r(5)) << name;
    EXPECT_EQ(120 % s.ram(), 0) << name;
  }
}

TEST(Modular, MemoizationConsistency) {
  clear_series_cache();
  auto lo = named_series("g2", r(10));
  auto hi = named_series("g2", r(20));
  EXPECT_TRUE(same_value(hi.truncated(r(10)), lo));
  auto again = named_series("g2", r(10));
  EXPECT_TRUE(same_value(again, lo));
  EXPECT_EQ(again.order(), r(10));
  clear_series_cache();
  EXPECT_TRUE(same_value(named_series("g2", r(10)), lo));
}

TEST(Modular, ConcurrentReadersAgree) {
  clear_series_cache();
  std::vector<std::future<PuiseuxSeries>> fs;
  for (int i = 0; i < 8; ++i) fs.push_back(std::async(std::launch::async, [] { return named_series("j10", r(15)); }));
  auto first = fs[0].get();
  for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_TRUE(same_value(fs[i].get(), first));
}

}  // namespace
}  // namespace bianchi::modular
