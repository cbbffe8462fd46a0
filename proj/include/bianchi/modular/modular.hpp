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

#ifndef BIANCHI_MODULAR_MODULAR_HPP
#define BIANCHI_MODULAR_MODULAR_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/exact/puiseux.hpp"

namespace bianchi::modular {

using exact::BigRational;
using exact::PuiseuxSeries;

// q^(1/5) prod (1-q^(5n-1))(1-q^(5n-4)) / ((1-q^(5n-2))(1-q^(5n-3))).
// Requires order > 1/5.
PuiseuxSeries phi_series(const BigRational& order);

// g1 = phi^2/phi(2tau), g2 = -phi(tau/2) phi^2, g3 = phi phi(2tau)/phi(tau/2).
PuiseuxSeries g_series(int i, const BigRational& order);

// (g1-g2)(g2-g3)(g3-g1).
PuiseuxSeries delta_series(const BigRational& order);

struct EtaFactor {
  std::int64_t scale;     // m in eta(m tau)
  std::int64_t exponent;  // e
};

// prod eta(m tau)^e. Throws DomainError on a scale < 1.
PuiseuxSeries eta_quotient_series(std::span<const EtaFactor> spec, const BigRational& order);

// E4^3 / eta^24.
PuiseuxSeries j_series(const BigRational& order);

// eta(tau)^6 / eta(5tau)^6.
PuiseuxSeries j5_series(const BigRational& order);
// eta(2tau) eta(5tau)^5 / (eta(tau) eta(10tau)^5).
PuiseuxSeries j10_series(const BigRational& order);

// Names accepted by named_series, sorted.
const std::vector<std::string>& series_names();

// Dispatch over phi, phi5, g1, g2, g3, delta, eta, j, j5, j10 and
// neg_g2_2tau, memoized. The result has exactly the requested order and
// the smallest ramification that represents it. Throws UnknownName.
PuiseuxSeries named_series(std::string_view name, const BigRational& order);

// Drops every memoized series.
void clear_series_cache();

}  // namespace bianchi::modular

#endif  // BIANCHI_MODULAR_MODULAR_HPP
