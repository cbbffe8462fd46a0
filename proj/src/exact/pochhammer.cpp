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

#include "bianchi/exact/pochhammer.hpp"

#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi::exact {

PuiseuxSeries pochhammer_product(std::span<const PochhammerFactor> factors, const BigRational& prefactor,
                                 const BigRational& order) {
  if (order <= prefactor) throw DomainError("pochhammer_product: order must exceed the prefactor exponent");
  // Integer power series of the product, modulo q^len.
  std::int64_t len = ceil_to_int(BigRational(order - prefactor));
  std::vector<BigInteger> p(static_cast<std::size_t>(len));
  p[0] = 1;
  for (const auto& f : factors) {
    if (f.modulus < 1) throw DomainError("pochhammer_product: modulus must be >= 1");
    std::int64_t first = ((f.residue % f.modulus) + f.modulus) % f.modulus;
    if (first == 0) first = f.modulus;
    for (std::int64_t n = first; n < len; n += f.modulus) {
      auto step = static_cast<std::size_t>(n);
      if (f.exponent > 0) {
        // multiply by (1 - q^n), descending so each pass reads old values
        for (std::int64_t e = 0; e < f.exponent; ++e) {
          for (std::size_t i = p.size() - 1; i >= step; --i) p[i] -= p[i - step];
        }
      } else {
        // multiply by 1/(1 - q^n) = sum q^{kn}, ascending
        for (std::int64_t e = 0; e < -f.exponent; ++e) {
          for (std::size_t i = step; i < p.size(); ++i) p[i] += p[i - step];
        }
      }
    }
  }
  std::int64_t ram = lcm64(denominator64(prefactor), denominator64(order));
  std::int64_t lo = numerator64(BigRational(prefactor * BigRational(static_cast<long>(ram))));
  std::int64_t trunc = numerator64(BigRational(order * BigRational(static_cast<long>(ram))));
  std::vector<BigRational> cs(static_cast<std::size_t>(trunc - lo));
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t at = k * static_cast<std::size_t>(ram);
    if (at >= cs.size()) break;
    cs[at] = BigRational(p[k]);
  }
  return PuiseuxSeries(ram, lo, std::move(cs), trunc);
}

}  // namespace bianchi::exact
