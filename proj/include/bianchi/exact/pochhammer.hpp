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

#ifndef BIANCHI_EXACT_POCHHAMMER_HPP
#define BIANCHI_EXACT_POCHHAMMER_HPP

#include <cstdint>
#include <span>

#include "bianchi/exact/puiseux.hpp"

namespace bianchi::exact {

// One family of factors prod_{n >= 1, n = residue (mod modulus)} (1 - q^n)^exponent.
struct PochhammerFactor {
  std::int64_t residue;
  std::int64_t modulus;
  std::int64_t exponent;
};

// q^prefactor * prod over all families, known modulo q^order.
//
// Only factors with n < order - prefactor touch the window, so the
// product is finite. Throws DomainError on a modulus < 1 or
// order <= prefactor.
PuiseuxSeries pochhammer_product(std::span<const PochhammerFactor> factors, const BigRational& prefactor,
                                 const BigRational& order);

}  // namespace bianchi::exact

#endif  // BIANCHI_EXACT_POCHHAMMER_HPP
