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

#ifndef BIANCHI_EXACT_PUISEUX_HPP
#define BIANCHI_EXACT_PUISEUX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bianchi/exact/rational.hpp"

namespace bianchi::exact {

// A truncated Laurent series in q^(1/R) with exact rational coefficients:
//
//   sum_{i >= lo} c_i q^(i/R)   (mod q^(trunc/R))
//
// Storage is dense: coeffs()[j] is the coefficient of q^((lo + j)/R) and
// coeffs().size() == trunc - lo. Leading zeros are stripped on
// construction, so a nonzero series always has coeffs().front() != 0; the
// zero series has lo == trunc and no coefficients.
//
// Values are immutable. Binary operations bring both operands to the lcm
// of their ramifications and carry the tightest truncation the inputs
// justify.
class PuiseuxSeries {
 public:
  // The zero series known modulo q^0.
  PuiseuxSeries();

  // Throws InvalidSeries if ram < 1, coeffs.size() != trunc - lo, or
  // lo > trunc.
  PuiseuxSeries(std::int64_t ram, std::int64_t lo, std::vector<BigRational> coeffs,
                std::int64_t trunc);

  static PuiseuxSeries zero(const BigRational& order);
  static PuiseuxSeries constant(const BigRational& c, const BigRational& order);
  // c * q^exponent, known modulo q^order.
  static PuiseuxSeries monomial(const BigRational& c, const BigRational& exponent,
                                const BigRational& order);

  std::int64_t ram() const { return ram_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t trunc() const { return trunc_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  // Exponent below which every coefficient is known: trunc / ram.
  BigRational order() const;
  // Lowest exponent with a nonzero coefficient, if any.
  std::optional<BigRational> valuation() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool all_integer() const;

  // Coefficient of q^e. Throws OrderExceeded if e >= order().
  BigRational coeff(const BigRational& e) const;

  // Same value expressed at ramification new_ram (a multiple of ram()).
  PuiseuxSeries rescaled(std::int64_t new_ram) const;
  // Same value with the smallest ramification that represents every
  // stored exponent and the truncation point.
  PuiseuxSeries with_minimal_ramification() const;
  // Forget everything at or above q^order. Never extends the window.
  PuiseuxSeries truncated(const BigRational& order) const;

  PuiseuxSeries operator-() const;

  // Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<BigRational, BigRational>> terms() const;

 private:
  void normalize();

  std::int64_t ram_ = 1;
  std::int64_t lo_ = 0;
  std::int64_t trunc_ = 0;
  std::vector<BigRational> coeffs_;
};

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Scalars are exact: they never shrink the truncation window.
PuiseuxSeries operator+(const PuiseuxSeries& a, const BigRational& c);
PuiseuxSeries operator+(const BigRational& c, const PuiseuxSeries& a);
PuiseuxSeries operator-(const PuiseuxSeries& a, const BigRational& c);
PuiseuxSeries operator-(const BigRational& c, const PuiseuxSeries& a);
PuiseuxSeries operator*(const PuiseuxSeries& a, const BigRational& c);
PuiseuxSeries operator*(const BigRational& c, const PuiseuxSeries& a);
PuiseuxSeries operator/(const PuiseuxSeries& a, const BigRational& c);

PuiseuxSeries operator+(const PuiseuxSeries& a, long c);
PuiseuxSeries operator+(long c, const PuiseuxSeries& a);
PuiseuxSeries operator-(const PuiseuxSeries& a, long c);
PuiseuxSeries operator-(long c, const PuiseuxSeries& a);
PuiseuxSeries operator*(const PuiseuxSeries& a, long c);
PuiseuxSeries operator*(long c, const PuiseuxSeries& a);

// Multiplicative inverse of a truncated Laurent unit. The relative
// precision (trunc - lo) is preserved. Throws ZeroLeadingCoefficient for
// the zero series.
PuiseuxSeries inverse(const PuiseuxSeries& a);

// a^n by repeated squaring; negative n goes through inverse().
// a^0 is 1 known to the relative precision of a.
PuiseuxSeries pow(const PuiseuxSeries& a, std::int64_t n);

// Substitute q -> q^r for rational r > 0 (tau -> r tau).
PuiseuxSeries subst_qpow(const PuiseuxSeries& a, const BigRational& r);

// Value equality: same truncation point and identical coefficients at a
// common ramification.
bool same_value(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Lowest exponent with a nonzero coefficient inside the known window, or
// nullopt if the series is zero there.
std::optional<BigRational> first_nonzero_exponent(const PuiseuxSeries& a);

}  // namespace bianchi::exact

#endif  // BIANCHI_EXACT_PUISEUX_HPP
