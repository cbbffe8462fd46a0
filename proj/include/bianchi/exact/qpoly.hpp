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

#ifndef BIANCHI_EXACT_QPOLY_HPP
#define BIANCHI_EXACT_QPOLY_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/exact/puiseux.hpp"
#include "bianchi/exact/rational.hpp"

namespace bianchi::exact {

// Dense univariate polynomial over Q. coeffs()[i] multiplies x^i; the top
// coefficient is nonzero, and the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRational> coeffs);

  // Sum of c * x^k over the given (k, c) pairs.
  static QPoly from_terms(std::initializer_list<std::pair<int, long>> terms);
  static QPoly monomial(const BigRational& c, int k);
  static QPoly constant(const BigRational& c) { return monomial(c, 0); }
  static QPoly x() { return monomial(BigRational(1), 1); }

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigRational coeff(int i) const;
  // Smallest power with a nonzero coefficient; -1 for zero.
  int low_degree() const;

  QPoly operator-() const;

  // Horner evaluation over any carrier that supports exact scalar
  // arithmetic with the polynomial's coefficients.
  std::complex<double> operator()(const std::complex<double>& x) const;
  PuiseuxSeries operator()(const PuiseuxSeries& x) const;
  BigRational operator()(const BigRational& x) const;

  // Human-readable, highest power first, in the variable `var`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const BigRational& c);
QPoly operator*(const BigRational& c, const QPoly& a);
QPoly pow(const QPoly& a, unsigned n);
bool operator==(const QPoly& a, const QPoly& b);

}  // namespace bianchi::exact

#endif  // BIANCHI_EXACT_QPOLY_HPP
