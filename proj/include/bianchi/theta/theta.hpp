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

#ifndef BIANCHI_THETA_THETA_HPP
#define BIANCHI_THETA_THETA_HPP

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

namespace bianchi::theta {

using Complex = std::complex<double>;

// Index k of theta_k, an integer or half-integer taken mod 5. Stored as
// 2k mod 10 so the arithmetic stays exact.
class ThetaIndex {
 public:
  constexpr ThetaIndex() = default;
  // k = twice / 2.
  static constexpr ThetaIndex from_twice(int twice) { return ThetaIndex(twice); }
  // Throws DomainError unless 2k is an integer.
  static ThetaIndex from_double(double k);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_half_integer() const { return twice_ % 2 != 0; }

  constexpr ThetaIndex operator+(ThetaIndex o) const { return ThetaIndex(twice_ + o.twice_); }
  constexpr ThetaIndex operator-(ThetaIndex o) const { return ThetaIndex(twice_ - o.twice_); }
  constexpr ThetaIndex operator-() const { return ThetaIndex(-twice_); }
  constexpr bool operator==(const ThetaIndex&) const = default;

 private:
  constexpr explicit ThetaIndex(int twice) : twice_(((twice % 10) + 10) % 10) {}
  int twice_ = 0;
};

// Integer index shorthand.
constexpr ThetaIndex idx(int k) { return ThetaIndex::from_twice(2 * k); }

struct SumOptions {
  // Terms are added until the next one is below threshold * (largest term).
  double threshold = 1e-30;
  // Hard cap on terms per side of the window.
  long max_terms = 1000000;
};

// sum_n exp(pi i (n+p)^2 tau + 2 pi i (n+p)(z + qchar)).
// Throws DomainError if Im(tau) <= 0, ConvergenceError if the window
// would need more than opts.max_terms terms, NumericOverflow if the value
// is not finite.
Complex theta_pq(double p, double qchar, Complex z, Complex tau, const SumOptions& opts = {});

// theta_k(z, tau) = -i theta_{(1/2 - k/5, 5/2)}(5z, 5tau).
Complex theta_k(ThetaIndex k, Complex z, Complex tau, const SumOptions& opts = {});
inline Complex theta_k(int k, Complex z, Complex tau) { return theta_k(idx(k), z, tau); }

// (theta_0, ..., theta_4)(z, tau).
std::array<Complex, 5> theta_vector(Complex z, Complex tau);

// -theta_1(0) / theta_2(0). Throws DivisionByZero if |theta_2(0)| < 1e-30.
Complex phi_numeric(Complex tau);

// |sum of terms| / max |term|; 0 when every term is 0.
double relative_residual(std::initializer_list<Complex> terms);
double relative_residual(std::span<const Complex> terms);

}  // namespace bianchi::theta

#endif  // BIANCHI_THETA_THETA_HPP
