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

#include "bianchi/theta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi::theta {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ThetaIndex ThetaIndex::from_double(double k) {
  double t = 2.0 * k;
  double r = std::round(t);
  if (std::abs(t - r) > 1e-12) throw DomainError("theta index must be an integer or half-integer");
  return ThetaIndex(static_cast<int>(r));
}

Complex theta_pq(double p, double qchar, Complex z, Complex tau, const SumOptions& opts) {
  double b = tau.imag();
  if (!(b > 0)) throw DomainError("theta_pq: Im(tau) must be positive");
  // log |term(t)| = -pi b t^2 - 2 pi t Im z, with t = n + p; the peak is at
  // t = -Im z / b.
  auto log_mag = [&](double t) { return -kPi * b * t * t - 2.0 * kPi * t * z.imag(); };
  auto term = [&](double t) {
    Complex e = Complex(0, kPi) * (t * t * tau + 2.0 * t * (z + qchar));
    return std::exp(e);
  };
  long n0 = std::lround(-p - z.imag() / b);
  double peak = log_mag(n0 + p);
  if (peak > 700) throw NumericOverflow("theta_pq: terms overflow binary64");
  double cutoff = peak + std::log(opts.threshold);

  std::vector<Complex> terms{term(n0 + p)};
  for (int dir : {-1, 1}) {
    long steps = 0;
    for (long n = n0 + dir;; n += dir) {
      double t = n + p;
      // past the peak the log-magnitude is monotone in |n - n0|
      if (log_mag(t) < cutoff) break;
      if (++steps > opts.max_terms) throw ConvergenceError("theta_pq: window exceeds the term cap");
      terms.push_back(term(t));
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
  Complex sum = 0;
  for (Complex t : terms) sum += t;
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) throw NumericOverflow("theta_pq: non-finite result");
  return sum;
}

Complex theta_k(ThetaIndex k, Complex z, Complex tau, const SumOptions& opts) {
  double p = 0.5 - k.value() / 5.0;
  return Complex(0, -1) * theta_pq(p, 2.5, 5.0 * z, 5.0 * tau, opts);
}

std::array<Complex, 5> theta_vector(Complex z, Complex tau) {
  std::array<Complex, 5> v;
  for (int k = 0; k < 5; ++k) v[k] = theta_k(idx(k), z, tau);
  return v;
}

Complex phi_numeric(Complex tau) {
  Complex t2 = theta_k(idx(2), 0.0, tau);
  if (std::abs(t2) < 1e-30) throw DivisionByZero("phi_numeric: theta_2(0) vanishes");
  return -theta_k(idx(1), 0.0, tau) / t2;
}

double relative_residual(std::span<const Complex> terms) {
  Complex sum = 0;
  double scale = 0;
  for (Complex t : terms) {
    sum += t;
    scale = std::max(scale, std::abs(t));
  }
  return scale == 0 ? 0.0 : std::abs(sum) / scale;
}

double relative_residual(std::initializer_list<Complex> terms) {
  return relative_residual(std::span<const Complex>(terms.begin(), terms.size()));
}

}  // namespace bianchi::theta
