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

#include "bianchi/exact/qpoly.hpp"

#include <algorithm>

namespace bianchi::exact {

QPoly::QPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::from_terms(std::initializer_list<std::pair<int, long>> terms) {
  QPoly p;
  for (const auto& [k, c] : terms) p = p + monomial(BigRational(c), k);
  return p;
}

QPoly QPoly::monomial(const BigRational& c, int k) {
  std::vector<BigRational> cs(static_cast<std::size_t>(k) + 1);
  cs[static_cast<std::size_t>(k)] = c;
  return QPoly(std::move(cs));
}

BigRational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

int QPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

QPoly QPoly::operator-() const {
  std::vector<BigRational> cs(coeffs_.size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = -coeffs_[i];
  return QPoly(std::move(cs));
}

std::complex<double> QPoly::operator()(const std::complex<double>& x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

PuiseuxSeries QPoly::operator()(const PuiseuxSeries& x) const {
  if (coeffs_.empty()) return PuiseuxSeries::zero(x.order());
  PuiseuxSeries acc = PuiseuxSeries::constant(coeffs_.back(), x.order());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational QPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || i == 0) out += exact::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigRational> cs(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) cs[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) cs[i] += b.coeffs()[i];
  return QPoly(std::move(cs));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<BigRational> cs(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) cs[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return QPoly(std::move(cs));
}

QPoly operator*(const QPoly& a, const BigRational& c) { return a * QPoly::constant(c); }
QPoly operator*(const BigRational& c, const QPoly& a) { return a * QPoly::constant(c); }

QPoly pow(const QPoly& a, unsigned n) {
  QPoly result = QPoly::constant(BigRational(1));
  QPoly base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs() == b.coeffs(); }

}  // namespace bianchi::exact
