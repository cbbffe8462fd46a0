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

#include "bianchi/exact/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "bianchi/errors.hpp"

namespace bianchi::exact {

namespace {

// Index of exponent e at ramification r; only valid when e * r is integral.
std::int64_t index_of(const BigRational& e, std::int64_t r) {
  BigRational scaled = e * BigRational(static_cast<long>(r));
  return numerator64(scaled);
}

bool representable(const BigRational& e, std::int64_t r) {
  BigRational scaled = e * BigRational(static_cast<long>(r));
  return is_integer(scaled);
}

std::int64_t ram_for(const BigRational& e) { return denominator64(e); }

// Both operands at their common ramification.
std::pair<PuiseuxSeries, PuiseuxSeries> aligned(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::int64_t r = lcm64(a.ram(), b.ram());
  return {a.rescaled(r), b.rescaled(r)};
}

}  // namespace

PuiseuxSeries::PuiseuxSeries() = default;

PuiseuxSeries::PuiseuxSeries(std::int64_t ram, std::int64_t lo, std::vector<BigRational> coeffs,
                             std::int64_t trunc)
    : ram_(ram), lo_(lo), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (ram_ < 1) throw InvalidSeries("ramification must be positive");
  if (lo_ > trunc_) throw InvalidSeries("lowest exponent above truncation");
  if (static_cast<std::int64_t>(coeffs_.size()) != trunc_ - lo_) {
    throw InvalidSeries("coefficient count " + std::to_string(coeffs_.size()) +
                        " does not match trunc - lo = " + std::to_string(trunc_ - lo_));
  }
  normalize();
}

void PuiseuxSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c != 0; });
  auto skip = first - coeffs_.begin();
  if (skip == 0) return;
  coeffs_.erase(coeffs_.begin(), first);
  lo_ += skip;
}

PuiseuxSeries PuiseuxSeries::zero(const BigRational& order) {
  std::int64_t r = ram_for(order);
  std::int64_t t = index_of(order, r);
  return PuiseuxSeries(r, t, {}, t);
}

PuiseuxSeries PuiseuxSeries::constant(const BigRational& c, const BigRational& order) {
  return monomial(c, BigRational(0), order);
}

PuiseuxSeries PuiseuxSeries::monomial(const BigRational& c, const BigRational& exponent,
                                      const BigRational& order) {
  std::int64_t r = lcm64(ram_for(exponent), ram_for(order));
  std::int64_t t = index_of(order, r);
  std::int64_t e = index_of(exponent, r);
  if (e >= t || c == 0) return PuiseuxSeries(r, t, {}, t);
  std::vector<BigRational> cs(static_cast<std::size_t>(t - e));
  cs[0] = c;
  return PuiseuxSeries(r, e, std::move(cs), t);
}

BigRational PuiseuxSeries::order() const {
  return make_rational(trunc_, ram_);
}

std::optional<BigRational> PuiseuxSeries::valuation() const {
  if (is_zero()) return std::nullopt;
  return make_rational(lo_, ram_);
}

bool PuiseuxSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

BigRational PuiseuxSeries::coeff(const BigRational& e) const {
  if (e >= order()) {
    throw OrderExceeded("coefficient of q^" + to_string(e) + " requested but series is known only modulo q^" +
                        to_string(order()));
  }
  if (!representable(e, ram_)) return BigRational(0);
  std::int64_t i = index_of(e, ram_);
  if (i < lo_) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(i - lo_)];
}

PuiseuxSeries PuiseuxSeries::rescaled(std::int64_t new_ram) const {
  if (new_ram == ram_) return *this;
  if (new_ram % ram_ != 0) throw InvalidSeries("rescale target is not a multiple of the ramification");
  std::int64_t f = new_ram / ram_;
  std::int64_t lo = lo_ * f;
  std::int64_t trunc = trunc_ * f;
  std::vector<BigRational> cs(static_cast<std::size_t>(trunc - lo));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) cs[j * static_cast<std::size_t>(f)] = coeffs_[j];
  return PuiseuxSeries(new_ram, lo, std::move(cs), trunc);
}

PuiseuxSeries PuiseuxSeries::with_minimal_ramification() const {
  std::int64_t g = std::gcd(ram_, trunc_);
  g = std::gcd(g, lo_);
  for (std::size_t j = 0; j < coeffs_.size() && g > 1; ++j) {
    if (coeffs_[j] != 0) g = std::gcd(g, lo_ + static_cast<std::int64_t>(j));
  }
  if (g <= 1) return *this;
  std::vector<BigRational> cs(static_cast<std::size_t>((trunc_ - lo_) / g));
  for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = coeffs_[j * static_cast<std::size_t>(g)];
  return PuiseuxSeries(ram_ / g, lo_ / g, std::move(cs), trunc_ / g);
}

PuiseuxSeries PuiseuxSeries::truncated(const BigRational& order) const {
  std::int64_t r = lcm64(ram_, ram_for(order));
  PuiseuxSeries s = rescaled(r);
  std::int64_t t = index_of(order, r);
  if (t >= s.trunc_) return s;
  std::int64_t lo = std::min(s.lo_, t);
  std::vector<BigRational> cs(s.coeffs_.begin(), s.coeffs_.begin() + (t - lo));
  return PuiseuxSeries(r, lo, std::move(cs), t);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  std::vector<BigRational> cs(coeffs_.size());
  for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = -coeffs_[j];
  return PuiseuxSeries(ram_, lo_, std::move(cs), trunc_);
}

std::vector<std::pair<BigRational, BigRational>> PuiseuxSeries::terms() const {
  std::vector<std::pair<BigRational, BigRational>> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) out.emplace_back(make_rational(lo_ + static_cast<std::int64_t>(j), ram_), coeffs_[j]);
  }
  return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = aligned(a, b);
  std::int64_t trunc = std::min(x.trunc(), y.trunc());
  std::int64_t lo = std::min({x.lo(), y.lo(), trunc});
  std::vector<BigRational> cs(static_cast<std::size_t>(trunc - lo));
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    std::int64_t i = x.lo() + static_cast<std::int64_t>(j);
    if (i >= trunc) break;
    cs[static_cast<std::size_t>(i - lo)] += x.coeffs()[j];
  }
  for (std::size_t j = 0; j < y.coeffs().size(); ++j) {
    std::int64_t i = y.lo() + static_cast<std::int64_t>(j);
    if (i >= trunc) break;
    cs[static_cast<std::size_t>(i - lo)] += y.coeffs()[j];
  }
  return PuiseuxSeries(x.ram(), lo, std::move(cs), trunc);
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

namespace {

std::vector<std::size_t> nonzero_positions(const std::vector<BigRational>& cs) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j] != 0) idx.push_back(j);
  }
  return idx;
}

// Schoolbook product of dense coefficient windows, keeping n terms.
std::vector<BigRational> convolve(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                  std::size_t n, bool integral) {
  auto ia = nonzero_positions(a);
  auto ib = nonzero_positions(b);
  std::vector<BigRational> out(n);
  if (integral) {
    std::vector<BigInteger> acc(n);
    for (std::size_t i : ia) {
      if (i >= n) break;
      mpz_srcptr ai = mpq_numref(a[i].get_mpq_t());
      for (std::size_t j : ib) {
        if (i + j >= n) break;
        mpz_addmul(acc[i + j].get_mpz_t(), ai, mpq_numref(b[j].get_mpq_t()));
      }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = BigRational(acc[k]);
    return out;
  }
  BigRational t;
  for (std::size_t i : ia) {
    if (i >= n) break;
    for (std::size_t j : ib) {
      if (i + j >= n) break;
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return out;
}

}  // namespace

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = aligned(a, b);
  std::int64_t trunc = std::min(x.trunc() + y.lo(), y.trunc() + x.lo());
  std::int64_t lo = x.lo() + y.lo();
  if (x.is_zero() || y.is_zero() || trunc <= lo) {
    return PuiseuxSeries(x.ram(), trunc, {}, trunc);
  }
  auto n = static_cast<std::size_t>(trunc - lo);
  auto cs = convolve(x.coeffs(), y.coeffs(), n, x.all_integer() && y.all_integer());
  return PuiseuxSeries(x.ram(), lo, std::move(cs), trunc);
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * inverse(b); }

PuiseuxSeries operator+(const PuiseuxSeries& a, const BigRational& c) {
  if (c == 0 || a.trunc() <= 0) return a;
  std::int64_t lo = std::min<std::int64_t>(a.lo(), 0);
  std::vector<BigRational> cs(static_cast<std::size_t>(a.trunc() - lo));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    cs[static_cast<std::size_t>(a.lo() - lo) + j] = a.coeffs()[j];
  }
  cs[static_cast<std::size_t>(-lo)] += c;
  return PuiseuxSeries(a.ram(), lo, std::move(cs), a.trunc());
}

PuiseuxSeries operator+(const BigRational& c, const PuiseuxSeries& a) { return a + c; }
PuiseuxSeries operator-(const PuiseuxSeries& a, const BigRational& c) { return a + BigRational(-c); }
PuiseuxSeries operator-(const BigRational& c, const PuiseuxSeries& a) { return (-a) + c; }

PuiseuxSeries operator*(const PuiseuxSeries& a, const BigRational& c) {
  if (c == 0) return PuiseuxSeries(a.ram(), a.trunc(), {}, a.trunc());
  std::vector<BigRational> cs(a.coeffs().size());
  for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = a.coeffs()[j] * c;
  return PuiseuxSeries(a.ram(), a.lo(), std::move(cs), a.trunc());
}

PuiseuxSeries operator*(const BigRational& c, const PuiseuxSeries& a) { return a * c; }

PuiseuxSeries operator/(const PuiseuxSeries& a, const BigRational& c) {
  if (c == 0) throw DivisionByZero("series divided by zero scalar");
  return a * BigRational(1 / c);
}

PuiseuxSeries operator+(const PuiseuxSeries& a, long c) { return a + BigRational(c); }
PuiseuxSeries operator+(long c, const PuiseuxSeries& a) { return a + BigRational(c); }
PuiseuxSeries operator-(const PuiseuxSeries& a, long c) { return a + BigRational(-c); }
PuiseuxSeries operator-(long c, const PuiseuxSeries& a) { return (-a) + BigRational(c); }
PuiseuxSeries operator*(const PuiseuxSeries& a, long c) { return a * BigRational(c); }
PuiseuxSeries operator*(long c, const PuiseuxSeries& a) { return a * BigRational(c); }

PuiseuxSeries inverse(const PuiseuxSeries& a) {
  if (a.is_zero()) {
    throw ZeroLeadingCoefficient("series has no nonzero coefficient below q^" + to_string(a.order()));
  }
  const auto& c = a.coeffs();
  auto n = c.size();
  std::vector<BigRational> b(n);
  const BigRational& a0 = c[0];
  bool unit_integral = a.all_integer() && (a0 == 1 || a0 == -1);
  if (unit_integral) {
    // a0 = +-1 keeps every coefficient of the inverse integral.
    std::vector<BigInteger> bi(n);
    bi[0] = a0.get_num();
    auto nz = nonzero_positions(c);
    BigInteger acc;
    for (std::size_t k = 1; k < n; ++k) {
      acc = 0;
      for (std::size_t j : nz) {
        if (j == 0) continue;
        if (j > k) break;
        mpz_addmul(acc.get_mpz_t(), c[j].get_num_mpz_t(), bi[k - j].get_mpz_t());
      }
      bi[k] = (a0 == 1) ? BigInteger(-acc) : acc;
    }
    for (std::size_t k = 0; k < n; ++k) b[k] = BigRational(bi[k]);
  } else {
    BigRational inv0 = 1 / a0;
    b[0] = inv0;
    BigRational acc, t;
    for (std::size_t k = 1; k < n; ++k) {
      acc = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (c[j] == 0) continue;
        mpq_mul(t.get_mpq_t(), c[j].get_mpq_t(), b[k - j].get_mpq_t());
        acc += t;
      }
      b[k] = -acc * inv0;
    }
  }
  std::int64_t lo = -a.lo();
  return PuiseuxSeries(a.ram(), lo, std::move(b), lo + static_cast<std::int64_t>(n));
}

PuiseuxSeries pow(const PuiseuxSeries& a, std::int64_t n) {
  if (n < 0) return pow(inverse(a), -n);
  if (n == 0) {
    std::int64_t rel = a.trunc() - a.lo();
    return PuiseuxSeries::constant(BigRational(1), make_rational(rel, a.ram()));
  }
  PuiseuxSeries result;
  bool have = false;
  PuiseuxSeries base = a;
  while (n > 0) {
    if (n & 1) {
      result = have ? result * base : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries subst_qpow(const PuiseuxSeries& a, const BigRational& r) {
  if (r <= 0) throw DomainError("q-power substitution needs r > 0");
  std::int64_t p = numerator64(r);
  std::int64_t s = denominator64(r);
  std::int64_t g = std::gcd(p, a.ram());
  std::int64_t step = p / g;
  std::int64_t ram = s * a.ram() / g;
  std::int64_t lo = step * a.lo();
  std::int64_t trunc = step * a.trunc();
  std::vector<BigRational> cs(static_cast<std::size_t>(trunc - lo));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    cs[j * static_cast<std::size_t>(step)] = a.coeffs()[j];
  }
  return PuiseuxSeries(ram, lo, std::move(cs), trunc);
}

bool same_value(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto [x, y] = aligned(a, b);
  return x.trunc() == y.trunc() && x.lo() == y.lo() && x.coeffs() == y.coeffs();
}

std::optional<BigRational> first_nonzero_exponent(const PuiseuxSeries& a) { return a.valuation(); }

}  // namespace bianchi::exact
