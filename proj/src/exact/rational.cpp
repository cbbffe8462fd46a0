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

#include "bianchi/exact/rational.hpp"

#include <numeric>
#include <string>

#include "bianchi/errors.hpp"

namespace bianchi::exact {

BigRational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRational r{BigInteger{static_cast<long>(num)}, BigInteger{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInteger to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInteger{std::string(s), 10};
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInteger d = to_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    BigRational r{to_integer(num), d};
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    std::size_t frac_len = text.size() - dot - 1;
    if (!valid_integer(digits) || frac_len == 0) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    BigInteger scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_len);
    BigRational r{to_integer(digits), scale};
    r.canonicalize();
    return r;
  }
  if (!valid_integer(text)) throw ParseError("malformed integer '" + std::string(text) + "'");
  return BigRational{to_integer(text)};
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

std::int64_t floor_to_int(const BigRational& x) {
  BigInteger q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q.get_si();
}

std::int64_t ceil_to_int(const BigRational& x) {
  BigInteger q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q.get_si();
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t denominator64(const BigRational& x) { return x.get_den().get_si(); }
std::int64_t numerator64(const BigRational& x) { return x.get_num().get_si(); }

double to_double(const BigRational& x) { return x.get_d(); }

}  // namespace bianchi::exact
