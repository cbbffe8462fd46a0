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

#include "bianchi/modular/modular.hpp"

#include <array>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <utility>

#include "bianchi/errors.hpp"
#include "bianchi/exact/pochhammer.hpp"

namespace bianchi::modular {

using exact::BigInteger;
using exact::PochhammerFactor;

namespace {

// Evaluates build(m) for increasing input orders m until the result is
// known through `order`, then cuts it there.
PuiseuxSeries at_order(const BigRational& order, BigRational m,
                       const std::function<PuiseuxSeries(const BigRational&)>& build) {
  for (;;) {
    PuiseuxSeries s = build(m);
    if (s.order() >= order) return s.truncated(order);
    m += 2 * (order - s.order()) + 1;
  }
}

BigRational q(long num, long den = 1) { return exact::make_rational(num, den); }

}  // namespace

PuiseuxSeries phi_series(const BigRational& order) {
  if (order <= q(1, 5)) throw DomainError("phi_series: order must exceed 1/5");
  static const std::array<PochhammerFactor, 4> rr{{{1, 5, 1}, {4, 5, 1}, {2, 5, -1}, {3, 5, -1}}};
  return exact::pochhammer_product(rr, q(1, 5), order);
}

PuiseuxSeries g_series(int i, const BigRational& order) {
  switch (i) {
    case 1:
      return at_order(order, order + q(1, 5), [](const BigRational& m) {
        PuiseuxSeries f = phi_series(m);
        return f * f / exact::subst_qpow(f, q(2));
      });
    case 2:
      return at_order(order, 2 * order, [](const BigRational& m) {
        PuiseuxSeries f = phi_series(m);
        return -(exact::subst_qpow(f, q(1, 2)) * f * f);
      });
    case 3:
      return at_order(order, 2 * order + 1, [](const BigRational& m) {
        PuiseuxSeries f = phi_series(m);
        return f * exact::subst_qpow(f, q(2)) / exact::subst_qpow(f, q(1, 2));
      });
    default:
      throw DomainError("g_series: index must be 1, 2 or 3");
  }
}

PuiseuxSeries delta_series(const BigRational& order) {
  return at_order(order, order, [](const BigRational& m) {
    PuiseuxSeries g1 = g_series(1, m), g2 = g_series(2, m), g3 = g_series(3, m);
    return (g1 - g2) * (g2 - g3) * (g3 - g1);
  });
}

PuiseuxSeries eta_quotient_series(std::span<const EtaFactor> spec, const BigRational& order) {
  std::vector<PochhammerFactor> factors;
  BigRational prefactor = 0;
  for (const auto& f : spec) {
    if (f.scale < 1) throw DomainError("eta_quotient_series: scale must be >= 1");
    if (f.exponent == 0) continue;
    factors.push_back({0, f.scale, f.exponent});
    prefactor += q(static_cast<long>(f.scale * f.exponent), 24);
  }
  return exact::pochhammer_product(factors, prefactor, order);
}

PuiseuxSeries j_series(const BigRational& order) {
  std::int64_t n = exact::ceil_to_int(order) + 1;
  std::vector<BigRational> e4(static_cast<std::size_t>(n));
  e4[0] = 1;
  for (std::int64_t k = 1; k < n; ++k) {
    BigInteger s = 0;
    for (std::int64_t d = 1; d <= k; ++d) {
      if (k % d == 0) s += BigInteger(static_cast<long>(d)) * static_cast<long>(d * d);
    }
    e4[static_cast<std::size_t>(k)] = BigRational(240 * s);
  }
  PuiseuxSeries E4(1, 0, std::move(e4), n);
  static const std::array<EtaFactor, 1> eta24{{{1, 24}}};
  PuiseuxSeries d = eta_quotient_series(eta24, BigRational(order + 2));
  return (pow(E4, 3) / d).truncated(order);
}

PuiseuxSeries j5_series(const BigRational& order) {
  static const std::array<EtaFactor, 2> spec{{{1, 6}, {5, -6}}};
  return eta_quotient_series(spec, order);
}

PuiseuxSeries j10_series(const BigRational& order) {
  static const std::array<EtaFactor, 4> spec{{{2, 1}, {5, 5}, {1, -1}, {10, -5}}};
  return eta_quotient_series(spec, order);
}

namespace {

using Builder = PuiseuxSeries (*)(const BigRational&);

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table{
      {"phi", [](const BigRational& n) { return phi_series(n); }},
      {"phi5",
       [](const BigRational& n) { return at_order(n, n, [](const BigRational& m) { return pow(phi_series(m), 5); }); }},
      {"g1", [](const BigRational& n) { return g_series(1, n); }},
      {"g2", [](const BigRational& n) { return g_series(2, n); }},
      {"g3", [](const BigRational& n) { return g_series(3, n); }},
      {"delta", [](const BigRational& n) { return delta_series(n); }},
      {"eta",
       [](const BigRational& n) {
         static const std::array<EtaFactor, 1> one{{{1, 1}}};
         return eta_quotient_series(one, n);
       }},
      {"j", [](const BigRational& n) { return j_series(n); }},
      {"j5", [](const BigRational& n) { return j5_series(n); }},
      {"j10", [](const BigRational& n) { return j10_series(n); }},
      {"neg_g2_2tau",
       [](const BigRational& n) { return -exact::subst_qpow(g_series(2, n / 2), exact::make_rational(2)); }},
  };
  return table;
}

// Get-or-compute map. Each (name, order) is computed once; a request is
// served from any cached entry of the same name at a higher order.
class SeriesCache {
 public:
  PuiseuxSeries get(std::string_view name, const BigRational& order, Builder build) {
    std::shared_future<PuiseuxSeries> fut;
    std::promise<PuiseuxSeries> mine;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto& byorder = entries_[std::string(name)];
      auto it = byorder.lower_bound(order);
      if (it != byorder.end()) {
        fut = it->second;
      } else {
        fut = mine.get_future().share();
        byorder.emplace(order, fut);
        owner = true;
      }
    }
    if (owner) {
      try {
        mine.set_value(build(order).with_minimal_ramification());
      } catch (...) {
        mine.set_exception(std::current_exception());
        std::lock_guard lock(mu_);
        entries_[std::string(name)].erase(order);
      }
    }
    const PuiseuxSeries& s = fut.get();
    return s.order() == order ? s : s.truncated(order).with_minimal_ramification();
  }

  void clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
  }

 private:
  struct Less {
    bool operator()(const BigRational& a, const BigRational& b) const { return a < b; }
  };
  std::mutex mu_;
  std::map<std::string, std::map<BigRational, std::shared_future<PuiseuxSeries>, Less>> entries_;
};

SeriesCache& cache() {
  static SeriesCache c;
  return c;
}

}  // namespace

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : builders()) v.push_back(k);
    return v;
  }();
  return names;
}

PuiseuxSeries named_series(std::string_view name, const BigRational& order) {
  auto it = builders().find(name);
  if (it == builders().end()) throw UnknownName("unknown series name: " + std::string(name));
  return cache().get(name, order, it->second);
}

void clear_series_cache() { cache().clear(); }

}  // namespace bianchi::modular
