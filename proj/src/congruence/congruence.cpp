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

#include "bianchi/congruence/congruence.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>

#include "bianchi/errors.hpp"

namespace bianchi::congruence {

namespace {

int mod(long x, int n) { return static_cast<int>(((x % n) + n) % n); }

std::size_t code(const ModMatrix& m, int n) {
  auto N = static_cast<std::size_t>(n);
  return ((static_cast<std::size_t>(m.a) * N + static_cast<std::size_t>(m.b)) * N + static_cast<std::size_t>(m.c)) * N +
         static_cast<std::size_t>(m.d);
}

void check_modulus(int n) {
  if (n < 1 || n > kMaxModulus) throw DomainError("modulus must lie in [1, 30]");
}

}  // namespace

ModMatrix reduce(long a, long b, long c, long d, int n) { return {mod(a, n), mod(b, n), mod(c, n), mod(d, n)}; }

ModMatrix mul(const ModMatrix& x, const ModMatrix& y, int n) {
  return reduce(static_cast<long>(x.a) * y.a + static_cast<long>(x.b) * y.c,
                static_cast<long>(x.a) * y.b + static_cast<long>(x.b) * y.d,
                static_cast<long>(x.c) * y.a + static_cast<long>(x.d) * y.c,
                static_cast<long>(x.c) * y.b + static_cast<long>(x.d) * y.d, n);
}

ModMatrix inverse(const ModMatrix& x, int n) { return reduce(x.d, -x.b, -x.c, x.a, n); }

ModMatrix negated(const ModMatrix& x, int n) { return reduce(-x.a, -x.b, -x.c, -x.d, n); }

std::vector<ModMatrix> enumerate_group(int n) {
  check_modulus(n);
  std::vector<ModMatrix> out;
  if (n == 1) return {ModMatrix{0, 0, 0, 0}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (mod(static_cast<long>(a) * d - static_cast<long>(b) * c, n) == 1) out.push_back({a, b, c, d});
  return out;
}

std::int64_t sl2_order(int n) {
  check_modulus(n);
  std::int64_t num = static_cast<std::int64_t>(n) * n * n, den = 1;
  int m = n;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    num *= p * p - 1;
    den *= p * p;
  }
  return num / den;
}

SubgroupSpec full_group() {
  return {"Gamma(1)", 1, [](const ModMatrix&, int) { return true; }};
}

SubgroupSpec gamma(int k) {
  return {"Gamma(" + std::to_string(k) + ")", k, [k](const ModMatrix& m, int) {
            return m.a % k == 1 % k && m.b % k == 0 && m.c % k == 0 && m.d % k == 1 % k;
          }};
}

SubgroupSpec gamma0(int k) {
  return {"Gamma0(" + std::to_string(k) + ")", k, [k](const ModMatrix& m, int) { return m.c % k == 0; }};
}

SubgroupSpec gamma1(int k) {
  return {"Gamma1(" + std::to_string(k) + ")", k,
          [k](const ModMatrix& m, int) { return m.c % k == 0 && m.a % k == 1 % k && m.d % k == 1 % k; }};
}

SubgroupSpec intersect(const SubgroupSpec& x, const SubgroupSpec& y) {
  return {x.name + "&" + y.name, std::lcm(x.level, y.level),
          [f = x.contains, g = y.contains](const ModMatrix& m, int n) { return f(m, n) && g(m, n); }};
}

SubgroupSpec g1() {
  return {"G1", 10, [](const ModMatrix& m, int) {
            return m.a % 10 == 1 && m.d % 10 == 1 && m.b % 2 == 0 && m.c % 10 == 0;
          }};
}

SubgroupSpec g2() {
  return {"G2", 10, [](const ModMatrix& m, int) {
            if (!(m.a % 5 == 1 && m.d % 5 == 1 && m.c % 5 == 0)) return false;
            int a = m.a % 2, b = m.b % 2, c = m.c % 2, d = m.d % 2;
            return (a == 1 && b == 0 && c == 0 && d == 1) || (a == 0 && b == 1 && c == 1 && d == 1) ||
                   (a == 1 && b == 1 && c == 1 && d == 0);
          }};
}

SubgroupSpec g2_literal() {
  return {"G2-literal", 10, [](const ModMatrix& m, int) {
            return m.a % 10 == 1 && m.d % 10 == 1 && m.b % 2 == 0 && m.c % 5 == 0;
          }};
}

SubgroupSpec g3() {
  return {"G3", 10, [](const ModMatrix& m, int) {
            return m.a % 10 == 1 && m.d % 10 == 1 && m.b % 5 == 0 && m.c % 10 == 0;
          }};
}

SubgroupSpec g4() {
  return {"G4", 10, [](const ModMatrix& m, int) {
            ModMatrix r{m.a % 10, m.b % 10, m.c % 10, m.d % 10};
            return r == ModMatrix{1, 0, 0, 1} || r == ModMatrix{1, 5, 5, 6} || r == ModMatrix{6, 5, 5, 1};
          }};
}

SubgroupSpec spec_by_name(std::string_view name) {
  auto amp = name.find('&');
  if (amp != std::string_view::npos) return intersect(spec_by_name(name.substr(0, amp)), spec_by_name(name.substr(amp + 1)));
  static const std::map<std::string, SubgroupSpec (*)(), std::less<>> fixed{
      {"G1", g1}, {"G2", g2}, {"G2-literal", g2_literal}, {"G3", g3}, {"G4", g4}, {"SL2(Z)", full_group}};
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  static const std::regex pat(R"(Gamma([01]?)\((\d+)\))");
  std::string s(name);
  std::smatch m;
  if (std::regex_match(s, m, pat)) {
    int k = std::stoi(m[2]);
    if (k < 1 || k > kMaxModulus) throw UnknownName("level out of range in " + s);
    if (m[1] == "0") return gamma0(k);
    if (m[1] == "1") return gamma1(k);
    return k == 1 ? full_group() : gamma(k);
  }
  throw UnknownName("unknown group: " + s);
}

Subgroup::Subgroup(int n, std::vector<ModMatrix> elems) : n_(n), elems_(std::move(elems)) {
  member_.assign(static_cast<std::size_t>(n) * n * n * n, false);
  for (const auto& e : elems_) member_[code(e, n_)] = true;
}

bool Subgroup::contains(const ModMatrix& m) const { return member_[code(m, n_)]; }

bool Subgroup::contains_minus_identity() const { return contains(reduce(-1, 0, 0, -1, n_)); }

Subgroup Subgroup::with_minus_identity() const {
  std::set<std::size_t> seen;
  std::vector<ModMatrix> out;
  for (const auto& e : elems_) {
    for (const auto& x : {e, negated(e, n_)}) {
      if (seen.insert(code(x, n_)).second) out.push_back(x);
    }
  }
  return Subgroup(n_, std::move(out));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return n_ == other.n_ && std::all_of(elems_.begin(), elems_.end(), [&](const ModMatrix& m) { return other.contains(m); });
}

bool Subgroup::operator==(const Subgroup& o) const { return order() == o.order() && is_subset_of(o); }

std::shared_ptr<const Subgroup> image_of(const SubgroupSpec& spec, int n) {
  check_modulus(n);
  if (n % spec.level != 0) throw DomainError("level of " + spec.name + " does not divide the modulus");
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const Subgroup>> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(spec.name, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::vector<ModMatrix> elems;
  for (const auto& m : enumerate_group(n)) {
    if (spec.contains(m, n)) elems.push_back(m);
  }
  auto h = std::make_shared<const Subgroup>(n, std::move(elems));
  if (!h->contains(reduce(1, 0, 0, 1, n))) throw NotAGroup(spec.name + " does not contain the identity");
  for (const auto& x : h->elements()) {
    if (!h->contains(inverse(x, n))) throw NotAGroup(spec.name + " is not closed under inverses");
    for (const auto& y : h->elements()) {
      if (!h->contains(mul(x, y, n))) throw NotAGroup(spec.name + " is not closed under products");
    }
  }
  memo.emplace(key, h);
  return h;
}

namespace {

std::string quotient_shape(const Subgroup& inner, const Subgroup& outer) {
  int n = outer.modulus();
  // coset representatives and a coset id for each element of outer
  std::map<std::size_t, int> id;
  std::vector<ModMatrix> reps;
  for (const auto& g : outer.elements()) {
    if (id.count(code(g, n))) continue;
    int k = static_cast<int>(reps.size());
    reps.push_back(g);
    for (const auto& h : inner.elements()) id[code(mul(h, g, n), n)] = k;
  }
  int q = static_cast<int>(reps.size());
  if (q > 6) return "";
  auto prod = [&](int i, int j) { return id.at(code(mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)], n), n)); };
  int e = id.at(code(reduce(1, 0, 0, 1, n), n));
  bool abelian = true;
  std::vector<int> orders;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) abelian = abelian && prod(i, j) == prod(j, i);
    int o = 1;
    for (int x = i; x != e; x = prod(x, i)) ++o;
    orders.push_back(o);
  }
  int maxo = *std::max_element(orders.begin(), orders.end());
  switch (q) {
    case 1:
      return "trivial";
    case 2:
      return "C2";
    case 3:
      return "C3";
    case 4:
      return maxo == 4 ? "C4" : "C2xC2";
    case 5:
      return "C5";
    case 6:
      return abelian ? "C6" : "S3";
  }
  return "";
}

}  // namespace

SubgroupReport subgroup_report(const SubgroupSpec& inner, const SubgroupSpec& outer, int n) {
  auto h = image_of(inner, n);
  auto g = image_of(outer, n);
  if (!h->is_subset_of(*g)) throw NotContained(inner.name + " is not contained in " + outer.name);
  SubgroupReport r;
  r.index = g->order() / h->order();
  r.normal = true;
  for (const auto& x : g->elements()) {
    ModMatrix xi = inverse(x, n);
    for (const auto& y : h->elements()) {
      if (!h->contains(mul(mul(x, y, n), xi, n))) {
        r.normal = false;
        break;
      }
    }
    if (!r.normal) break;
  }
  if (r.normal) r.quotient_shape = quotient_shape(*h, *g);
  return r;
}

GenusData genus_data(const SubgroupSpec& spec, int n) {
  Subgroup h = image_of(spec, n)->with_minus_identity();
  auto all = enumerate_group(n);
  std::map<std::size_t, int> coset;
  std::vector<ModMatrix> reps;
  for (const auto& g : all) {
    if (coset.count(code(g, n))) continue;
    int k = static_cast<int>(reps.size());
    reps.push_back(g);
    for (const auto& x : h.elements()) coset[code(mul(x, g, n), n)] = k;
  }
  int mu = static_cast<int>(reps.size());
  auto action = [&](const ModMatrix& m) {
    std::vector<int> p(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) p[i] = coset.at(code(mul(reps[i], m, n), n));
    return p;
  };
  ModMatrix S = reduce(0, -1, 1, 0, n), T = reduce(1, 1, 0, 1, n);
  auto sS = action(S), sST = action(mul(S, T, n)), sT = action(T);
  GenusData g;
  g.mu = mu;
  for (int i = 0; i < mu; ++i) {
    g.eps2 += sS[static_cast<std::size_t>(i)] == i;
    g.eps3 += sST[static_cast<std::size_t>(i)] == i;
  }
  std::vector<bool> seen(reps.size(), false);
  for (int i = 0; i < mu; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++g.cusps;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sT[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
  }
  // 12 (g - 1) = mu - 3 eps2 - 4 eps3 - 6 cusps
  int twelve = mu - 3 * g.eps2 - 4 * g.eps3 - 6 * g.cusps;
  if (twelve % 12 != 0 || twelve / 12 + 1 < 0) throw DomainError("genus formula is not a non-negative integer for " + spec.name);
  g.genus = twelve / 12 + 1;
  return g;
}

nlohmann::json to_json(const GenusData& g) {
  return {{"mu", g.mu}, {"eps2", g.eps2}, {"eps3", g.eps3}, {"cusps", g.cusps}, {"genus", g.genus}};
}

nlohmann::json to_json(const SubgroupReport& r) {
  nlohmann::json j{{"index", r.index}, {"normal", r.normal}};
  j["quotient_shape"] = r.quotient_shape.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.quotient_shape);
  return j;
}

}  // namespace bianchi::congruence
