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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "bianchi/errors.hpp"
#include "bianchi/identities/identities.hpp"
#include "bianchi/modular/modular.hpp"

namespace bianchi::identities {

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::ExactSeries:
      return "exact_series";
    case CheckKind::ExactPoly:
      return "exact_poly";
    case CheckKind::Numeric:
      return "numeric";
  }
  return "unknown";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

void VerifyConfig::validate() const {
  if (series_order < 10) throw InvalidConfig("series_order must be at least 10");
  if (!(tol > 0 && tol < 1e-4)) throw InvalidConfig("tol must lie in (0, 1e-4)");
  if (samples < 1) throw InvalidConfig("samples must be at least 1");
  if (!(im_min > 0 && im_min <= im_max && re_min <= re_max)) throw InvalidConfig("tau region must lie in Im > 0");
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Sampler::Sampler(const VerifyConfig& cfg, std::string_view check_name) : cfg_(cfg), rng_(cfg.seed ^ fnv1a64(check_name)) {}

double Sampler::uniform(double lo, double hi) {
  // top 53 bits, so the draw does not depend on the standard library
  double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Complex Sampler::tau() {
  double re = uniform(cfg_.re_min, cfg_.re_max);
  return {re, uniform(cfg_.im_min, cfg_.im_max)};
}

Complex Sampler::z() {
  double re = uniform(-0.5, 0.5);
  return {re, uniform(-0.5, 0.5)};
}

PuiseuxSeries SeriesSource::get(const std::string& name, const BigRational& order) {
  PuiseuxSeries s = modular::named_series(name, order);
  if (!mutate_) return s;
  if (target_.empty()) target_ = name;
  if (name != target_) return s;
  BigRational e = s.valuation().value_or(BigRational(0)) + 1;
  return s + PuiseuxSeries::monomial(BigRational(1), e, s.order());
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> v;
    add_numeric_checks(v);
    add_exact_checks(v);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return v;
  }();
  return checks;
}

const IdentityCheck& find_check(std::string_view name) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), name, [](const IdentityCheck& c, std::string_view n) { return c.name < n; });
  if (it == r.end() || it->name != name) throw UnknownName("unknown identity: " + std::string(name));
  return *it;
}

namespace {

CheckResult run_series(const IdentityCheck& c, const VerifyConfig& cfg, bool mutate) {
  CheckResult r;
  r.name = c.name;
  r.kind = c.kind;
  r.order = cfg.series_order;
  const BigRational& target = cfg.series_order;
  BigRational m = target;
  for (int attempt = 0; attempt < 8; ++attempt) {
    SeriesSource src(mutate);
    auto residuals = c.series_residuals(src, m);
    BigRational reached = target;
    for (const auto& s : residuals) reached = std::min(reached, s.order());
    if (reached < target) {
      m += (target - reached) + 1;
      continue;
    }
    std::optional<BigRational> first;
    for (const auto& s : residuals) {
      auto e = exact::first_nonzero_exponent(s.truncated(target));
      if (e && (!first || *e < *first)) first = e;
    }
    r.first_failing_exponent = first;
    r.status = first ? Status::Fail : Status::Pass;
    return r;
  }
  r.status = Status::Fail;
  r.detail = "residual precision stayed below the requested order";
  return r;
}

CheckResult run_one(const IdentityCheck& c, const VerifyConfig& cfg, bool mutate) {
  try {
    switch (c.kind) {
      case CheckKind::ExactSeries:
        return run_series(c, cfg, mutate);
      case CheckKind::ExactPoly: {
        CheckResult r;
        r.name = c.name;
        r.kind = c.kind;
        r.status = c.poly_holds(mutate) ? Status::Pass : Status::Fail;
        return r;
      }
      case CheckKind::Numeric: {
        CheckResult r;
        r.name = c.name;
        r.kind = c.kind;
        r.samples = cfg.samples;
        Sampler s(cfg, c.name);
        double worst = c.numeric_residual(s, cfg);
        r.worst_residual = worst;
        r.status = worst < cfg.tol ? Status::Pass : Status::Fail;
        return r;
      }
    }
  } catch (const Error& e) {
    CheckResult r;
    r.name = c.name;
    r.kind = c.kind;
    r.status = Status::Fail;
    r.detail = e.what();
    return r;
  }
  throw InvalidConfig("unreachable check kind");
}

}  // namespace

CheckResult run_identity(std::string_view name, const VerifyConfig& cfg) {
  cfg.validate();
  return run_one(find_check(name), cfg, false);
}

CheckResult run_identity_mutated(std::string_view name, const VerifyConfig& cfg) {
  cfg.validate();
  const auto& c = find_check(name);
  if (c.kind == CheckKind::Numeric) throw InvalidConfig("mutation applies to exact checks only");
  return run_one(c, cfg, true);
}

Report run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg) {
  cfg.validate();
  auto start = std::chrono::steady_clock::now();
  std::vector<const IdentityCheck*> todo;
  if (names.empty()) {
    for (const auto& c : registry()) todo.push_back(&c);
  } else {
    for (const auto& n : names) todo.push_back(&find_check(n));
  }
  std::vector<CheckResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) results[i] = run_one(*todo[i], cfg, false);
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, todo.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report rep;
  rep.config = cfg;
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  for (auto& r : results) {
    if (r.status == Status::Pass) ++rep.passed;
    if (r.status == Status::Fail) ++rep.failed;
  }
  rep.checks = std::move(results);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report run_all(const VerifyConfig& cfg) { return run_checks({}, cfg); }

}  // namespace bianchi::identities
