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

#ifndef BIANCHI_IDENTITIES_IDENTITIES_HPP
#define BIANCHI_IDENTITIES_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bianchi/exact/puiseux.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::identities {

using exact::BigRational;
using exact::PuiseuxSeries;
using theta::Complex;

enum class CheckKind { ExactSeries, ExactPoly, Numeric };
enum class Status { Pass, Fail, Skipped };

std::string to_string(CheckKind k);
std::string to_string(Status s);

struct VerifyConfig {
  BigRational series_order = 30;
  double tol = 1e-9;
  int samples = 20;
  std::uint64_t seed = 7;
  // Sampling rectangle for tau.
  double re_min = -0.5, re_max = 0.5;
  double im_min = 0.8, im_max = 2.0;
  // Worker threads for run_all; 0 picks the hardware concurrency.
  unsigned threads = 0;

  // Throws InvalidConfig unless series_order >= 10, 0 < tol < 1e-4,
  // samples >= 1 and the rectangle lies in the upper half plane.
  void validate() const;
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Numeric;
  Status status = Status::Skipped;
  std::optional<double> worst_residual;                 // numeric
  std::optional<BigRational> first_failing_exponent;    // exact_series
  std::optional<BigRational> order;                     // exact_series
  std::optional<int> samples;                           // numeric
  std::string detail;
};

struct Report {
  VerifyConfig config;
  std::vector<CheckResult> checks;  // sorted by name
  int passed = 0;
  int failed = 0;
  double elapsed_ms = 0;

  bool all_passed() const { return failed == 0; }
};

// Seeded draws for numeric checks.
class Sampler {
 public:
  Sampler(const VerifyConfig& cfg, std::string_view check_name);

  double uniform(double lo, double hi);
  Complex tau();
  // |Re|, |Im| <= 0.5
  Complex z();

 private:
  const VerifyConfig& cfg_;
  std::mt19937_64 rng_;
};

std::uint64_t fnv1a64(std::string_view s);

// Hands exact checks their input series. With mutation on, the first
// named series requested gets 1 added to one coefficient (one step above
// its valuation), and keeps that perturbation on every later request.
class SeriesSource {
 public:
  explicit SeriesSource(bool mutate = false) : mutate_(mutate) {}
  PuiseuxSeries get(const std::string& name, const BigRational& order);

 private:
  bool mutate_;
  std::string target_;
};

struct IdentityCheck {
  std::string name;
  CheckKind kind;
  std::string summary;
  // Exact series: residuals that must vanish, built from inputs at the
  // given order. The runner raises the order until every residual is
  // known through cfg.series_order.
  std::function<std::vector<PuiseuxSeries>(SeriesSource&, const BigRational&)> series_residuals;
  // Exact polynomial: true iff the identity holds; the flag asks for the
  // one-coefficient mutation.
  std::function<bool(bool mutate)> poly_holds;
  // Numeric: worst relative residual over the sampled points.
  std::function<double(Sampler&, const VerifyConfig&)> numeric_residual;
};

// The fixed catalog, sorted by name.
const std::vector<IdentityCheck>& registry();
const IdentityCheck& find_check(std::string_view name);  // UnknownName

CheckResult run_identity(std::string_view name, const VerifyConfig& cfg);
// Exact checks only: runs with the documented mutation applied.
CheckResult run_identity_mutated(std::string_view name, const VerifyConfig& cfg);

// Runs the given checks (all when empty), possibly in parallel. Entries
// come back sorted by name.
Report run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg);
Report run_all(const VerifyConfig& cfg);

nlohmann::json to_json(const VerifyConfig& cfg);
// elapsed_ms is included only when with_timing is set, so equal configs
// give byte-identical output.
nlohmann::json to_json(const Report& r, bool with_timing = false);

// Registration hooks, one per check family.
void add_numeric_checks(std::vector<IdentityCheck>& out);
void add_exact_checks(std::vector<IdentityCheck>& out);

}  // namespace bianchi::identities

#endif  // BIANCHI_IDENTITIES_IDENTITIES_HPP
