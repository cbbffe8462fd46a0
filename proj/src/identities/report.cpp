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

#include <cstdio>
#include <cstdlib>

#include "bianchi/identities/identities.hpp"

namespace bianchi::identities {

namespace {

// 15 significant digits.
double rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

nlohmann::json to_json(const VerifyConfig& cfg) {
  return {{"series_order", exact::to_string(cfg.series_order)},
          {"tol", cfg.tol},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"tau_region", {{"re", {cfg.re_min, cfg.re_max}}, {"im", {cfg.im_min, cfg.im_max}}}}};
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"kind", to_string(c.kind)}, {"status", to_string(c.status)}};
    switch (c.kind) {
      case CheckKind::Numeric:
        j["worst_residual"] = c.worst_residual ? nlohmann::json(rounded(*c.worst_residual)) : nlohmann::json(nullptr);
        j["samples"] = c.samples.value_or(0);
        break;
      case CheckKind::ExactSeries:
        j["first_failing_exponent"] =
            c.first_failing_exponent ? nlohmann::json(exact::to_string(*c.first_failing_exponent)) : nlohmann::json(nullptr);
        j["order"] = c.order ? exact::to_string(*c.order) : "";
        break;
      case CheckKind::ExactPoly:
        break;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  nlohmann::json out{{"config", to_json(r.config)}, {"checks", std::move(checks)}, {"passed", r.passed}, {"failed", r.failed}};
  if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace bianchi::identities
