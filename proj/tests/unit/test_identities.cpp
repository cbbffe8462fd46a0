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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bianchi/errors.hpp"
#include "bianchi/identities/identities.hpp"

namespace bianchi::identities {
namespace {

using exact::make_rational;

std::vector<std::string> names_of(CheckKind kind) {
  std::vector<std::string> out;
  for (const auto& c : registry())
    if (c.kind == kind) out.push_back(c.name);
  return out;
}

TEST(Identities, CatalogShape) {
  const auto& reg = registry();
  EXPECT_EQ(reg.size(), 69u);
  std::set<std::string> names;
  for (const auto& c : reg) names.insert(c.name);
  EXPECT_EQ(names.size(), reg.size());
  EXPECT_TRUE(std::is_sorted(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  int additions = 0, chain = 0;
  for (const auto& n : names) {
    additions += n.rfind("addition-eq", 0) == 0;
    chain += n.rfind("chain-eq", 0) == 0;
  }
  EXPECT_EQ(additions, 25);
  EXPECT_EQ(chain, 9);
  EXPECT_EQ(names_of(CheckKind::Numeric).size(), 43u);
  EXPECT_EQ(names_of(CheckKind::ExactSeries).size(), 24u);
  EXPECT_EQ(names_of(CheckKind::ExactPoly).size(), 2u);
  EXPECT_EQ(find_check("delta-squared").kind, CheckKind::ExactSeries);
  EXPECT_THROW(find_check("no-such-identity"), UnknownName);
}

TEST(Identities, ConfigValidation) {
  VerifyConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.series_order = 9;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
  cfg = VerifyConfig{};
  cfg.tol = 1e-4;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
  cfg = VerifyConfig{};
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
  cfg = VerifyConfig{};
  cfg.im_min = 0;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
}

TEST(Identities, SamplerIsSeededPerName) {
  VerifyConfig cfg;
  Sampler a(cfg, "jacobi-A4"), b(cfg, "jacobi-A4"), c(cfg, "chain-eq2");
  Complex ta = a.tau(), tb = b.tau(), tc = c.tau();
  EXPECT_EQ(ta, tb);
  EXPECT_NE(ta, tc);
  EXPECT_GE(ta.imag(), cfg.im_min);
  EXPECT_LE(ta.imag(), cfg.im_max);
  for (int i = 0; i < 100; ++i) {
    Complex z = a.z();
    EXPECT_LE(std::abs(z.real()), 0.5);
    EXPECT_LE(std::abs(z.imag()), 0.5);
  }
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Identities, DeltaSquaredPasses) {
  auto r = run_identity("delta-squared", VerifyConfig{});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_FALSE(r.first_failing_exponent.has_value());
  ASSERT_TRUE(r.order.has_value());
  EXPECT_GE(*r.order, make_rational(30));
  EXPECT_THROW(run_identity("nope", VerifyConfig{}), UnknownName);
}

TEST(Identities, DefeqAtOrder40) {
  VerifyConfig cfg;
  cfg.series_order = 40;
  EXPECT_EQ(run_identity("defeq-gamma10", cfg).status, Status::Pass);
  auto m = run_identity_mutated("defeq-gamma10", cfg);
  EXPECT_EQ(m.status, Status::Fail);
  EXPECT_TRUE(m.first_failing_exponent.has_value());
}

TEST(Identities, EveryExactMutationFlips) {
  VerifyConfig cfg;
  for (auto kind : {CheckKind::ExactSeries, CheckKind::ExactPoly}) {
    for (const auto& n : names_of(kind)) {
      EXPECT_EQ(run_identity(n, cfg).status, Status::Pass) << n;
      auto m = run_identity_mutated(n, cfg);
      EXPECT_EQ(m.status, Status::Fail) << n;
      if (kind == CheckKind::ExactSeries) EXPECT_TRUE(m.first_failing_exponent.has_value()) << n;
    }
  }
}

TEST(Identities, AdditionFormulasPass) {
  VerifyConfig cfg;
  std::vector<std::string> names;
  for (int k = 11; k <= 35; ++k) names.push_back("addition-eq" + std::to_string(k));
  auto rep = run_checks(names, cfg);
  ASSERT_EQ(rep.checks.size(), 25u);
  for (const auto& c : rep.checks) {
    EXPECT_EQ(c.status, Status::Pass) << c.name;
    ASSERT_TRUE(c.worst_residual.has_value());
    EXPECT_LT(*c.worst_residual, 1e-9) << c.name;
    EXPECT_EQ(c.samples, 20);
  }
}

TEST(Identities, RunAllDefaults) {
  VerifyConfig cfg;
  auto rep = run_all(cfg);
  EXPECT_EQ(rep.checks.size(), 69u);
  EXPECT_EQ(rep.failed, 0);
  EXPECT_EQ(rep.passed, 69);
  EXPECT_TRUE(rep.all_passed());
  for (const auto& c : rep.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << ": " << c.detail;
}

TEST(Identities, DeterministicAcrossThreadCounts) {
  VerifyConfig one;
  one.threads = 1;
  VerifyConfig many;
  many.threads = 4;
  auto a = to_json(run_all(one)).dump();
  auto b = to_json(run_all(many)).dump();
  auto c = to_json(run_all(many)).dump();
  EXPECT_EQ(a.substr(a.find("\"checks\"")), b.substr(b.find("\"checks\"")));
  EXPECT_EQ(b, c);
}

TEST(Identities, TinyToleranceFailsNumericOnly) {
  VerifyConfig cfg;
  cfg.tol = 1e-30;
  auto rep = run_all(cfg);
  for (const auto& c : rep.checks) {
    if (c.kind == CheckKind::Numeric) {
      EXPECT_EQ(c.status, Status::Fail) << c.name;
    } else {
      EXPECT_EQ(c.status, Status::Pass) << c.name;
    }
  }
  EXPECT_EQ(rep.failed, 43);
}

TEST(Identities, ReportJson) {
  VerifyConfig cfg;
  auto rep = run_checks({"delta-squared", "jacobi-A4", "weierstrass-discriminant"}, cfg);
  auto j = to_json(rep);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_TRUE(to_json(rep, true).contains("elapsed_ms"));
  EXPECT_EQ(j["passed"], 3);
  EXPECT_EQ(j["failed"], 0);
  ASSERT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["name"], "delta-squared");
  EXPECT_EQ(j["checks"][0]["kind"], "exact_series");
  EXPECT_TRUE(j["checks"][0]["first_failing_exponent"].is_null());
  EXPECT_EQ(j["checks"][1]["kind"], "numeric");
  EXPECT_TRUE(j["checks"][1]["worst_residual"].is_number());
  EXPECT_EQ(j["checks"][2]["kind"], "exact_poly");
  EXPECT_EQ(j["config"]["seed"], 7);
  EXPECT_THROW(run_checks({"delta-squared", "bogus"}, cfg), UnknownName);
}

}  // namespace
}  // namespace bianchi::identities
