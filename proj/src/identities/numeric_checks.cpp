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

#include <array>
#include <cmath>
#include <numbers>

#include "bianchi/curve/weierstrass.hpp"
#include "bianchi/identities/identities.hpp"

namespace bianchi::identities {

namespace {

using theta::ThetaIndex;

// theta_k with k given as 2k.
Complex th(int twice, Complex z, Complex tau) { return theta::theta_k(ThetaIndex::from_twice(twice), z, tau); }

// Argument quadruples used by the four-variable identities.
enum Args { kWXYZ, kPrimed, kSumXYZ, kPairsA, kPairsB };

struct Product {
  int sign;
  std::array<int, 4> twice;  // 2k for each factor
  Args args;
};

struct FourTermIdentity {
  const char* name;
  std::vector<Product> lhs, rhs;
};

// Half-integer indices appear as 2k: 5 is k = 5/2, 3 is 3/2 and so on.
const std::vector<FourTermIdentity>& four_term_identities() {
  static const std::vector<FourTermIdentity> ids{
      {"jacobi-A4", {{1, {5, 5, 5, 5}, kWXYZ}, {-1, {0, 0, 0, 0}, kWXYZ}},
       {{1, {5, 5, 5, 5}, kPrimed}, {-1, {0, 0, 0, 0}, kPrimed}}},
      {"chain-eq2", {{-1, {3, 5, 5, 5}, kWXYZ}, {1, {8, 0, 0, 0}, kWXYZ}},
       {{1, {4, 4, 4, 4}, kPrimed}, {-1, {9, 9, 9, 9}, kPrimed}}},
      {"chain-eq3", {{1, {3, 3, 3, 3}, kWXYZ}, {-1, {8, 8, 8, 8}, kWXYZ}},
       {{1, {1, 5, 5, 5}, kPrimed}, {-1, {6, 0, 0, 0}, kPrimed}}},
      {"chain-eq4", {{-1, {1, 3, 3, 3}, kWXYZ}, {1, {6, 8, 8, 8}, kWXYZ}},
       {{1, {0, 4, 4, 4}, kPrimed}, {-1, {5, 9, 9, 9}, kPrimed}}},
      {"chain-eq5", {{1, {1, 1, 1, 1}, kWXYZ}, {-1, {6, 6, 6, 6}, kWXYZ}},
       {{1, {7, 5, 5, 5}, kPrimed}, {-1, {2, 0, 0, 0}, kPrimed}}},
      {"chain-eq6", {{-1, {9, 1, 1, 1}, kWXYZ}, {1, {4, 6, 6, 6}, kWXYZ}},
       {{1, {6, 4, 4, 4}, kPrimed}, {-1, {1, 9, 9, 9}, kPrimed}}},
      {"chain-eq7", {{-1, {7, 5, 5, 5}, kSumXYZ}, {-1, {2, 0, 0, 0}, kSumXYZ}},
       {{1, {6, 6, 6, 6}, kPairsA}, {-1, {1, 1, 1, 1}, kPairsA}}},
      {"chain-eq8", {{1, {1, 1, 1, 1}, kSumXYZ}, {1, {6, 6, 6, 6}, kSumXYZ}},
       {{1, {6, 6, 6, 6}, kPairsA}, {1, {1, 1, 1, 1}, kPairsA}}},
      {"chain-eq9", {{1, {1, 1, 1, 1}, kSumXYZ}, {-1, {6, 6, 6, 6}, kSumXYZ}},
       {{1, {7, 5, 5, 5}, kSumXYZ}, {-1, {2, 0, 0, 0}, kSumXYZ}}},
      {"chain-eq10", {{1, {6, 6, 6, 6}, kPairsB}},
       {{1, {6, 6, 6, 6}, kSumXYZ}, {-1, {2, 0, 0, 0}, kSumXYZ}}},
  };
  return ids;
}

double four_term_residual(const FourTermIdentity& id, Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau();
    Complex w = s.z(), x = s.z(), y = s.z(), z = s.z();
    Complex sum = x + y + z;
    std::array<std::array<Complex, 4>, 5> args{{
        {w, x, y, z},
        {(w + x + y + z) / 2.0, (w + x - y - z) / 2.0, (w - x + y - z) / 2.0, (w - x - y + z) / 2.0},
        {sum, x, y, z},
        {0.0, y + z, z + x, x + y},
        {0.0, x + y, y + z, z + x},
    }};
    std::vector<Complex> terms;
    auto eval = [&](const Product& p, int side) {
      Complex v = static_cast<double>(p.sign * side);
      for (int j = 0; j < 4; ++j) v *= th(p.twice[j], args[p.args][j], tau);
      terms.push_back(v);
    };
    for (const auto& p : id.lhs) eval(p, 1);
    for (const auto& p : id.rhs) eval(p, -1);
    worst = std::max(worst, theta::relative_residual(terms));
  }
  return worst;
}

// theta3(0)^2 theta_a(x+y) theta_b(x-y)
//   = theta_c(x) theta_d(x) theta_e(y)^2 - theta_f(x)^2 theta_g(y) theta_h(y)
struct AdditionFormula {
  int number;
  int a, b, c, d, e, f, g, h;
};

constexpr std::array<AdditionFormula, 25> kAddition{{
    {11, 3, 3, 1, 0, 0, 3, 2, 3}, {12, 1, 3, 0, 4, 4, 2, 1, 2}, {13, 4, 3, 4, 3, 3, 1, 0, 1},
    {14, 2, 3, 3, 2, 2, 0, 4, 0}, {15, 0, 3, 2, 1, 1, 4, 3, 4}, {16, 2, 2, 0, 4, 0, 2, 2, 3},
    {17, 0, 2, 4, 3, 4, 1, 1, 2}, {18, 3, 2, 3, 2, 3, 0, 0, 1}, {19, 1, 2, 2, 1, 2, 4, 4, 0},
    {20, 4, 2, 1, 0, 1, 3, 3, 4}, {21, 1, 1, 4, 3, 0, 1, 2, 3}, {22, 4, 1, 3, 2, 4, 0, 1, 2},
    {23, 2, 1, 2, 1, 3, 4, 0, 1}, {24, 0, 1, 1, 0, 2, 3, 4, 0}, {25, 3, 1, 0, 4, 1, 2, 3, 4},
    {26, 0, 0, 3, 2, 0, 0, 2, 3}, {27, 3, 0, 2, 1, 4, 4, 1, 2}, {28, 1, 0, 1, 0, 3, 3, 0, 1},
    {29, 4, 0, 0, 4, 2, 2, 4, 0}, {30, 2, 0, 4, 3, 1, 1, 3, 4}, {31, 4, 4, 2, 1, 0, 4, 2, 3},
    {32, 2, 4, 1, 0, 4, 3, 1, 2}, {33, 0, 4, 0, 4, 3, 2, 0, 1}, {34, 3, 4, 4, 3, 2, 1, 4, 0},
    {35, 1, 4, 3, 2, 1, 0, 3, 4},
}};

double addition_residual(const AdditionFormula& f, Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau(), x = s.z(), y = s.z();
    Complex t3 = theta::theta_k(3, 0.0, tau);
    auto X = theta::theta_vector(x, tau);
    auto Y = theta::theta_vector(y, tau);
    Complex lhs = t3 * t3 * theta::theta_k(f.a, x + y, tau) * theta::theta_k(f.b, x - y, tau);
    worst = std::max(worst, theta::relative_residual({lhs, -X[f.c] * X[f.d] * Y[f.e] * Y[f.e],
                                                      X[f.f] * X[f.f] * Y[f.g] * Y[f.h]}));
  }
  return worst;
}

// Both duplication families, coordinate by coordinate.
double duplication_residual(bool cubic, Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau(), z = s.z();
    curve::NumericPoint x{theta::theta_vector(z, tau)};
    auto twice = theta::theta_vector(2.0 * z, tau);
    Complex t3 = theta::theta_k(3, 0.0, tau), t1 = theta::theta_k(1, 0.0, tau);
    for (int k = 0; k < 5; ++k) {
      int m = 3 * k;
      Complex lhs, a, b;
      if (cubic) {
        // theta3(0)^3, which is -theta2(0)^3
        lhs = t3 * t3 * t3 * twice[static_cast<std::size_t>(k)];
        a = x[m + 2] * x[m + 1] * x[m + 1] * x[m + 1];
        b = x[m - 1] * x[m - 1] * x[m - 1] * x[m - 2];
      } else {
        lhs = t3 * t3 * t1 * twice[static_cast<std::size_t>(k)];
        a = x[m] * x[m + 1] * x[m + 2] * x[m + 2];
        b = x[m] * x[m - 1] * x[m - 2] * x[m - 2];
      }
      worst = std::max(worst, theta::relative_residual({lhs, -a, b}));
    }
  }
  return worst;
}

double rel_diff(Complex a, Complex b) {
  double m = std::max(std::abs(a), std::abs(b));
  return m == 0 ? 0.0 : std::abs(a - b) / m;
}

// Six quasi-periodicity rules and the parity rule, over all ten indices.
double transforms_residual(Sampler& s, const VerifyConfig& cfg) {
  using std::exp;
  const double pi = std::numbers::pi;
  const Complex I(0, 1);
  const Complex zeta = std::polar(1.0, 2 * pi / 5);
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau(), z = s.z();
    for (int tk = 0; tk < 10; ++tk) {
      double k = tk / 2.0;
      double sgn = (tk + 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^(2k+1)
      Complex t = th(tk, z, tau);
      worst = std::max(worst, rel_diff(th(tk, z + 1.0, tau), sgn * t));
      worst = std::max(worst, rel_diff(th(tk, z + tau, tau), -exp(-5.0 * pi * I * tau - 10.0 * pi * I * z) * t));
      worst = std::max(worst, rel_diff(th(tk, z + 0.2, tau), -std::pow(zeta, -k) * t));
      worst = std::max(worst, rel_diff(th(tk, z + tau / 10.0, tau),
                                       -I * exp(-pi * I * tau / 20.0 - pi * I * z) * th(tk - 1, z, tau)));
      worst = std::max(worst, rel_diff(th(tk, z + tau / 5.0, tau),
                                       -exp(-pi * I * tau / 5.0 - 2.0 * pi * I * z) * th(tk - 2, z, tau)));
      worst = std::max(worst, rel_diff(th(tk, z + 2.0 * tau / 5.0, tau),
                                       exp(-4.0 * pi * I * tau / 5.0 - 4.0 * pi * I * z) * th(tk - 4, z, tau)));
      worst = std::max(worst, rel_diff(th(tk, -z, tau), sgn * th(-tk, z, tau)));
    }
  }
  return worst;
}

double nullwerte_residual(Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    auto v = theta::theta_vector(0.0, s.tau());
    double scale = 0;
    for (auto c : v) scale = std::max(scale, std::abs(c));
    worst = std::max(worst, std::abs(v[0]) / scale);
    worst = std::max(worst, theta::relative_residual({v[3], v[2]}));
    worst = std::max(worst, theta::relative_residual({v[4], v[1]}));
  }
  return worst;
}

double quadrics_residual(Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau();
    curve::NumericPoint p{theta::theta_vector(s.z(), tau)};
    worst = std::max(worst, curve::quadric_residual_rel(p, theta::phi_numeric(tau)));
  }
  return worst;
}

// The coordinate addition map against theta vectors of the sum, and A1
// against A2 where both are usable.
double addition_map_residual(Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau(), x = s.z(), y = s.z();
    curve::NumericPoint p{theta::theta_vector(x, tau)}, q{theta::theta_vector(y, tau)};
    curve::NumericPoint r{theta::theta_vector(x + y, tau)};
    worst = std::max(worst, curve::projective_distance(curve::add(p, q), r));
    worst = std::max(worst, curve::projective_distance(curve::add_a1(p, q), curve::add_a2(p, q)));
  }
  return worst;
}

double five_torsion_residual(Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex phi = theta::phi_numeric(s.tau());
    auto o = curve::neutral(phi);
    for (const auto& p : curve::five_torsion_points(phi)) {
      worst = std::max(worst, curve::quadric_residual_rel(p, phi));
      auto acc = p;
      for (int k = 0; k < 4; ++k) acc = curve::add(acc, p);
      worst = std::max(worst, curve::projective_distance(acc, o));
    }
  }
  return worst;
}

double weierstrass_residual(Sampler& s, const VerifyConfig& cfg) {
  double worst = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    Complex tau = s.tau();
    Complex phi = theta::phi_numeric(tau);
    Complex A = curve::weierstrass_a()(phi), B = curve::weierstrass_b()(phi);
    curve::NumericPoint p{theta::theta_vector(s.z(), tau)};
    auto w = curve::weierstrass_map(p, phi);
    worst = std::max(worst, rel_diff(w.Ya, w.Yb));
    worst = std::max(worst, theta::relative_residual({w.Ya * w.Ya, -w.X * w.X * w.X, -A * w.X, -B}));
    for (const auto& t : curve::two_torsion_points(phi)) {
      auto wt = curve::weierstrass_map(t, phi);
      double sx = std::abs(wt.X);
      worst = std::max(worst, std::abs(wt.Ya) / std::max(1.0, sx * std::sqrt(sx)));
      worst = std::max(worst, std::abs(wt.Yb) / std::max(1.0, sx * std::sqrt(sx)));
      worst = std::max(worst, theta::relative_residual({wt.X * wt.X * wt.X, A * wt.X, B}));
    }
  }
  return worst;
}

IdentityCheck numeric(std::string name, std::string summary, std::function<double(Sampler&, const VerifyConfig&)> f) {
  IdentityCheck c;
  c.name = std::move(name);
  c.kind = CheckKind::Numeric;
  c.summary = std::move(summary);
  c.numeric_residual = std::move(f);
  return c;
}

}  // namespace

void add_numeric_checks(std::vector<IdentityCheck>& out) {
  for (const auto& id : four_term_identities()) {
    std::string name = id.name;
    std::string summary = name == "jacobi-A4" ? "Jacobi quartic theta relation under the half-sum substitution"
                                              : "four-variable theta relation obtained by a quarter-period shift";
    out.push_back(numeric(name, summary, [&id](Sampler& s, const VerifyConfig& cfg) {
      return four_term_residual(id, s, cfg);
    }));
  }
  for (const auto& f : kAddition) {
    out.push_back(numeric("addition-eq" + std::to_string(f.number), "theta addition formula for theta_a(x+y) theta_b(x-y)",
                          [&f](Sampler& s, const VerifyConfig& cfg) { return addition_residual(f, s, cfg); }));
  }
  out.push_back(numeric("duplication-cubic", "theta3(0)^3 theta_k(2z) as a difference of quartic monomials",
                        [](Sampler& s, const VerifyConfig& cfg) { return duplication_residual(true, s, cfg); }));
  out.push_back(numeric("duplication-mixed", "theta3(0)^2 theta1(0) theta_k(2z) as a difference of quartic monomials",
                        [](Sampler& s, const VerifyConfig& cfg) { return duplication_residual(false, s, cfg); }));
  out.push_back(numeric("theta-transforms", "quasi-periodicity in z and the parity rule", transforms_residual));
  out.push_back(numeric("theta-nullwerte", "theta_0(0) = 0, theta_3(0) = -theta_2(0), theta_4(0) = -theta_1(0)",
                        nullwerte_residual));
  out.push_back(numeric("bianchi-quadrics-theta", "theta vectors satisfy the five quadrics", quadrics_residual));
  out.push_back(numeric("addition-map-A1A2", "coordinate addition map agrees with addition on the torus",
                        addition_map_residual));
  out.push_back(numeric("five-torsion", "25 points in the coordinate hyperplanes lie on the curve and have order 5",
                        five_torsion_residual));
  out.push_back(numeric("weierstrass-map", "birational map to Y^2 = X^3 + A X + B", weierstrass_residual));
}

}  // namespace bianchi::identities
