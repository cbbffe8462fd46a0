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

#include "bianchi/curve/curve.hpp"
#include "bianchi/curve/weierstrass.hpp"
#include "bianchi/identities/identities.hpp"

namespace bianchi::identities {

namespace {

using PS = PuiseuxSeries;
using Residuals = std::vector<PS>;

BigRational q(long v) { return exact::make_rational(v); }

// 1 - 11 phi^5 - phi^10 from phi^5.
PS d_of(const PS& p5) { return 1 - 11 * p5 - p5 * p5; }

IdentityCheck exact_series(std::string name, std::string summary,
                           std::function<Residuals(SeriesSource&, const BigRational&)> f) {
  IdentityCheck c;
  c.name = std::move(name);
  c.kind = CheckKind::ExactSeries;
  c.summary = std::move(summary);
  c.series_residuals = std::move(f);
  return c;
}

IdentityCheck exact_poly(std::string name, std::string summary, std::function<bool(bool)> f) {
  IdentityCheck c;
  c.name = std::move(name);
  c.kind = CheckKind::ExactPoly;
  c.summary = std::move(summary);
  c.poly_holds = std::move(f);
  return c;
}

// The three 2-torsion points with coordinates drawn from `src`.
std::array<curve::SeriesPoint, 3> two_torsion(SeriesSource& src, const BigRational& n, const PS& phi) {
  std::array<curve::SeriesPoint, 3> pts;
  for (int i = 0; i < 3; ++i) {
    pts[static_cast<std::size_t>(i)] = curve::two_torsion_point(phi, src.get("g" + std::to_string(i + 1), n));
  }
  return pts;
}

}  // namespace

void add_exact_checks(std::vector<IdentityCheck>& out) {
  out.push_back(exact_series("sym-e1", "g1 + g2 + g3 = 1", [](SeriesSource& s, const BigRational& n) {
    return Residuals{s.get("g1", n) + s.get("g2", n) + s.get("g3", n) - 1};
  }));
  out.push_back(exact_series("sym-e2", "g1 g2 + g2 g3 + g3 g1 = phi^5", [](SeriesSource& s, const BigRational& n) {
    PS g1 = s.get("g1", n), g2 = s.get("g2", n), g3 = s.get("g3", n);
    return Residuals{g1 * g2 + g2 * g3 + g3 * g1 - s.get("phi5", n)};
  }));
  out.push_back(exact_series("sym-e3", "g1 g2 g3 = -phi^5", [](SeriesSource& s, const BigRational& n) {
    return Residuals{s.get("g1", n) * s.get("g2", n) * s.get("g3", n) + s.get("phi5", n)};
  }));
  for (int i = 1; i <= 3; ++i) {
    std::string g = "g" + std::to_string(i);
    out.push_back(exact_series("cubic-root-" + g, g + " is a root of xi^3 - xi^2 + phi^5 xi + phi^5",
                               [g](SeriesSource& s, const BigRational& n) {
                                 PS x = s.get(g, n), p5 = s.get("phi5", n);
                                 return Residuals{x * x * x - x * x + p5 * x + p5};
                               }));
  }
  out.push_back(exact_series("delta-squared", "delta^2 = 4 phi^5 (1 - 11 phi^5 - phi^10)",
                             [](SeriesSource& s, const BigRational& n) {
                               PS d = s.get("delta", n), p5 = s.get("phi5", n);
                               return Residuals{d * d - 4 * p5 * d_of(p5)};
                             }));
  // With X = phi, Y = delta/(2 g1) and D = 1 - 11 X^5 - X^10, multiplied
  // through by powers of 4 g1^2.
  out.push_back(exact_series("g1-from-XY", "g1 = (D - Y^2)/(D + Y^2), D = 1 - 11 X^5 - X^10",
                             [](SeriesSource& s, const BigRational& n) {
                               PS g1 = s.get("g1", n), d = s.get("delta", n), p5 = s.get("phi5", n);
                               PS a = 4 * g1 * g1 * d_of(p5), d2 = d * d;
                               return Residuals{g1 * (a + d2) - (a - d2)};
                             }));
  out.push_back(exact_series("defeq-gamma10", "Y^2 (D - Y^2)^2 - X^5 D (D + Y^2)^2 = 0",
                             [](SeriesSource& s, const BigRational& n) {
                               PS g1 = s.get("g1", n), d = s.get("delta", n), p5 = s.get("phi5", n);
                               PS D = d_of(p5);
                               PS g12 = g1 * g1, a = 4 * g12 * D, d2 = d * d;
                               PS m = a - d2, p = a + d2;
                               return Residuals{d2 * m * m - 4 * g12 * p5 * D * p * p};
                             }));
  out.push_back(exact_series("ramanujan-relation", "-g2(2 tau) (1 + g1) = 1 - g1",
                             [](SeriesSource& s, const BigRational& n) {
                               PS r = s.get("neg_g2_2tau", n), g1 = s.get("g1", n);
                               return Residuals{r * (1 + g1) - (1 - g1)};
                             }));
  out.push_back(exact_series("g1g2-relation", "X^2 Y + X Y^2 + X^2 + Y^2 - X - Y = 0 at (g1, g2)",
                             [](SeriesSource& s, const BigRational& n) {
                               PS x = s.get("g1", n), y = s.get("g2", n);
                               return Residuals{x * x * y + x * y * y + x * x + y * y - x - y};
                             }));
  // X = (2-s)/s, Y = (g1-g2)(2-s)/s^2 with s = g1 + g2, times s^6.
  out.push_back(exact_series("g1g2-weierstrass", "Y^2 = X^3 + X^2 - X under the substitution from (g1, g2)",
                             [](SeriesSource& s, const BigRational& n) {
                               PS g1 = s.get("g1", n), g2 = s.get("g2", n);
                               PS sum = g1 + g2, t = 2 - sum, dif = g1 - g2;
                               PS s2 = sum * sum, t2 = t * t;
                               PS lhs = dif * dif * t2 * s2;
                               PS rhs = t2 * t * s2 * sum + t2 * s2 * s2 - t * s2 * s2 * sum;
                               return Residuals{lhs - rhs};
                             }));
  out.push_back(exact_series("G2-defeq", "Y^2 = X^3 - 11 X^2 - X at X = -phi^5, Y = delta/2",
                             [](SeriesSource& s, const BigRational& n) {
                               PS d = s.get("delta", n), x = -s.get("phi5", n);
                               return Residuals{d * d / q(4) - (x * x * x - 11 * x * x - x)};
                             }));
  out.push_back(exact_series("bring-kk", "Y^3 - Y^2 + X^5 Y + X^5 = 0 at X = phi, Y = g1",
                             [](SeriesSource& s, const BigRational& n) {
                               PS x = s.get("phi", n), y = s.get("g1", n);
                               PS x5 = pow(x, 5);
                               return Residuals{y * y * y - y * y + x5 * y + x5};
                             }));
  out.push_back(exact_series("genus5-defeq", "Y^2 = X^5 (1 - 11 X^5 - X^10) at X = phi, Y = delta/2",
                             [](SeriesSource& s, const BigRational& n) {
                               PS x = s.get("phi", n), y = s.get("delta", n) / q(2);
                               PS x5 = pow(x, 5);
                               return Residuals{y * y - x5 * d_of(x5)};
                             }));
  out.push_back(exact_series("phi5-from-g1", "phi^5 (1 + g1) = g1^2 - g1^3", [](SeriesSource& s, const BigRational& n) {
    PS g1 = s.get("g1", n), p5 = s.get("phi5", n);
    return Residuals{p5 * (1 + g1) - (g1 * g1 - g1 * g1 * g1)};
  }));
  out.push_back(exact_series("j5-phi", "j5 phi^5 = 1 - 11 phi^5 - phi^10", [](SeriesSource& s, const BigRational& n) {
    PS j5 = s.get("j5", n), p5 = s.get("phi5", n);
    return Residuals{j5 * p5 - d_of(p5)};
  }));
  out.push_back(exact_series("j5-j10", "j5 j10^2 = (j10 + 1)(j10 - 4)^2", [](SeriesSource& s, const BigRational& n) {
    PS j5 = s.get("j5", n), j10 = s.get("j10", n);
    PS m = j10 - 4;
    return Residuals{j5 * j10 * j10 - (j10 + 1) * m * m};
  }));
  out.push_back(exact_series("j10-g2", "j10 g2(2 tau) = g2(2 tau)^2 - 1", [](SeriesSource& s, const BigRational& n) {
    PS j10 = s.get("j10", n), g = -s.get("neg_g2_2tau", n);
    return Residuals{j10 * g - (g * g - 1)};
  }));
  out.push_back(exact_series("j10-g1", "j10 (1 - g1^2) = 4 g1", [](SeriesSource& s, const BigRational& n) {
    PS j10 = s.get("j10", n), g1 = s.get("g1", n);
    return Residuals{j10 * (1 - g1 * g1) - 4 * g1};
  }));
  out.push_back(exact_series("hulek-craig-2tors", "(x0 : x1 : x2) of each 2-torsion point lies on the Hulek-Craig quintic",
                             [](SeriesSource& s, const BigRational& n) {
                               PS phi = s.get("phi", n);
                               Residuals r;
                               for (const auto& p : two_torsion(s, n, phi)) r.push_back(curve::hulek_craig_model(p[0], p[1], p[2]));
                               return r;
                             }));
  // phi^2 bring2(x1, x2) = x1^3 kk(phi x2 / x1), and both vanish.
  out.push_back(exact_series("bring2-subst", "xi = phi x2/x1 carries the bring2 model to the cubic",
                             [](SeriesSource& s, const BigRational& n) {
                               PS phi = s.get("phi", n);
                               Residuals r;
                               for (const auto& p : two_torsion(s, n, phi)) {
                                 PS b = curve::bring2_model(p[1], p[2], phi);
                                 PS xi = phi * p[2] / p[1];
                                 r.push_back(b);
                                 r.push_back(phi * phi * b - p[1] * p[1] * p[1] * curve::kk_model(xi, phi));
                               }
                               return r;
                             }));
  out.push_back(exact_series("weber-model", "y^5 (x - 1) = (x + 1) x^2 at x = -g_i, y = -phi",
                             [](SeriesSource& s, const BigRational& n) {
                               PS phi = s.get("phi", n);
                               Residuals r;
                               for (int i = 1; i <= 3; ++i) r.push_back(curve::weber_model(-s.get("g" + std::to_string(i), n), -phi));
                               return r;
                             }));
  out.push_back(exact_series("j-cross-check", "j phi^5 (1 - 11 phi^5 - phi^10)^5 = P20(phi)^3",
                             [](SeriesSource& s, const BigRational& n) {
                               PS j = s.get("j", n), phi = s.get("phi", n);
                               PS p5 = pow(phi, 5);
                               return Residuals{j * p5 * pow(d_of(p5), 5) - pow(curve::p20()(phi), 3)};
                             }));

  out.push_back(exact_poly("weierstrass-discriminant", "(P20^3 - P30^2)/1728 = phi^5 (1 - 11 phi^5 - phi^10)^5",
                           [](bool mutate) {
                             exact::QPoly a = curve::p20();
                             if (mutate) a = a + exact::QPoly::monomial(q(1), 15);
                             return curve::discriminant_check(a, curve::p30(), curve::discriminant_closed_form());
                           }));
  out.push_back(exact_poly("cubic-discriminant-factorization",
                           "discriminant of the cubic equals 4 phi^5 (1 - 11 phi^5 - phi^10) and its three-factor form",
                           [](bool mutate) {
                             exact::QPoly f = curve::kk_discriminant_factored();
                             if (mutate) f = f + exact::QPoly::monomial(q(1), 0);
                             exact::QPoly d = curve::kk_cubic_discriminant();
                             return d == curve::kk_discriminant_closed_form() && d == f;
                           }));
}

}  // namespace bianchi::identities
