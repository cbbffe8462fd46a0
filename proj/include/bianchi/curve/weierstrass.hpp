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

#ifndef BIANCHI_CURVE_WEIERSTRASS_HPP
#define BIANCHI_CURVE_WEIERSTRASS_HPP

#include "bianchi/curve/curve.hpp"
#include "bianchi/exact/qpoly.hpp"

namespace bianchi::curve {

using exact::QPoly;

// phi^20 - 228 phi^15 + 494 phi^10 + 228 phi^5 + 1
const QPoly& p20();
// phi^30 + 522 phi^25 - 10005 phi^20 - 10005 phi^10 - 522 phi^5 + 1
const QPoly& p30();
// A = -P20/48, B = P30/864 in Y^2 = X^3 + A X + B.
const QPoly& weierstrass_a();
const QPoly& weierstrass_b();

// (P20^3 - P30^2) / 1728.
QPoly weierstrass_discriminant(const QPoly& a20, const QPoly& b30);

// phi^5 (phi^10 - 11 phi^5 + 1)^5, the closed form as usually quoted.
QPoly discriminant_closed_form_quoted();
// phi^5 (1 - 11 phi^5 - phi^10)^5, the closed form that actually holds.
QPoly discriminant_closed_form();

// Exact comparison of (P20^3 - P30^2)/1728 with the quoted closed form.
// false: the quoted form has the wrong sign on phi^10 + 1.
bool discriminant_check();
// Same comparison for caller-supplied P20, P30 and right-hand side.
bool discriminant_check(const QPoly& a20, const QPoly& b30, const QPoly& rhs);

// Discriminant of xi^3 - xi^2 + phi^5 xi + phi^5 from the generic cubic
// formula 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2.
QPoly kk_cubic_discriminant();
// 4 phi^5 (1 - 11 phi^5 - phi^10)
QPoly kk_discriminant_closed_form();
// -4 phi^5 (phi^2+phi-1)(phi^4-3phi^3+4phi^2-2phi+1)(phi^4+2phi^3+4phi^2+3phi+1)
QPoly kk_discriminant_factored();

// Image of a curve point on Y^2 = X^3 + A X + B. Y is given twice, once
// from x2 - x3 and once from x1 - x4.
template <class T>
struct WeierstrassImage {
  T X;
  T Ya;
  T Yb;
};

// Coefficient polynomials of the map; `quoted` selects the commonly quoted
// variant, which has three wrong coefficients.
struct WeierstrassCoefficients {
  QPoly x_const, x_14, x_23, x_2, x_quad, x_24;
  QPoly ya_scale, ya_0, ya_14, ya_23;
  QPoly yb_scale, yb_0, yb_14, yb_23;
};
const WeierstrassCoefficients& weierstrass_coefficients(bool quoted = false);

// Throws DenominatorVanishes when x0 or a Y denominator vanishes under the
// domain's zero test (the exceptional locus of the map).
template <class T>
WeierstrassImage<T> weierstrass_map(const P4Point<T>& p, const T& phi, bool quoted = false) {
  const auto& c = weierstrass_coefficients(quoted);
  double scale = max_magnitude(p);
  if (Domain<T>::is_zero(p[0], scale)) throw DenominatorVanishes("weierstrass_map: x0 vanishes");
  T s14 = p[1] + p[4], s23 = p[2] + p[3];
  T quad = c.x_quad(phi) * p[1] * (p[1] - phi * p[2] + phi * p[3] - p[4]) + c.x_24(phi) * p[2] * p[4];
  T X = c.x_const(phi) + (c.x_14(phi) * s14 + c.x_23(phi) * s23 + c.x_2(phi) * p[2]) / p[0] + quad / (p[0] * p[0]);

  auto denom = [&](const QPoly& a0, const QPoly& a14, const QPoly& a23) {
    T t0 = a0(phi) * p[0], t14 = a14(phi) * s14, t23 = a23(phi) * s23;
    T d = t0 + t14 + t23;
    double sc = std::max({Domain<T>::magnitude(t0), Domain<T>::magnitude(t14), Domain<T>::magnitude(t23)});
    if (Domain<T>::is_zero(d, sc)) throw DenominatorVanishes("weierstrass_map: Y denominator vanishes");
    return d;
  };
  T da = denom(c.ya_0, c.ya_14, c.ya_23);
  T db = denom(c.yb_0, c.yb_14, c.yb_23);
  T Ya = c.ya_scale(phi) * (p[2] - p[3]) / da;
  T Yb = c.yb_scale(phi) * (p[1] - p[4]) / db;
  return {std::move(X), std::move(Ya), std::move(Yb)};
}

}  // namespace bianchi::curve

#endif  // BIANCHI_CURVE_WEIERSTRASS_HPP
