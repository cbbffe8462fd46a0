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

#include "bianchi/curve/weierstrass.hpp"

namespace bianchi::curve {

namespace {

QPoly poly(std::initializer_list<std::pair<int, long>> terms) { return QPoly::from_terms(terms); }

QPoly scaled(const QPoly& p, long num, long den) { return p * exact::make_rational(num, den); }

}  // namespace

const QPoly& p20() {
  static const QPoly p = poly({{20, 1}, {15, -228}, {10, 494}, {5, 228}, {0, 1}});
  return p;
}

const QPoly& p30() {
  static const QPoly p = poly({{30, 1}, {25, 522}, {20, -10005}, {10, -10005}, {5, -522}, {0, 1}});
  return p;
}

const QPoly& weierstrass_a() {
  static const QPoly a = scaled(p20(), -1, 48);
  return a;
}

const QPoly& weierstrass_b() {
  static const QPoly b = scaled(p30(), 1, 864);
  return b;
}

QPoly weierstrass_discriminant(const QPoly& a20, const QPoly& b30) {
  return scaled(pow(a20, 3) - pow(b30, 2), 1, 1728);
}

QPoly discriminant_closed_form_quoted() {
  return QPoly::monomial(exact::make_rational(1), 5) * pow(poly({{10, 1}, {5, -11}, {0, 1}}), 5);
}

QPoly discriminant_closed_form() {
  return QPoly::monomial(exact::make_rational(1), 5) * pow(poly({{0, 1}, {5, -11}, {10, -1}}), 5);
}

bool discriminant_check() { return discriminant_check(p20(), p30(), discriminant_closed_form_quoted()); }

bool discriminant_check(const QPoly& a20, const QPoly& b30, const QPoly& rhs) {
  return weierstrass_discriminant(a20, b30) == rhs;
}

QPoly kk_cubic_discriminant() {
  QPoly b = QPoly::constant(exact::make_rational(-1));
  QPoly c = QPoly::monomial(exact::make_rational(1), 5);
  QPoly d = c;
  auto k = [](long v) { return exact::make_rational(v); };
  return k(18) * b * c * d - k(4) * pow(b, 3) * d + pow(b, 2) * pow(c, 2) - k(4) * pow(c, 3) - k(27) * pow(d, 2);
}

QPoly kk_discriminant_closed_form() { return poly({{5, 4}, {10, -44}, {15, -4}}); }

QPoly kk_discriminant_factored() {
  return poly({{5, -4}}) * poly({{2, 1}, {1, 1}, {0, -1}}) * poly({{4, 1}, {3, -3}, {2, 4}, {1, -2}, {0, 1}}) *
         poly({{4, 1}, {3, 2}, {2, 4}, {1, 3}, {0, 1}});
}

const WeierstrassCoefficients& weierstrass_coefficients(bool quoted) {
  static const WeierstrassCoefficients fixed = [] {
    WeierstrassCoefficients c;
    c.x_const = scaled(poly({{10, 1}, {5, 30}, {0, 1}}), 1, 12);
    c.x_14 = poly({{7, -2}, {2, -1}});
    c.x_23 = poly({{8, -1}, {3, 2}});
    c.x_2 = poly({{3, -5}});
    c.x_quad = poly({{4, 5}});
    c.x_24 = poly({{5, 5}});
    // (phi^11 + 11 phi^6 - phi)^2 / (2 phi)
    c.ya_scale = scaled(poly({{1, 1}}) * pow(poly({{10, 1}, {5, 11}, {0, -1}}), 2), 1, 2);
    c.ya_0 = poly({{3, 7}, {8, -1}});
    c.ya_14 = poly({{5, 7}, {0, 1}});
    c.ya_23 = poly({{1, 3}, {6, -4}});
    c.yb_scale = scaled(pow(poly({{11, 1}, {6, 11}, {1, -1}}), 2), 1, 2);
    c.yb_0 = poly({{5, 7}, {0, 1}});
    c.yb_14 = poly({{7, 3}, {2, 4}});
    c.yb_23 = poly({{8, -1}, {3, 7}});
    return c;
  }();
  static const WeierstrassCoefficients quoted_set = [] {
    WeierstrassCoefficients c = fixed;
    // (phi^11 + phi^6 - phi)^2 / phi
    c.ya_scale = poly({{1, 1}}) * pow(poly({{10, 1}, {5, 1}, {0, -1}}), 2);
    c.ya_0 = poly({{3, 7}, {8, -2}});
    c.yb_scale = scaled(pow(poly({{11, 1}, {6, 1}, {1, -1}}), 2), 1, 2);
    return c;
  }();
  return quoted ? quoted_set : fixed;
}

}  // namespace bianchi::curve
