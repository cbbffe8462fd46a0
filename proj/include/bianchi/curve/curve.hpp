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

#ifndef BIANCHI_CURVE_CURVE_HPP
#define BIANCHI_CURVE_CURVE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "bianchi/errors.hpp"
#include "bianchi/exact/puiseux.hpp"
#include "bianchi/exact/qpoly.hpp"

namespace bianchi::curve {

using Complex = std::complex<double>;
using exact::PuiseuxSeries;

// Coefficient domains the curve code runs over. Each supplies constants,
// a scalar zero test and the degeneracy test for a computed point.
template <class T>
struct Domain;

template <>
struct Domain<Complex> {
  static Complex constant(long c, const Complex&) { return Complex(static_cast<double>(c), 0.0); }
  static bool is_zero(const Complex& x, double scale) { return std::abs(x) <= 1e-12 * scale; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <>
struct Domain<PuiseuxSeries> {
  // Constants known as far as `like` is.
  static PuiseuxSeries constant(long c, const PuiseuxSeries& like) {
    return PuiseuxSeries::constant(exact::make_rational(c), like.order());
  }
  static bool is_zero(const PuiseuxSeries& x, double) { return x.is_zero(); }
  static double magnitude(const PuiseuxSeries&) { return 1.0; }
};

template <class T>
struct P4Point {
  std::array<T, 5> x;

  const T& operator[](int k) const { return x[static_cast<std::size_t>(((k % 5) + 5) % 5)]; }
  T& operator[](int k) { return x[static_cast<std::size_t>(((k % 5) + 5) % 5)]; }
};

using NumericPoint = P4Point<Complex>;
using SeriesPoint = P4Point<PuiseuxSeries>;

template <class T>
double max_magnitude(const P4Point<T>& p) {
  double m = 0;
  for (const auto& c : p.x) m = std::max(m, Domain<T>::magnitude(c));
  return m;
}

// Every coordinate negligible against `scale`.
template <class T>
bool vanishes(const P4Point<T>& p, double scale) {
  return std::all_of(p.x.begin(), p.x.end(), [&](const T& c) { return Domain<T>::is_zero(c, scale); });
}

// x_k^2 + phi x_{k+2} x_{k-2} - phi^-1 x_{k+1} x_{k-1}, k = 0..4.
template <class T>
std::array<T, 5> quadric_residuals(const P4Point<T>& p, const T& phi) {
  if (Domain<T>::is_zero(phi, 1e-18)) throw DivisionByZero("quadric_residuals: phi vanishes");
  T inv = Domain<T>::constant(1, phi) / phi;
  std::array<T, 5> r;
  for (int k = 0; k < 5; ++k) r[k] = p[k] * p[k] + phi * p[k + 2] * p[k - 2] - inv * p[k + 1] * p[k - 1];
  return r;
}

// Worst relative residual of the five quadrics (numeric points).
double quadric_residual_rel(const NumericPoint& p, Complex phi);

// (0 : phi : -1 : 1 : -phi).
template <class T>
P4Point<T> neutral(const T& phi) {
  return {{Domain<T>::constant(0, phi), phi, Domain<T>::constant(-1, phi), Domain<T>::constant(1, phi), -phi}};
}

// (x0 : x4 : x3 : x2 : x1).
template <class T>
P4Point<T> negate(const P4Point<T>& p) {
  return {{p[0], p[4], p[3], p[2], p[1]}};
}

template <class T>
P4Point<T> add_a1(const P4Point<T>& x, const P4Point<T>& y) {
  return {{x[2] * x[3] * y[0] * y[0] - x[0] * x[0] * y[2] * y[3],
           x[0] * x[1] * y[3] * y[3] - x[3] * x[3] * y[0] * y[1],
           x[3] * x[4] * y[1] * y[1] - x[1] * x[1] * y[3] * y[4],
           x[1] * x[2] * y[4] * y[4] - x[4] * x[4] * y[1] * y[2],
           x[4] * x[0] * y[2] * y[2] - x[2] * x[2] * y[4] * y[0]}};
}

template <class T>
P4Point<T> add_a2(const P4Point<T>& x, const P4Point<T>& y) {
  return {{x[1] * x[0] * y[2] * y[2] - x[3] * x[3] * y[0] * y[4],
           x[4] * x[3] * y[0] * y[0] - x[1] * x[1] * y[3] * y[2],
           x[2] * x[1] * y[3] * y[3] - x[4] * x[4] * y[1] * y[0],
           x[0] * x[4] * y[1] * y[1] - x[2] * x[2] * y[4] * y[3],
           x[3] * x[2] * y[4] * y[4] - x[0] * x[0] * y[2] * y[1]}};
}

// Which formula produced a sum.
enum class AddFormula { A1, A2 };

template <class T>
struct AddResult {
  P4Point<T> point;
  AddFormula formula;
};

// A1, falling back to A2 when A1 returns the zero vector. Throws
// BothFormulasDegenerate when both do.
template <class T>
AddResult<T> add_with_formula(const P4Point<T>& x, const P4Point<T>& y) {
  double mx = max_magnitude(x), my = max_magnitude(y);
  double scale = mx * mx * my * my;
  P4Point<T> z = add_a1(x, y);
  if (!vanishes(z, scale)) return {std::move(z), AddFormula::A1};
  z = add_a2(x, y);
  if (!vanishes(z, scale)) return {std::move(z), AddFormula::A2};
  throw BothFormulasDegenerate("add: both addition formulas vanish");
}

template <class T>
P4Point<T> add(const P4Point<T>& x, const P4Point<T>& y) {
  return add_with_formula(x, y).point;
}

// z_k = x_{3k} x_{3k+1} x_{3k+2}^2 - x_{3k} x_{3k-1} x_{3k-2}^2.
// Throws DegenerateResult if every coordinate vanishes.
template <class T>
P4Point<T> duplicate(const P4Point<T>& x) {
  P4Point<T> z;
  for (int k = 0; k < 5; ++k) {
    int m = 3 * k;
    z[k] = x[m] * x[m + 1] * x[m + 2] * x[m + 2] - x[m] * x[m - 1] * x[m - 2] * x[m - 2];
  }
  double mx = max_magnitude(x);
  if (vanishes(z, mx * mx * mx * mx)) throw DegenerateResult("duplicate: result vanishes");
  return z;
}

// z_k = x_{3k+2} x_{3k+1}^3 - x_{3k-1}^3 x_{3k-2}.
template <class T>
P4Point<T> duplicate_cubic(const P4Point<T>& x) {
  P4Point<T> z;
  for (int k = 0; k < 5; ++k) {
    int m = 3 * k;
    z[k] = x[m + 2] * x[m + 1] * x[m + 1] * x[m + 1] - x[m - 1] * x[m - 1] * x[m - 1] * x[m - 2];
  }
  double mx = max_magnitude(x);
  if (vanishes(z, mx * mx * mx * mx)) throw DegenerateResult("duplicate_cubic: result vanishes");
  return z;
}

// sum_{i<j} |p_i q_j - p_j q_i|^2 / (|P|^2 |Q|^2), which equals
// 1 - |<P,Q>|^2 / (|P|^2 |Q|^2) without the cancellation.
double projective_distance(const NumericPoint& p, const NumericPoint& q);

// All 2x2 minors vanish identically.
bool same_point(const SeriesPoint& p, const SeriesPoint& q);

// Scaled so the largest coordinate is real and equal to 1.
NumericPoint normalized(const NumericPoint& p);

// The 25 points shift^b(twist^m(O)), index 5 b + m; twist^m multiplies
// x_k by zeta^(-k m), shift^b moves x_k to position k + b.
std::vector<NumericPoint> five_torsion_points(Complex phi);

// Roots of xi^3 - xi^2 + phi^5 xi + phi^5 from the companion matrix,
// polished by Newton steps.
std::array<Complex, 3> cubic_roots(Complex phi);

// 4 phi^5 (1 - 11 phi^5 - phi^10), the discriminant of the cubic.
template <class T>
T cubic_discriminant(const T& phi) {
  static const exact::QPoly d = exact::QPoly::from_terms({{5, 4}, {10, -44}, {15, -4}});
  return d(phi);
}

// [phi^3 + phi^3/g : phi : g : g : phi].
template <class T>
P4Point<T> two_torsion_point(const T& phi, const T& g) {
  T phi3 = phi * phi * phi;
  return {{phi3 + phi3 / g, phi, g, g, phi}};
}

// The three nontrivial 2-torsion points over C. Throws SingularCurve when
// the discriminant zero test fires.
std::array<NumericPoint, 3> two_torsion_points(Complex phi);

// The three 2-torsion points with g1, g2, g3 and phi as exact series.
struct SeriesTwoTorsion {
  PuiseuxSeries phi;
  std::array<PuiseuxSeries, 3> g;
  std::array<SeriesPoint, 3> points;
};
SeriesTwoTorsion two_torsion_points_series(const exact::BigRational& order);

enum class PlaneModel { Quintic, HulekCraig, Bring2, KK, Weber };

// phi^6 x0^5 + phi x1^5 + phi^6 x2^5 + phi^4 (phi^5+3) x0^2 x1 x2^2 - (2phi^5+1) x0 x2 x1^3
template <class T>
T quintic_model(const T& x0, const T& x1, const T& x2, const T& phi) {
  T p2 = phi * phi, p4 = p2 * p2, p5 = p4 * phi, p6 = p5 * phi;
  T one = Domain<T>::constant(1, phi);
  T x02 = x0 * x0, x12 = x1 * x1, x22 = x2 * x2;
  return p6 * x02 * x02 * x0 + phi * x12 * x12 * x1 + p6 * x22 * x22 * x2 +
         p4 * (p5 + Domain<T>::constant(3, phi)) * x02 * x1 * x22 - (p5 + p5 + one) * x0 * x2 * x12 * x1;
}

template <class T>
T hulek_craig_model(const T& x0, const T& x1, const T& x2) {
  T x02 = x0 * x0, x12 = x1 * x1, x22 = x2 * x2;
  T t = x1 * x2;
  return x02 * x02 * t - x02 * t * t - x0 * x12 * x12 * x1 - x0 * x22 * x22 * x2 + (t * t * t + t * t * t);
}

template <class T>
T bring2_model(const T& x1, const T& x2, const T& phi) {
  T p3 = phi * phi * phi;
  return p3 * phi * x1 * x1 * x2 + p3 * x1 * x1 * x1 + phi * x2 * x2 * x2 - x1 * x2 * x2;
}

template <class T>
T kk_model(const T& xi, const T& phi) {
  T p2 = phi * phi;
  T p5 = p2 * p2 * phi;
  return xi * xi * xi - xi * xi + p5 * xi + p5;
}

// y^5 (x - 1) - (x + 1) x^2
template <class T>
T weber_model(const T& x, const T& y) {
  T one = Domain<T>::constant(1, x);
  T y2 = y * y;
  return y2 * y2 * y * (x - one) - (x + one) * x * x;
}

// The model polynomial at the coordinates the model lives on: (x0:x1:x2)
// for the quintic and Hulek-Craig models, (x1, x2) for bring2,
// xi = phi x2/x1 for kk, and (x, y) = (-xi, -phi) for weber.
template <class T>
T plane_model_residual(PlaneModel model, const P4Point<T>& p, const T& phi) {
  switch (model) {
    case PlaneModel::Quintic:
      return quintic_model(p[0], p[1], p[2], phi);
    case PlaneModel::HulekCraig:
      return hulek_craig_model(p[0], p[1], p[2]);
    case PlaneModel::Bring2:
      return bring2_model(p[1], p[2], phi);
    case PlaneModel::KK:
      return kk_model(phi * p[2] / p[1], phi);
    case PlaneModel::Weber:
      return weber_model(-(phi * p[2] / p[1]), -phi);
  }
  throw DomainError("plane_model_residual: unknown model");
}

}  // namespace bianchi::curve

#endif  // BIANCHI_CURVE_CURVE_HPP
