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

#include <Eigen/Eigenvalues>

#include <numbers>

#include "bianchi/curve/curve.hpp"
#include "bianchi/modular/modular.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::curve {

double quadric_residual_rel(const NumericPoint& p, Complex phi) {
  double worst = 0;
  for (int k = 0; k < 5; ++k) {
    worst = std::max(worst, theta::relative_residual({p[k] * p[k], phi * p[k + 2] * p[k - 2],
                                                      -p[k + 1] * p[k - 1] / phi}));
  }
  return worst;
}

double projective_distance(const NumericPoint& p, const NumericPoint& q) {
  double np = 0, nq = 0, minors = 0;
  for (int i = 0; i < 5; ++i) {
    np += std::norm(p[i]);
    nq += std::norm(q[i]);
    for (int j = i + 1; j < 5; ++j) minors += std::norm(p[i] * q[j] - p[j] * q[i]);
  }
  if (np == 0 || nq == 0) throw DomainError("projective_distance: zero vector");
  return minors / (np * nq);
}

bool same_point(const SeriesPoint& p, const SeriesPoint& q) {
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (!(p[i] * q[j] - p[j] * q[i]).is_zero()) return false;
    }
  }
  return true;
}

NumericPoint normalized(const NumericPoint& p) {
  int best = 0;
  for (int k = 1; k < 5; ++k) {
    if (std::abs(p[k]) > std::abs(p[best])) best = k;
  }
  Complex s = p[best];
  if (s == Complex(0)) throw DomainError("normalized: zero vector");
  NumericPoint out;
  for (int k = 0; k < 5; ++k) out[k] = p[k] / s;
  return out;
}

std::vector<NumericPoint> five_torsion_points(Complex phi) {
  const Complex zeta = std::polar(1.0, 2 * std::numbers::pi / 5);
  NumericPoint o = neutral(phi);
  std::vector<NumericPoint> pts;
  for (int b = 0; b < 5; ++b) {
    for (int m = 0; m < 5; ++m) {
      NumericPoint p;
      for (int k = 0; k < 5; ++k) p[k + b] = o[k] * std::pow(zeta, -k * m);
      pts.push_back(p);
    }
  }
  return pts;
}

std::array<Complex, 3> cubic_roots(Complex phi) {
  Complex p5 = std::pow(phi, 5);
  // companion matrix of xi^3 + c2 xi^2 + c1 xi + c0
  Complex c2 = -1.0, c1 = p5, c0 = p5;
  Eigen::Matrix3cd m;
  m << 0, 0, -c0, 1, 0, -c1, 0, 1, -c2;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m, false);
  std::array<Complex, 3> r;
  for (int i = 0; i < 3; ++i) {
    Complex x = es.eigenvalues()[i];
    for (int it = 0; it < 2; ++it) {
      Complex f = ((x + c2) * x + c1) * x + c0;
      Complex df = (3.0 * x + 2.0 * c2) * x + c1;
      if (std::abs(df) > 1e-14) x -= f / df;
    }
    r[static_cast<std::size_t>(i)] = x;
  }
  return r;
}

std::array<NumericPoint, 3> two_torsion_points(Complex phi) {
  Complex d = cubic_discriminant(phi);
  if (std::abs(d) <= 1e-12 * std::max(1.0, std::pow(std::abs(phi), 15))) {
    throw SingularCurve("two_torsion_points: discriminant vanishes");
  }
  auto g = cubic_roots(phi);
  return {two_torsion_point(phi, g[0]), two_torsion_point(phi, g[1]), two_torsion_point(phi, g[2])};
}

SeriesTwoTorsion two_torsion_points_series(const exact::BigRational& order) {
  SeriesTwoTorsion t;
  t.phi = modular::named_series("phi", order);
  for (int i = 0; i < 3; ++i) {
    t.g[static_cast<std::size_t>(i)] = modular::named_series("g" + std::to_string(i + 1), order);
    t.points[static_cast<std::size_t>(i)] = two_torsion_point(t.phi, t.g[static_cast<std::size_t>(i)]);
  }
  return t;
}

}  // namespace bianchi::curve
