// Copyright 2026 The jumpfeed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded generators and independent oracles shared by the test suites.
// Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "jumpfeed/linalg.hpp"

namespace jumpfeed::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5EED5EEDULL);
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex gaussian_complex() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

template <std::size_t N>
SquareMatrix<N> random_matrix() {
  SquareMatrix<N> m;
  for (auto& x : m.data()) x = gaussian_complex();
  return m;
}

template <std::size_t N>
SquareMatrix<N> random_hermitian() {
  const SquareMatrix<N> g = random_matrix<N>();
  SquareMatrix<N> h;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  }
  return h;
}

inline CVector<4> random_state_vector() {
  CVector<4> v;
  double n2 = 0.0;
  for (auto& a : v) {
    a = gaussian_complex();
    n2 += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(n2);
  return v;
}

inline Mat4 projector(const CVector<4>& v) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

/// Full-rank mixed state G G^dagger / Tr, G Ginibre.
inline Mat4 random_density() {
  const Mat4 g = random_matrix<4>();
  Mat4 rho;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = s;
    }
  }
  const double tr = rho.trace().real();
  for (auto& x : rho.data()) x /= tr;
  for (std::size_t i = 0; i < 4; ++i) rho(i, i) = rho(i, i).real();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

/// Haar-like SU(2) element from a random unit quaternion, times a phase.
inline Mat2 random_unitary2() {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4];
  double s = 0.0;
  for (double& x : q) {
    x = n(rng());
    s += x * x;
  }
  s = std::sqrt(s);
  const Complex a(q[0] / s, q[1] / s);
  const Complex b(q[2] / s, q[3] / s);
  const Complex phase = std::polar(1.0, uniform(0.0, 6.283185307179586));
  Mat2 u;
  u(0, 0) = phase * a;
  u(0, 1) = -phase * std::conj(b);
  u(1, 0) = phase * b;
  u(1, 1) = phase * std::conj(a);
  return u;
}

/// Pure-state concurrence 2|ad - bc| for psi = a|ee> + b|eg> + c|ge> + d|gg>.
inline double pure_concurrence(const CVector<4>& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

/// Coefficients c[0..4] of det(x I - A) = x^4 + c[1] x^3 + ... + c[4] by Faddeev-LeVerrier.
inline std::array<Complex, 5> characteristic_polynomial(const Mat4& a) {
  std::array<Complex, 5> c{};
  c[0] = 1.0;
  Mat4 m;  // M_0 = 0
  for (int k = 1; k <= 4; ++k) {
    Mat4 mk;
    // M_k = A M_{k-1} + c_{k-1} I
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        Complex s = 0.0;
        for (std::size_t l = 0; l < 4; ++l) s += a(i, l) * m(l, j);
        mk(i, j) = s + (i == j ? c[k - 1] : Complex{0.0});
      }
    }
    Complex tr = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t l = 0; l < 4; ++l) tr += a(i, l) * mk(l, i);
    }
    c[k] = -tr / static_cast<double>(k);
    m = mk;
  }
  return c;
}

/// Roots of a monic quartic by Durand-Kerner iteration.
inline std::array<Complex, 4> quartic_roots(const std::array<Complex, 5>& c) {
  auto p = [&](Complex x) { return (((x + c[1]) * x + c[2]) * x + c[3]) * x + c[4]; };
  std::array<Complex, 4> z;
  const Complex seed(0.4, 0.9);
  for (int k = 0; k < 4; ++k) z[k] = std::pow(seed, k);
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (std::abs(denom) == 0.0) denom = 1e-300;
      const Complex step = p(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return z;
}

/// Concurrence straight from the definition: eigenvalues of the non-Hermitian
/// product rho * rho~ (rho~ built with an explicit sigma_y (x) sigma_y).
inline double concurrence_by_definition(const Mat4& rho) {
  Mat4 yy;
  // sigma_y (x) sigma_y in the |ee>,|eg>,|ge>,|gg> basis: anti-diagonal (-1, 1, 1, -1).
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  Mat4 conj_rho;
  for (std::size_t i = 0; i < 16; ++i) conj_rho.data()[i] = std::conj(rho.data()[i]);
  const Mat4 flipped = yy * conj_rho * yy;
  const auto roots = quartic_roots(characteristic_polynomial(rho * flipped));
  std::array<double, 4> lambdas;
  for (int i = 0; i < 4; ++i) lambdas[i] = std::max(roots[i].real(), 0.0);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double c = std::sqrt(lambdas[0]) - std::sqrt(lambdas[1]) - std::sqrt(lambdas[2]) -
                   std::sqrt(lambdas[3]);
  return std::max(c, 0.0);
}

}  // namespace jumpfeed::testing
