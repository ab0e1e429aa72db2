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

#include "jumpfeed/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jumpfeed/errors.hpp"

namespace jumpfeed {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Applies the plane rotation U (identity outside rows/cols p, q) as
// a <- U^dagger a U and v <- v U.
template <std::size_t N>
void rotate(SquareMatrix<N>& a, SquareMatrix<N>& v, std::size_t p, std::size_t q, Complex upp,
            Complex upq, Complex uqp, Complex uqq) {
  // a <- a U (columns p and q)
  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
  // a <- U^dagger a (rows p and q)
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
}

}  // namespace

template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const SquareMatrix<N>& input) {
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianTolerance) {
    throw NotHermitian("matrix is not Hermitian: max |a - a^dagger| = " + std::to_string(defect));
  }
  SquareMatrix<N> a = hermitian_part(input);
  SquareMatrix<N> v = SquareMatrix<N>::identity();
  const double scale = std::max(1.0, frobenius_norm(a));

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiOffDiagonalTolerance * scale) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase e^{i phi} of a(p,q); D = diag(1, e^{-i phi}) makes the pivot real.
        const Complex phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = D * [[c, s], [-s, c]]
        const Complex dq = std::conj(phase);
        rotate(a, v, p, q, c, s, -s * dq, c * dq);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <std::size_t N>
SquareMatrix<N> hermitian_sqrt(const SquareMatrix<N>& a) {
  const HermitianEigen<N> eig = hermitian_eigen(a);
  SquareMatrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    double lambda = eig.values[k];
    if (lambda < -kNegativeEigenvalueClamp) {
      throw NotPositive("matrix has eigenvalue " + std::to_string(lambda) + " below -1e-9");
    }
    const double root = std::sqrt(std::max(lambda, 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i) {
      const Complex vi = eig.vectors(i, k) * root;
      for (std::size_t j = 0; j < N; ++j) out(i, j) += vi * std::conj(eig.vectors(j, k));
    }
  }
  return hermitian_part(out);
}

std::array<double, 4> singular_values(const Mat4& a) {
  SquareMatrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = a(i, j);
      dilation(4 + j, i) = std::conj(a(i, j));
    }
  }
  const auto eig = hermitian_eigen(dilation);
  std::array<double, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = std::max(eig.values[k], 0.0);
  return out;
}

template HermitianEigen<2> hermitian_eigen(const Mat2&);
template HermitianEigen<8> hermitian_eigen(const SquareMatrix<8>&);
template HermitianEigen<4> hermitian_eigen(const Mat4&);
template Mat2 hermitian_sqrt(const Mat2&);
template Mat4 hermitian_sqrt(const Mat4&);

}  // namespace jumpfeed
