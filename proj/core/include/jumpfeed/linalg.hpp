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

// Dense complex kernel for the 2x2 and 4x4 operators of a two-qubit system.
// Storage is row-major and fixed-size so hot loops never allocate.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace jumpfeed {

using Complex = std::complex<double>;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  static constexpr SquareMatrix zero() { return SquareMatrix{}; }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr SquareMatrix diagonal(const std::array<Complex, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  static constexpr std::size_t rows() { return N; }
  static constexpr std::size_t cols() { return N; }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  constexpr std::array<Complex, N * N>& data() { return data_; }
  constexpr const std::array<Complex, N * N>& data() const { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= -1.0; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t N>
using CVector = std::array<Complex, N>;

template <std::size_t N>
CVector<N> operator*(const SquareMatrix<N>& a, const CVector<N>& v) {
  CVector<N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Mat4 kron(const Mat2& a, const Mat2& b);

template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

/// Entrywise complex conjugate (no transpose).
template <std::size_t N>
SquareMatrix<N> conjugate(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N * N; ++i) out.data()[i] = std::conj(a.data()[i]);
  return out;
}

/// (a + a^dagger) / 2. The result is Hermitian bit-for-bit.
template <std::size_t N>
SquareMatrix<N> hermitian_part(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  }
  return out;
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

/// max |a - a^dagger| over all entries.
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i; j < N; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  }
  return m;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

// Tolerances shared by the eigen routines.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueClamp = 1e-9;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order and column k of `vectors` belongs to `values[k]`.
template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};
  SquareMatrix<N> vectors;
};

/// Cyclic complex Jacobi. Throws NotHermitian when max |a - a^dagger|
/// exceeds kHermitianTolerance.
template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const SquareMatrix<N>& a);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N>& a) {
  return hermitian_eigen(a).values;
}

/// Positive-semidefinite square root. Eigenvalues in [-1e-9, 0) are clamped
/// to zero; anything more negative throws NotPositive.
template <std::size_t N>
SquareMatrix<N> hermitian_sqrt(const SquareMatrix<N>& a);

/// Singular values in descending order, from the eigenvalues of the Hermitian
/// dilation [[0, a], [a^dagger, 0]]. Small singular values keep absolute
/// accuracy near machine epsilon, unlike square roots of eig(a a^dagger).
std::array<double, 4> singular_values(const Mat4& a);

extern template HermitianEigen<2> hermitian_eigen(const Mat2&);
extern template HermitianEigen<4> hermitian_eigen(const Mat4&);
extern template HermitianEigen<8> hermitian_eigen(const SquareMatrix<8>&);
extern template Mat2 hermitian_sqrt(const Mat2&);
extern template Mat4 hermitian_sqrt(const Mat4&);

}  // namespace jumpfeed
