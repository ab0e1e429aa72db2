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

#include "jumpfeed/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jumpfeed/errors.hpp"

namespace jumpfeed {

Mat2 partial_trace_qubit2(const Mat4& rho) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    }
  }
  return out;
}

CoherencePopulations coherence_and_populations(const Mat2& rho1) {
  return {std::abs(rho1(0, 1)), rho1(0, 0).real(), rho1(1, 1).real()};
}

BlochVector bloch_vector(const Mat2& rho1) {
  return {(pauli::x() * rho1).trace().real(), (pauli::y() * rho1).trace().real(),
          (pauli::z() * rho1).trace().real()};
}

Mat2 from_bloch_vector(const BlochVector& p) {
  return 0.5 * (Mat2::identity() + p.x * pauli::x() + p.y * pauli::y() + p.z * pauli::z());
}

Mat4 spin_flip(const Mat4& rho) {
  const Mat4 yy = kron(pauli::y(), pauli::y());
  return yy * conjugate(rho) * yy;
}

namespace {

// sqrt(lambda_i): with R = sqrt(rho) rho~ sqrt(rho) = M M^dagger and
// M = sqrt(rho) (sy (x) sy) sqrt(rho)*, these are the singular values of M.
std::array<double, 4> concurrence_roots(const Mat4& rho) {
  const Mat4 root = hermitian_sqrt(hermitian_part(rho));
  const Mat4 yy = kron(pauli::y(), pauli::y());
  return singular_values(root * yy * conjugate(root));
}

}  // namespace

std::array<double, 4> concurrence_lambdas(const Mat4& rho) {
  std::array<double, 4> lambdas = concurrence_roots(rho);
  for (double& l : lambdas) l *= l;
  return lambdas;
}

double concurrence(const Mat4& rho) {
  const auto s = concurrence_roots(rho);
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double purity(const Mat4& rho) {
  double s = 0.0;
  for (const auto& x : rho.data()) s += std::norm(x);
  return s;
}

ObservableRecord measure(double t, const Mat4& rho) {
  const Mat2 rho1 = partial_trace_qubit2(rho);
  const auto cp = coherence_and_populations(rho1);
  const auto p = bloch_vector(rho1);
  return {t, cp.rho_ee, cp.rho_gg, cp.abs_rho_eg, p.x, p.y, p.z, concurrence(rho), purity(rho)};
}

}  // namespace jumpfeed
