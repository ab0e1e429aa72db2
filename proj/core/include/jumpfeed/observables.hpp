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

#include <array>

#include "jumpfeed/linalg.hpp"
#include "jumpfeed/model.hpp"

namespace jumpfeed {

/// Everything recorded about the state at one sample time.
struct ObservableRecord {
  double t = 0.0;
  double rho1_ee = 0.0;
  double rho1_gg = 0.0;
  double abs_rho_eg = 0.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
  double concurrence = 0.0;
  double purity = 0.0;
};

struct CoherencePopulations {
  double abs_rho_eg = 0.0;
  double rho_ee = 0.0;
  double rho_gg = 0.0;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Reduced state of qubit 1: rho1[i][j] = sum_k rho[(i,k),(j,k)].
Mat2 partial_trace_qubit2(const Mat4& rho);

CoherencePopulations coherence_and_populations(const Mat2& rho1);

/// P_k = Tr(sigma_k rho1).
BlochVector bloch_vector(const Mat2& rho1);

/// (I + P . sigma) / 2
Mat2 from_bloch_vector(const BlochVector& p);

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y), conjugation in the canonical basis.
Mat4 spin_flip(const Mat4& rho);

/// Wootters concurrence max(0, r1 - r2 - r3 - r4), r_i = sqrt(lambda_i) with
/// lambda_i the descending spectrum of rho * spin_flip(rho). The lambda_i are
/// taken from the Hermitian sqrt(rho) rho~ sqrt(rho) = M M^dagger, and the
/// r_i directly as singular values of M. Propagates NotPositive.
double concurrence(const Mat4& rho);

/// The four lambda_i in descending order (clamped at zero).
std::array<double, 4> concurrence_lambdas(const Mat4& rho);

/// Tr(rho^2)
double purity(const Mat4& rho);

ObservableRecord measure(double t, const Mat4& rho);

}  // namespace jumpfeed
