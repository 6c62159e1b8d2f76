// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITSIM_QFT_HPP
#define QUDITSIM_QFT_HPP

#include <vector>

#include "quditsim/complex_dense.hpp"
#include "quditsim/qudit_register.hpp"

namespace quditsim {

/// omega^k with omega = e^{i 2 pi / n}, evaluated from the reduced angle
/// 2 pi (k mod n) / n. Negative k is allowed.
cplx omega_power(int n, long long k);

/// sum_{k=0}^{n-1} omega^{alpha k}; zero for alpha not divisible by n.
cplx root_of_unity_sum(int n, long long alpha);

/// F_n[j,k] = omega^{jk} / sqrt(n).
CMatrix fourier_matrix(int n);

/// F_n^{(x)r} built with kron. Dense; meant for cross-checks.
CMatrix fourier_tensor_power(int n, int r, bool inverse = false);

/// Applies F_n (or F_n^dagger) to every digit of `amps` in place, one strided
/// digit at a time.
void apply_qft_all_inplace(std::span<cplx> amps, const RegisterShape& shape,
                           bool inverse = false);
/// Applies F_n to a single digit in place.
void apply_qft_digit_inplace(std::span<cplx> amps, const RegisterShape& shape,
                             int digit, bool inverse = false);

/// F_n^{(x)r} |state>, digit by digit without forming the n^r x n^r matrix.
QuditState apply_qft_all(const QuditState& state);
QuditState apply_inverse_qft_all(const QuditState& state);

/// Same product through the dense kron-built matrix.
QuditState apply_qft_all_dense(const QuditState& state);

/// Powers of F_n. `square_permutation[m]` is the row holding the unit entry in
/// column m of F^2; `permutation_matches` records whether that equals
/// m -> (n - m) mod n and F^2 has no other non-zero entries.
struct QftPowerReport {
  int radix;
  std::vector<int> square_permutation;
  bool permutation_matches;
  double square_deviation;  // max |F^2 - P|, P the expected permutation
  double cube_deviation;    // max |F^3 - F^dagger|
  double fourth_deviation;  // max |F^4 - I|
};

QftPowerReport qft_power_structure(int n);

}  // namespace quditsim

#endif  // QUDITSIM_QFT_HPP
