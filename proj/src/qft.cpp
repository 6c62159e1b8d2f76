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

#include "quditsim/qft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quditsim/kernels.hpp"

namespace quditsim {

namespace {

void require_radix(int n) {
  if (n < 2) {
    throw DomainError("radix must be at least 2, got " + std::to_string(n));
  }
}

std::vector<cplx> fourier_entries(int n, bool inverse) {
  const CMatrix f = fourier_matrix(n);
  return inverse ? adjoint(f).entries() : f.entries();
}

}  // namespace

cplx omega_power(int n, long long k) {
  require_radix(n);
  long long reduced = k % n;
  if (reduced < 0) {
    reduced += n;
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / n;
  return std::polar(1.0, angle);
}

cplx root_of_unity_sum(int n, long long alpha) {
  cplx acc{};
  for (int k = 0; k < n; ++k) {
    acc += omega_power(n, alpha * k);
  }
  return acc;
}

CMatrix fourier_matrix(int n) {
  require_radix(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      f(j, k) = scale * omega_power(n, static_cast<long long>(j) * k);
    }
  }
  return f;
}

CMatrix fourier_tensor_power(int n, int r, bool inverse) {
  const CMatrix f = inverse ? adjoint(fourier_matrix(n)) : fourier_matrix(n);
  CMatrix out = f;
  for (int i = 1; i < r; ++i) {
    out = kron(out, f);
  }
  return out;
}

void apply_qft_digit_inplace(std::span<cplx> amps, const RegisterShape& shape,
                             int digit, bool inverse) {
  const std::vector<cplx> u = fourier_entries(shape.radix(), inverse);
  kernels::apply_digit_transform(amps, {shape.radix(), shape.arity()}, digit, u);
}

void apply_qft_all_inplace(std::span<cplx> amps, const RegisterShape& shape,
                           bool inverse) {
  const std::vector<cplx> u = fourier_entries(shape.radix(), inverse);
  for (int d = 0; d < shape.arity(); ++d) {
    kernels::apply_digit_transform(amps, {shape.radix(), shape.arity()}, d, u);
  }
}

QuditState apply_qft_all(const QuditState& state) {
  CVector amps = state.amplitudes();
  apply_qft_all_inplace(amps.data(), state.shape());
  return QuditState(state.shape(), std::move(amps));
}

QuditState apply_inverse_qft_all(const QuditState& state) {
  CVector amps = state.amplitudes();
  apply_qft_all_inplace(amps.data(), state.shape(), /*inverse=*/true);
  return QuditState(state.shape(), std::move(amps));
}

QuditState apply_qft_all_dense(const QuditState& state) {
  const RegisterShape& s = state.shape();
  return QuditState(s, matvec(fourier_tensor_power(s.radix(), s.arity()),
                              state.amplitudes()));
}

QftPowerReport qft_power_structure(int n) {
  const CMatrix f = fourier_matrix(n);
  const CMatrix f2 = matmul(f, f);
  const CMatrix f3 = matmul(f2, f);
  const CMatrix f4 = matmul(f3, f);

  QftPowerReport report{n, std::vector<int>(n, -1), true, 0.0, 0.0, 0.0};
  CMatrix expected(n, n);
  for (int m = 0; m < n; ++m) {
    expected((n - m) % n, m) = 1.0;
    // The realised permutation: the row whose entry in column m is closest to 1.
    double best = -1.0;
    for (int row = 0; row < n; ++row) {
      const double closeness = -std::abs(f2(row, m) - 1.0);
      if (report.square_permutation[m] < 0 || closeness > best) {
        best = closeness;
        report.square_permutation[m] = row;
      }
    }
    if (report.square_permutation[m] != (n - m) % n) {
      report.permutation_matches = false;
    }
  }
  report.square_deviation = max_abs_diff(f2, expected);
  report.cube_deviation = max_abs_diff(f3, adjoint(f));
  report.fourth_deviation = max_abs_diff(f4, CMatrix::identity(n));
  if (report.square_deviation > kDefaultTol) {
    report.permutation_matches = false;
  }
  return report;
}

}  // namespace quditsim
