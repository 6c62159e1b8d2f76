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

#include "quditsim/oracle.hpp"

#include <cmath>
#include <string>

#include "quditsim/kernels.hpp"
#include "quditsim/qft.hpp"

namespace quditsim {

PhaseOracle::PhaseOracle(RegisterShape shape, CVector diagonal)
    : shape_(shape), diag_(std::move(diagonal)) {
  if (diag_.dim() != shape_.dim()) {
    throw DimensionError("phase oracle diagonal does not match register");
  }
  for (const cplx& z : diag_.data()) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
      throw DomainError("phase oracle entries must have unit modulus");
    }
  }
}

void PhaseOracle::apply_inplace(std::span<cplx> amps) const {
  kernels::apply_diagonal(amps, diag_.data());
}

QuditState PhaseOracle::apply(const QuditState& state) const {
  if (!(state.shape() == shape_)) {
    throw DimensionError("phase oracle applied to a different register shape");
  }
  CVector amps = state.amplitudes();
  apply_inplace(amps.data());
  return QuditState(shape_, std::move(amps));
}

FullOracle::FullOracle(MvFunction f)
    : f_(std::move(f)), combined_(f_.radix(), f_.arity() + 1) {
  const auto n = static_cast<std::size_t>(f_.radix());
  perm_.resize(combined_.dim());
  for (std::size_t x = 0; x < f_.shape().dim(); ++x) {
    const auto fx = static_cast<std::size_t>(f_(x));
    for (std::size_t y = 0; y < n; ++y) {
      perm_[x * n + y] = x * n + (y + fx) % n;
    }
  }
}

CVector FullOracle::apply(const CVector& combined) const {
  if (combined.dim() != combined_.dim()) {
    throw DimensionError("full oracle expects " + std::to_string(combined_.dim()) +
                         " amplitudes");
  }
  CVector out(combined.dim());
  kernels::apply_permutation(combined.data(), out.data(), perm_);
  return out;
}

CMatrix FullOracle::to_dense() const {
  CMatrix m(combined_.dim(), combined_.dim());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    m(perm_[i], i) = 1.0;
  }
  return m;
}

PhaseOracle build_phase_oracle(const MvFunction& f) {
  CVector diag(f.shape().dim());
  for (std::size_t x = 0; x < diag.dim(); ++x) {
    diag[x] = omega_power(f.radix(), -static_cast<long long>(f(x)));
  }
  return PhaseOracle(f.shape(), std::move(diag));
}

FullOracle build_full_oracle(const MvFunction& f) { return FullOracle(f); }

CVector fourier_answer_state(int n) {
  CVector one(static_cast<std::size_t>(n));
  one[1 % n] = 1.0;
  return matvec(fourier_matrix(n), one);
}

double phase_kickback_equivalence(const MvFunction& f, const CVector& x_state) {
  if (x_state.dim() != f.shape().dim()) {
    throw DimensionError("x-state does not match the function's register");
  }
  const CVector y = fourier_answer_state(f.radix());
  const CVector full = build_full_oracle(f).apply(kron_vec(x_state, y));

  CVector kicked = x_state;
  build_phase_oracle(f).apply_inplace(kicked.data());
  return max_abs_diff(full, kron_vec(kicked, y));
}

double phase_kickback_equivalence(const MvFunction& f) {
  return phase_kickback_equivalence(f, uniform_state(f.shape()).amplitudes());
}

}  // namespace quditsim
