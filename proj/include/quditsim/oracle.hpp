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

#ifndef QUDITSIM_ORACLE_HPP
#define QUDITSIM_ORACLE_HPP

#include <vector>

#include "quditsim/mv_function.hpp"

namespace quditsim {

/// Diagonal oracle on the query register: |x> -> omega^{-f(x)} |x>.
class PhaseOracle {
 public:
  PhaseOracle(RegisterShape shape, CVector diagonal);

  const RegisterShape& shape() const noexcept { return shape_; }
  const CVector& diagonal() const noexcept { return diag_; }

  void apply_inplace(std::span<cplx> amps) const;
  QuditState apply(const QuditState& state) const;
  CMatrix to_dense() const { return CMatrix::diagonal(diag_); }

 private:
  RegisterShape shape_;
  CVector diag_;
};

/// |x>|y> -> |x>|y + f(x) mod n> on the combined register of r+1 digits, the
/// answer digit last. Stored as an index permutation.
class FullOracle {
 public:
  explicit FullOracle(MvFunction f);

  const RegisterShape& query_shape() const noexcept { return f_.shape(); }
  /// r+1 digits.
  const RegisterShape& combined_shape() const noexcept { return combined_; }
  const MvFunction& function() const noexcept { return f_; }
  /// permutation()[i] is the image of combined basis index i.
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  CVector apply(const CVector& combined) const;
  /// Dense permutation matrix; tests only.
  CMatrix to_dense() const;

 private:
  MvFunction f_;
  RegisterShape combined_;
  std::vector<std::size_t> perm_;
};

PhaseOracle build_phase_oracle(const MvFunction& f);
FullOracle build_full_oracle(const MvFunction& f);

/// F_n |1> = (1/sqrt n) sum_y omega^y |y>, the answer-register preparation.
CVector fourier_answer_state(int n);

/// Applies the full oracle to x_state (x) F_n|1> and returns
/// max |result - (U_f x_state) (x) F_n|1>|.
double phase_kickback_equivalence(const MvFunction& f, const CVector& x_state);
/// Same with x_state the uniform superposition.
double phase_kickback_equivalence(const MvFunction& f);

}  // namespace quditsim

#endif  // QUDITSIM_ORACLE_HPP
