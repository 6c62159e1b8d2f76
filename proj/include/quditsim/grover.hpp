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

#ifndef QUDITSIM_GROVER_HPP
#define QUDITSIM_GROVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quditsim/oracle.hpp"

namespace quditsim {

/// Search for basis index `target` in an n^r register.
class GroverProblem {
 public:
  GroverProblem(RegisterShape shape, std::size_t target);

  const RegisterShape& shape() const noexcept { return shape_; }
  std::size_t target() const noexcept { return target_; }
  /// N = n^r
  std::size_t size() const noexcept { return shape_.dim(); }

 private:
  RegisterShape shape_;
  std::size_t target_;
};

/// U_{|i0>} = I - (1 - omega^{-1}) |i0><i0|: omega^{-1} at the target, 1 elsewhere.
PhaseOracle selective_phase_oracle(const GroverProblem& p);

/// D = (1 - omega^{-1}) |psi><psi| - I, dense. Entry [j,k] = (1 - omega^{-1})/N - delta_jk.
CMatrix diffusion_operator(const RegisterShape& shape);

/// -F^{(x)r} U_{|0>} (F^dagger)^{(x)r}, built column by column with the
/// digit-wise transform.
CMatrix diffusion_via_qft(const RegisterShape& shape);

/// G = D U_{|i0>}, dense. Cross-validation only.
CMatrix grover_operator_dense(const GroverProblem& p);

/// One application of G to a raw (not necessarily normalised) amplitude
/// buffer: phase at the target, then reflection about the mean. O(N).
void apply_grover_step(std::span<cplx> amps, const GroverProblem& p);

struct TraceStep {
  int k;
  cplx target_amplitude;
  double target_probability;
  double max_other_probability;
  /// |1 - sum |a|^2|
  double norm_deviation;
};

using IterationTrace = std::vector<TraceStep>;

/// Starts from the uniform superposition and records steps 0..k.
IterationTrace grover_iterate(const GroverProblem& p, int k);

/// G restricted to span{|i0>, |psi>}, coordinates in that (non-orthogonal)
/// basis, with the closed-form eigenvalues and eigenvector matrix
/// M = [[1, 1], [x, y]] (principal square roots), plus a numerical eigensolve
/// of the same 2x2 matrix for comparison.
struct GroverModel {
  GroverProblem problem;
  CMatrix subspace;  // 2x2
  cplx lambda_plus;
  cplx lambda_minus;
  cplx x;
  cplx y;
  std::array<cplx, 2> numeric_eigenvalues;
  /// max |closed form - numeric| under the better of the two pairings.
  double eigen_deviation;
};

/// Requires N > 1.
GroverModel build_model(const GroverProblem& p);

/// (1, 1/sqrt N) M_G^k (0, 1)^T by repeated 2x2 products.
cplx model_target_amplitude(const GroverModel& m, int k);
/// Same quantity through M diag(lambda+^k, lambda-^k) M^{-1}.
cplx model_target_amplitude_spectral(const GroverModel& m, int k);

struct SubspaceReport {
  int trials;
  double max_deviation;
};

/// Compares G (a|i0> + b|psi>) in the full space against the coordinates
/// M_G (a, b)^T. The pairs (1,0) and (0,1) are always included, followed by
/// `trials` seeded random pairs.
SubspaceReport subspace_consistency(const GroverProblem& p, int trials,
                                    std::uint64_t seed);

/// ((-omega^{-1})^{k-1} / sqrt N) [k (1 - omega^{-1}) - omega^{-1}], k >= 1.
/// Relative accuracy O(1/N) against the simulated amplitude for k << sqrt N.
cplx lowest_order_amplitude(const GroverProblem& p, int k);

struct OptimalIterations {
  /// First peak of the target probability over k = 0..k_max.
  int k_opt;
  double p_max;
  int k_max;
  /// Largest probability anywhere in the scan and where it occurs.
  int k_global;
  double p_global;
};

/// ceil(3 n sqrt(N))
int default_k_max(const RegisterShape& shape);

OptimalIterations find_optimal_iterations(const GroverProblem& p,
                                          std::optional<int> k_max = std::nullopt);

struct StudyRow {
  int radix;
  int arity;
  std::size_t dim;
  bool skipped;
  std::optional<int> k_opt;
  std::optional<double> p_max;
};

/// One row per radix (input order): smallest r with n^r >= n_min, then a
/// first-peak scan. Rows beyond the dimension guard are marked skipped.
std::vector<StudyRow> radix_study(std::size_t n_min, const std::vector<int>& radices);

/// Header `n,r,N,k_opt,p_max`; skipped rows leave the last two fields empty.
std::string study_csv(const std::vector<StudyRow>& rows);

}  // namespace quditsim

#endif  // QUDITSIM_GROVER_HPP
