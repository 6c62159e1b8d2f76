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

#ifndef QUDITSIM_DEUTSCH_JOZSA_HPP
#define QUDITSIM_DEUTSCH_JOZSA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "quditsim/oracle.hpp"

namespace quditsim {

enum class DjDecision { Constant, BalancedAffine, BalancedOrNonAffine };

std::string_view to_string(DjDecision d);

/// Probability mass above which an outcome counts as certain.
inline constexpr double kCertainMass = 1.0 - 1e-9;
/// Amplitude moduli below this are printed as exact zeros in reports. The
/// simulated states themselves are never modified.
inline constexpr double kZeroAmplitude = 1e-10;

struct DjOutcome {
  /// Query register after the second transform. For the full circuit this is
  /// the (renormalised) slice at the most likely answer digit.
  QuditState final_state;
  DjDecision decision;
  /// Digits A1..Ar of the certain non-zero outcome (BalancedAffine only).
  std::optional<Digits> coefficients;
  /// C with amplitude omega^C at the certain outcome (Constant or
  /// BalancedAffine). Visible only to the simulator; measurement loses it.
  std::optional<int> phase_constant;
  /// A0 = -C mod n, same caveat.
  std::optional<int> constant_term;

  // Full circuit only.
  std::optional<int> y_final;
  std::optional<double> y_probability;
  std::optional<CVector> combined_state;
};

/// F^{(x)r} U_f F^{(x)r} |0...0> with the diagonal phase oracle.
DjOutcome dj_run_phase(const MvFunction& f);

/// The two-register circuit: |0..0>|1>, F^{(x)r+1}, full oracle, F^{(x)r+1}.
DjOutcome dj_run_full(const MvFunction& f);

enum class DjVerdict { Constant, BalancedAffine, BalancedNonAffine };

std::string_view to_string(DjVerdict v);

struct DjDecisionReport {
  DjVerdict verdict;
  int runs;
  std::uint64_t seed;
  std::vector<Digits> outcomes;
  /// basis index -> times observed
  std::map<std::size_t, int> histogram;
  std::optional<Digits> coefficients;
};

/// Promise-based protocol from sampled measurements of dj_run_phase: Constant
/// iff 0...0 is observed, affine when every run returns the same non-zero
/// outcome, non-affine otherwise. Throws PromiseError when f is neither
/// constant nor balanced and DomainError when runs < 1.
DjDecisionReport dj_decide(const MvFunction& f, int runs, std::uint64_t seed);

}  // namespace quditsim

#endif  // QUDITSIM_DEUTSCH_JOZSA_HPP
