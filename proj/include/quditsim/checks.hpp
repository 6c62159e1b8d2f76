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

#ifndef QUDITSIM_CHECKS_HPP
#define QUDITSIM_CHECKS_HPP

// Self-verification suites behind `quditsim verify`. Each suite sweeps a
// family of inputs and reports the worst deviation it saw against a fixed
// tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "quditsim/mv_function.hpp"

namespace quditsim {

struct CheckResult {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  /// Upper radix for the F^2 / F^3 / F^4 identities; must be >= 2.
  int radix_max = 16;
  std::uint64_t seed = 20240611;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Class of an affine form read off its coefficients: Constant when
/// A1..Ar are all zero, Balanced when gcd(A1, ..., Ar, n) = 1, Neither
/// otherwise (the values then fill a proper coset of a subgroup of Z_n).
FunctionTag expected_affine_tag(const AffineForm& form);

namespace gen {

/// Uniform random truth table.
MvFunction random_table(const RegisterShape& shape, SeededRng& rng);
/// Random balanced table: a shuffled multiset with n^(r-1) copies of each value.
MvFunction random_balanced_table(const RegisterShape& shape, SeededRng& rng);
/// Random unit vector with components uniform in the unit square before
/// normalisation.
CVector random_state(std::size_t dim, SeededRng& rng);
/// Every table of the shape, in lexicographic order. Only for tiny shapes.
std::vector<MvFunction> all_tables(const RegisterShape& shape);
/// Every affine form of the shape.
std::vector<AffineForm> all_affine_forms(const RegisterShape& shape);

}  // namespace gen

}  // namespace quditsim

#endif  // QUDITSIM_CHECKS_HPP
