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

#include <gtest/gtest.h>

#include <cmath>

#include "quditsim/checks.hpp"
#include "quditsim/deutsch_jozsa.hpp"
#include "quditsim/qft.hpp"
#include "test_support.hpp"

namespace quditsim {
namespace {

using testing::w;

TEST(DjPhase, ExampleOne) {
  const DjOutcome out = dj_run_phase(testing::example1());
  for (std::size_t i = 0; i < 9; ++i) {
    const cplx want = i == 7 ? w(3, 2) : cplx{};
    EXPECT_NEAR(std::abs(out.final_state[i] - want), 0.0, 1e-10) << i;
  }
  EXPECT_EQ(out.decision, DjDecision::BalancedAffine);
  EXPECT_EQ(out.coefficients, (Digits{2, 1}));
  EXPECT_EQ(out.phase_constant, 2);
  EXPECT_EQ(out.constant_term, 1);
}

TEST(DjPhase, ExampleTwo) {
  const DjOutcome out = dj_run_phase(testing::example2());
  const cplx third = 1.0 / 3.0;
  // |00> |01> |02> |10> |11> |12> |20> |21> |22>
  const std::vector<cplx> want{0.0,
                               w(3, 1) * third,
                               (1.0 + w(3, 2)) * third,
                               0.0,
                               third,
                               2.0 * third,
                               0.0,
                               w(3, 2) * third,
                               (1.0 + w(3, 1)) * third};
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(std::abs(out.final_state[i] - want[i]), 0.0, 1e-10) << i;
  }
  EXPECT_NEAR(std::norm(out.final_state[5]), 4.0 / 9.0, 1e-10);
  EXPECT_EQ(out.decision, DjDecision::BalancedOrNonAffine);
  EXPECT_FALSE(out.coefficients.has_value());
  EXPECT_FALSE(out.phase_constant.has_value());
}

TEST(DjPhase, ConstantTablesCarryTheirPhase) {
  for (int c = 0; c < 3; ++c) {
    const DjOutcome out = dj_run_phase(testing::constant_table(3, 2, c));
    EXPECT_NEAR(std::abs(out.final_state[0] - w(3, -c)), 0.0, 1e-12);
    EXPECT_EQ(out.decision, DjDecision::Constant);
    EXPECT_EQ(out.constant_term, c);
  }
}

TEST(DjPhase, AffineSweep) {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 2; ++r) {
      const RegisterShape s(n, r);
      for (const AffineForm& form : gen::all_affine_forms(s)) {
        const DjOutcome out = dj_run_phase(tabulate(form));
        const Digits tail(form.coefficients().begin() + 1, form.coefficients().end());
        const cplx amp = out.final_state[digits_to_index(s, tail)];
        ASSERT_NEAR(std::norm(amp), 1.0, 1e-9);
        ASSERT_NEAR(std::abs(amp - omega_power(n, -form.constant_term())), 0.0, 1e-9);
        ASSERT_EQ(out.constant_term, form.constant_term());
        ASSERT_EQ(out.decision,
                  form.is_constant() ? DjDecision::Constant : DjDecision::BalancedAffine);
      }
    }
  }
}

TEST(DjPhase, BalancedTablesNeverShowGroundState) {
  for (const auto& [n, r] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    for (const MvFunction& f : gen::all_tables(RegisterShape(n, r))) {
      if (classify(f).tag == FunctionTag::Balanced) {
        EXPECT_LT(std::abs(dj_run_phase(f).final_state[0]), 1e-10);
      }
    }
  }
  SeededRng rng(51);
  for (int i = 0; i < 100; ++i) {
    const MvFunction f = gen::random_balanced_table(RegisterShape(3, 2), rng);
    EXPECT_LT(std::abs(dj_run_phase(f).final_state[0]), 1e-10);
  }
}

TEST(DjPhase, OutputIsNormalised) {
  SeededRng rng(52);
  for (int n = 2; n <= 5; ++n) {
    const MvFunction f = gen::random_table(RegisterShape(n, 3), rng);
    EXPECT_NEAR(norm(dj_run_phase(f).final_state.amplitudes()), 1.0, 1e-10);
  }
}

TEST(DjFull, ConstantZeroGivesKetNMinusOne) {
  for (int n = 2; n <= 5; ++n) {
    const DjOutcome out = dj_run_full(testing::constant_table(n, 1, 0));
    EXPECT_EQ(out.y_final, n - 1);
    EXPECT_NEAR(*out.y_probability, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(out.combined_state->operator[](static_cast<std::size_t>(n - 1))), 1.0,
                1e-12);
    EXPECT_EQ(out.decision, DjDecision::Constant);
  }
}

TEST(DjFull, ExampleOne) {
  const DjOutcome out = dj_run_full(testing::example1());
  EXPECT_EQ(out.y_final, 2);
  EXPECT_NEAR(std::norm(out.combined_state->operator[](7 * 3 + 2)), 1.0, 1e-10);
  EXPECT_EQ(out.coefficients, (Digits{2, 1}));
}

TEST(DjFull, MatchesPhaseFormUpToGlobalPhase) {
  SeededRng rng(53);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 17; ++t) {
      const RegisterShape s(n, 1 + t % 2);
      const MvFunction f = t % 2 ? gen::random_table(s, rng) : gen::random_balanced_table(s, rng);
      const DjOutcome full = dj_run_full(f);
      EXPECT_EQ(full.y_final, n - 1);
      EXPECT_NEAR(*full.y_probability, 1.0, 1e-9);
      EXPECT_TRUE(equal_up_to_global_phase(full.final_state.amplitudes(),
                                           dj_run_phase(f).final_state.amplitudes(), 1e-9));
    }
  }
}

TEST(DjDecide, Examples) {
  const DjDecisionReport ex1 = dj_decide(testing::example1(), 1, 0);
  EXPECT_EQ(ex1.verdict, DjVerdict::BalancedAffine);
  EXPECT_EQ(ex1.coefficients, (Digits{2, 1}));
  EXPECT_EQ(dj_decide(testing::constant_table(4, 2, 3), 1, 0).verdict, DjVerdict::Constant);
  const DjDecisionReport ex2 = dj_decide(testing::example2(), 20, 7);
  EXPECT_EQ(ex2.verdict, DjVerdict::BalancedNonAffine);
  EXPECT_GE(ex2.histogram.size(), 2u);
  EXPECT_EQ(ex2.histogram.count(0), 0u);
  EXPECT_EQ(ex2.outcomes.size(), 20u);
}

TEST(DjDecide, ExampleTwoIsNonAffineForEverySeedTried) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    EXPECT_EQ(dj_decide(testing::example2(), 20, seed).verdict, DjVerdict::BalancedNonAffine);
  }
}

TEST(DjDecide, Errors) {
  EXPECT_THROW(dj_decide(testing::example1(), 0, 1), DomainError);
  EXPECT_THROW(dj_decide(MvFunction(RegisterShape(3, 1), {0, 0, 1}), 5, 1), PromiseError);
}

TEST(DjDecide, Deterministic) {
  const DjDecisionReport a = dj_decide(testing::example2(), 50, 99);
  const DjDecisionReport b = dj_decide(testing::example2(), 50, 99);
  EXPECT_EQ(a.outcomes, b.outcomes);
  EXPECT_EQ(a.histogram, b.histogram);
}

TEST(Strings, EnumNames) {
  EXPECT_EQ(to_string(DjDecision::BalancedOrNonAffine), "BalancedOrNonAffine");
  EXPECT_EQ(to_string(DjVerdict::BalancedNonAffine), "BalancedNonAffine");
  EXPECT_EQ(to_string(FunctionTag::Neither), "Neither");
}

}  // namespace
}  // namespace quditsim
