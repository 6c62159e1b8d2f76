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
#include "quditsim/kernels.hpp"
#include "quditsim/qft.hpp"
#include "test_support.hpp"

namespace quditsim {
namespace {

using testing::w;

TEST(Omega, PowersAreExactRootsOfUnity) {
  for (int n = 2; n <= 16; ++n) {
    EXPECT_NEAR(std::abs(omega_power(n, n) - 1.0), 0.0, 1e-12);
    for (int k = 1; k < n; ++k) EXPECT_GT(std::abs(omega_power(n, k) - 1.0), 1e-3);
    EXPECT_EQ(omega_power(n, -1), omega_power(n, n - 1));
    EXPECT_EQ(omega_power(n, 1000003LL * n + 2), omega_power(n, 2));
  }
}

TEST(RootsOfUnity, RootOfUnitySumsVanish) {
  for (int n = 2; n <= 12; ++n) {
    for (long long a = -3 * n; a <= 3 * n; ++a) {
      const double s = std::abs(root_of_unity_sum(n, a));
      if (a % n == 0) {
        EXPECT_NEAR(s, n, 1e-12);
      } else {
        EXPECT_LT(s, 1e-10) << "n=" << n << " alpha=" << a;
      }
    }
  }
}

TEST(FourierMatrix, BinaryIsHadamard) {
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(fourier_matrix(2), CMatrix{{h, h}, {h, -h}}), 1e-15);
}

TEST(FourierMatrix, TernarySecondRow) {
  const CMatrix f = fourier_matrix(3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(f(1, k) - w(3, k) / std::sqrt(3.0)), 0.0, 1e-15);
  }
}

TEST(FourierMatrix, UnitaryUpToSixteen) {
  for (int n = 2; n <= 16; ++n) EXPECT_LT(unitarity_deviation(fourier_matrix(n)), 1e-12);
  EXPECT_THROW(fourier_matrix(1), DomainError);
}

TEST(ApplyQft, GroundStateGoesToUniform) {
  for (int n = 2; n <= 5; ++n) {
    const RegisterShape s(n, 3);
    const QuditState out = apply_qft_all(basis_state(s, Digits{0, 0, 0}));
    EXPECT_LT(max_abs_diff(out.amplitudes(), uniform_state(s).amplitudes()), 1e-12);
  }
}

TEST(ApplyQft, KetOneGivesFirstColumnOfPowers) {
  const QuditState out = apply_qft_all(basis_state(RegisterShape(3, 1), Digits{1}));
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(out[k] - w(3, k) / std::sqrt(3.0)), 0.0, 1e-15);
  }
}

TEST(ApplyQft, FourApplicationsAreTheIdentity) {
  SeededRng rng(4);
  for (int n = 2; n <= 6; ++n) {
    const RegisterShape s(n, 2);
    const QuditState start(s, gen::random_state(s.dim(), rng));
    QuditState v = start;
    for (int i = 0; i < 4; ++i) v = apply_qft_all(v);
    EXPECT_LT(max_abs_diff(v.amplitudes(), start.amplitudes()), 1e-10);
  }
}

TEST(ApplyQft, InverseUndoesForward) {
  SeededRng rng(6);
  const RegisterShape s(4, 3);
  const QuditState start(s, gen::random_state(s.dim(), rng));
  EXPECT_LT(max_abs_diff(apply_inverse_qft_all(apply_qft_all(start)).amplitudes(),
                         start.amplitudes()),
            1e-12);
}

TEST(ApplyQft, FactorwiseMatchesKronProduct) {
  SeededRng rng(8);
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const RegisterShape s(n, r);
      const QuditState psi(s, gen::random_state(s.dim(), rng));
      EXPECT_LT(max_abs_diff(apply_qft_all(psi).amplitudes(),
                             matvec(fourier_tensor_power(n, r), psi.amplitudes())),
                1e-10);
      EXPECT_LT(max_abs_diff(apply_inverse_qft_all(psi).amplitudes(),
                             matvec(fourier_tensor_power(n, r, true), psi.amplitudes())),
                1e-10);
    }
  }
}

TEST(ApplyQft, LargeRegisterUsesParallelPathAndStaysNormalised) {
  const RegisterShape s(3, 9);
  ASSERT_GE(s.dim(), kernels::kParallelThreshold);
  SeededRng rng(10);
  const QuditState psi(s, gen::random_state(s.dim(), rng));
  const QuditState out = apply_qft_all(psi);
  EXPECT_NEAR(norm(out.amplitudes()), 1.0, 1e-10);
}

TEST(QftPowers, SquarePermutationExamples) {
  EXPECT_EQ(qft_power_structure(3).square_permutation, (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(qft_power_structure(2).square_permutation, (std::vector<int>{0, 1}));
  EXPECT_EQ(qft_power_structure(4).square_permutation,
            (std::vector<int>{0, 3, 2, 1}));
  const QftPowerReport r3 = qft_power_structure(3);
  EXPECT_TRUE(r3.permutation_matches);
  EXPECT_LT(r3.square_deviation, 1e-12);
  EXPECT_LT(r3.cube_deviation, 1e-12);
  EXPECT_LT(r3.fourth_deviation, 1e-12);
}

TEST(QftPowers, PowerIdentitiesUpToSixteen) {
  for (int n = 2; n <= 16; ++n) {
    const QftPowerReport r = qft_power_structure(n);
    EXPECT_TRUE(r.permutation_matches) << n;
    EXPECT_LT(r.square_deviation, 1e-10) << n;
    EXPECT_LT(r.cube_deviation, 1e-10) << n;
    EXPECT_LT(r.fourth_deviation, 1e-10) << n;
  }
}

}  // namespace
}  // namespace quditsim
