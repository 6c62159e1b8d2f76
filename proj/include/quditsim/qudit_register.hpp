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

#ifndef QUDITSIM_QUDIT_REGISTER_HPP
#define QUDITSIM_QUDIT_REGISTER_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "quditsim/complex_dense.hpp"

namespace quditsim {

using Digits = std::vector<int>;

/// r digits of radix n. Construction enforces n >= 2, r >= 1 and
/// n^r <= max_dimension().
class RegisterShape {
 public:
  RegisterShape(int radix, int arity);

  int radix() const noexcept { return radix_; }
  int arity() const noexcept { return arity_; }
  /// n^r
  std::size_t dim() const noexcept { return dim_; }

  friend bool operator==(const RegisterShape&, const RegisterShape&) = default;

 private:
  int radix_;
  int arity_;
  std::size_t dim_;
};

/// n^r, or 0 when it overflows std::size_t. No guard applied.
std::size_t checked_power(int radix, int arity);

/// Big-endian: index = sum_i digit_i * n^(r-1-i).
Digits index_to_digits(const RegisterShape& shape, std::size_t index);
std::size_t digits_to_index(const RegisterShape& shape, std::span<const int> digits);

/// Normalised amplitude vector over a register.
class QuditState {
 public:
  /// Throws DomainError if sum |a|^2 differs from 1 by more than kNormTol.
  QuditState(RegisterShape shape, CVector amplitudes);

  const RegisterShape& shape() const noexcept { return shape_; }
  const CVector& amplitudes() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

 private:
  RegisterShape shape_;
  CVector amps_;
};

QuditState basis_state(const RegisterShape& shape, std::span<const int> digits);
/// (F_n|0>)^{(x)r}: every amplitude 1/sqrt(n^r).
QuditState uniform_state(const RegisterShape& shape);

class Distribution {
 public:
  /// Throws DomainError on negative entries or a total away from 1 by more
  /// than kNormTol.
  Distribution(RegisterShape shape, std::vector<double> probabilities);

  const RegisterShape& shape() const noexcept { return shape_; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  RegisterShape shape_;
  std::vector<double> probs_;
};

Distribution measure_distribution(const QuditState& state);

/// Portable seeded generator: std::mt19937_64 (output fully specified by the
/// C++ standard) with uniforms formed from the top 53 bits, so the same seed
/// yields the same stream on every conforming platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1): (x >> 11) * 2^-53.
  double uniform();
  /// Uniform integer on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Fisher-Yates with below(); independent of the standard library's
  /// shuffle implementation.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF sampling of `count` outcomes. Deterministic in (dist, seed, count).
std::vector<Digits> sample(const Distribution& dist, std::uint64_t seed,
                           std::size_t count);
/// Same, returning basis indices.
std::vector<std::size_t> sample_indices(const Distribution& dist,
                                        std::uint64_t seed, std::size_t count);

}  // namespace quditsim

#endif  // QUDITSIM_QUDIT_REGISTER_HPP
