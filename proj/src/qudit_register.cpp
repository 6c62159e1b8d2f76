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

#include "quditsim/qudit_register.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "quditsim/kernels.hpp"

namespace quditsim {

std::size_t checked_power(int radix, int arity) {
  if (radix < 1 || arity < 0) {
    return 0;
  }
  std::size_t out = 1;
  const auto n = static_cast<std::size_t>(radix);
  for (int i = 0; i < arity; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / n) {
      return 0;
    }
    out *= n;
  }
  return out;
}

RegisterShape::RegisterShape(int radix, int arity) : radix_(radix), arity_(arity) {
  if (radix < 2) {
    throw DomainError("radix must be at least 2, got " + std::to_string(radix));
  }
  if (arity < 1) {
    throw DomainError("arity must be at least 1, got " + std::to_string(arity));
  }
  dim_ = checked_power(radix, arity);
  if (dim_ == 0 || dim_ > max_dimension()) {
    throw DimensionError("register " + std::to_string(radix) + "^" +
                         std::to_string(arity) + " exceeds the dimension guard of " +
                         std::to_string(max_dimension()));
  }
}

Digits index_to_digits(const RegisterShape& shape, std::size_t index) {
  if (index >= shape.dim()) {
    throw DomainError("basis index " + std::to_string(index) + " out of range [0, " +
                      std::to_string(shape.dim()) + ")");
  }
  Digits digits(shape.arity());
  const auto n = static_cast<std::size_t>(shape.radix());
  for (int i = shape.arity() - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % n);
    index /= n;
  }
  return digits;
}

std::size_t digits_to_index(const RegisterShape& shape, std::span<const int> digits) {
  if (digits.size() != static_cast<std::size_t>(shape.arity())) {
    throw DimensionError("expected " + std::to_string(shape.arity()) + " digits, got " +
                         std::to_string(digits.size()));
  }
  std::size_t index = 0;
  for (int d : digits) {
    if (d < 0 || d >= shape.radix()) {
      throw DomainError("digit " + std::to_string(d) + " out of range for radix " +
                        std::to_string(shape.radix()));
    }
    index = index * static_cast<std::size_t>(shape.radix()) + static_cast<std::size_t>(d);
  }
  return index;
}

QuditState::QuditState(RegisterShape shape, CVector amplitudes)
    : shape_(shape), amps_(std::move(amplitudes)) {
  if (amps_.dim() != shape_.dim()) {
    throw DimensionError("state has " + std::to_string(amps_.dim()) +
                         " amplitudes, register needs " + std::to_string(shape_.dim()));
  }
  const double total = kernels::norm_sq(amps_.data());
  if (std::abs(total - 1.0) > kNormTol) {
    throw DomainError("state is not normalised (sum |a|^2 = " + std::to_string(total) +
                      ")");
  }
}

QuditState basis_state(const RegisterShape& shape, std::span<const int> digits) {
  CVector amps(shape.dim());
  amps[digits_to_index(shape, digits)] = 1.0;
  return QuditState(shape, std::move(amps));
}

QuditState uniform_state(const RegisterShape& shape) {
  const double a = 1.0 / std::sqrt(static_cast<double>(shape.dim()));
  return QuditState(shape, CVector(std::vector<cplx>(shape.dim(), cplx{a, 0.0})));
}

Distribution::Distribution(RegisterShape shape, std::vector<double> probabilities)
    : shape_(shape), probs_(std::move(probabilities)) {
  if (probs_.size() != shape_.dim()) {
    throw DimensionError("distribution length does not match register");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw DomainError("probabilities must be finite and non-negative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTol) {
    throw DomainError("probabilities sum to " + std::to_string(total));
  }
}

Distribution measure_distribution(const QuditState& state) {
  std::vector<double> probs(state.shape().dim());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::norm(state[i]);
  }
  return Distribution(state.shape(), std::move(probs));
}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw DomainError("SeededRng::below needs a positive bound");
  }
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::size_t> sample_indices(const Distribution& dist, std::uint64_t seed,
                                        std::size_t count) {
  const auto& p = dist.probabilities();
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
    if (p[i] > 0.0) {
      last_nonzero = i;
    }
  }
  SeededRng rng(seed);
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    // Scale by the actual total so rounding in the CDF never strands the tail.
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    out.push_back(std::min(idx, last_nonzero));
  }
  return out;
}

std::vector<Digits> sample(const Distribution& dist, std::uint64_t seed,
                           std::size_t count) {
  std::vector<Digits> out;
  out.reserve(count);
  for (std::size_t idx : sample_indices(dist, seed, count)) {
    out.push_back(index_to_digits(dist.shape(), idx));
  }
  return out;
}

}  // namespace quditsim
