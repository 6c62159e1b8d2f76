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

#ifndef QUDITSIM_KERNELS_HPP
#define QUDITSIM_KERNELS_HPP

// State-vector kernels over raw amplitude buffers.
//
// Every kernel exists twice: `serial` is the straightforward reference that
// tests compare against, `parallel` is the OpenMP version. The unqualified
// functions in `kernels` dispatch to `parallel` once the buffer is at least
// kParallelThreshold amplitudes long.
//
// Parallel reductions sum fixed-size chunks into a per-chunk array and then
// add the chunk totals in order, so their result does not depend on the
// thread count. It can differ from the serial loop in the last bits.

#include <cstddef>
#include <span>

#include "quditsim/config.hpp"

namespace quditsim::kernels {

inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 12;

/// Register layout for digit-local operations: `radix` values per digit,
/// `arity` digits, digit 0 most significant.
struct Layout {
  int radix;
  int arity;
};

namespace serial {

/// Applies the radix x radix row-major matrix `u` to digit `digit` of every
/// basis state (big-endian digit order).
void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u);
void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag);
/// amps[j] <- coeff * mean(amps) - amps[j]
void reflect_about_mean(std::span<cplx> amps, cplx coeff);
/// out[perm[i]] = in[i]
void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm);
cplx sum(std::span<const cplx> amps);
double norm_sq(std::span<const cplx> amps);
/// max |amps[i]|^2 over i != skip; 0 for a single-entry buffer.
double max_norm_excluding(std::span<const cplx> amps, std::size_t skip);

}  // namespace serial

namespace parallel {

void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u);
void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag);
void reflect_about_mean(std::span<cplx> amps, cplx coeff);
void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm);
cplx sum(std::span<const cplx> amps);
double norm_sq(std::span<const cplx> amps);
double max_norm_excluding(std::span<const cplx> amps, std::size_t skip);

}  // namespace parallel

void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u);
void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag);
void reflect_about_mean(std::span<cplx> amps, cplx coeff);
void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm);
cplx sum(std::span<const cplx> amps);
double norm_sq(std::span<const cplx> amps);
double max_norm_excluding(std::span<const cplx> amps, std::size_t skip);

/// Sets the OpenMP team size for subsequent parallel kernels; 0 leaves the
/// runtime default in place.
void set_threads(int threads);
int max_threads();

}  // namespace quditsim::kernels

#endif  // QUDITSIM_KERNELS_HPP
