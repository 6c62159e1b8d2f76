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

#include <omp.h>

#include <algorithm>
#include <vector>

#include "kernels_common.hpp"
#include "quditsim/kernels.hpp"

namespace quditsim::kernels {

namespace parallel {

namespace {

std::ptrdiff_t as_signed(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }

std::size_t chunk_count(std::size_t n) {
  return (n + kReductionChunk - 1) / kReductionChunk;
}

}  // namespace

void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u) {
  const DigitGeometry g = digit_geometry(amps.size(), layout, digit, u.size());
  const std::ptrdiff_t groups = as_signed(g.groups);
#pragma omp parallel
  {
    std::vector<cplx> in(g.radix);
#pragma omp for schedule(static)
    for (std::ptrdiff_t group = 0; group < groups; ++group) {
      const std::size_t base = g.base(static_cast<std::size_t>(group));
      for (std::size_t k = 0; k < g.radix; ++k) {
        in[k] = amps[base + k * g.stride];
      }
      for (std::size_t j = 0; j < g.radix; ++j) {
        cplx acc{};
        for (std::size_t k = 0; k < g.radix; ++k) {
          acc += u[j * g.radix + k] * in[k];
        }
        amps[base + j * g.stride] = acc;
      }
    }
  }
}

void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag) {
  require_same_length(amps.size(), diag.size(), "apply_diagonal");
  const std::ptrdiff_t n = as_signed(amps.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    amps[i] *= diag[i];
  }
}

void reflect_about_mean(std::span<cplx> amps, cplx coeff) {
  const cplx shift = coeff * sum(amps) / static_cast<double>(amps.size());
  const std::ptrdiff_t n = as_signed(amps.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    amps[i] = shift - amps[i];
  }
}

void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm) {
  require_same_length(in.size(), out.size(), "apply_permutation");
  require_same_length(in.size(), perm.size(), "apply_permutation");
  const std::ptrdiff_t n = as_signed(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[perm[i]] = in[i];
  }
}

cplx sum(std::span<const cplx> amps) {
  const std::size_t chunks = chunk_count(amps.size());
  std::vector<cplx> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < as_signed(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t hi = std::min(amps.size(), lo + kReductionChunk);
    cplx acc{};
    for (std::size_t i = lo; i < hi; ++i) {
      acc += amps[i];
    }
    partial[c] = acc;
  }
  cplx total{};
  for (const cplx& p : partial) {
    total += p;
  }
  return total;
}

double norm_sq(std::span<const cplx> amps) {
  const std::size_t chunks = chunk_count(amps.size());
  std::vector<double> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < as_signed(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t hi = std::min(amps.size(), lo + kReductionChunk);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc += std::norm(amps[i]);
    }
    partial[c] = acc;
  }
  double total = 0.0;
  for (double p : partial) {
    total += p;
  }
  return total;
}

double max_norm_excluding(std::span<const cplx> amps, std::size_t skip) {
  double best = 0.0;
  const std::ptrdiff_t n = as_signed(amps.size());
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) != skip) {
      best = std::max(best, std::norm(amps[i]));
    }
  }
  return best;
}

}  // namespace parallel

void set_threads(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace quditsim::kernels
