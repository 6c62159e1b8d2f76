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

#include <algorithm>
#include <string>
#include <vector>

#include "kernels_common.hpp"
#include "quditsim/kernels.hpp"

namespace quditsim::kernels {

namespace serial {

void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u) {
  const DigitGeometry g = digit_geometry(amps.size(), layout, digit, u.size());
  std::vector<cplx> in(g.radix);
  for (std::size_t group = 0; group < g.groups; ++group) {
    const std::size_t base = g.base(group);
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

void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag) {
  require_same_length(amps.size(), diag.size(), "apply_diagonal");
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] *= diag[i];
  }
}

void reflect_about_mean(std::span<cplx> amps, cplx coeff) {
  const cplx shift = coeff * sum(amps) / static_cast<double>(amps.size());
  for (cplx& a : amps) {
    a = shift - a;
  }
}

void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm) {
  require_same_length(in.size(), out.size(), "apply_permutation");
  require_same_length(in.size(), perm.size(), "apply_permutation");
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[perm[i]] = in[i];
  }
}

cplx sum(std::span<const cplx> amps) {
  cplx acc{};
  for (const cplx& a : amps) {
    acc += a;
  }
  return acc;
}

double norm_sq(std::span<const cplx> amps) {
  double acc = 0.0;
  for (const cplx& a : amps) {
    acc += std::norm(a);
  }
  return acc;
}

double max_norm_excluding(std::span<const cplx> amps, std::size_t skip) {
  double best = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i != skip) {
      best = std::max(best, std::norm(amps[i]));
    }
  }
  return best;
}

}  // namespace serial

// Dispatch.

namespace {
bool wide(std::size_t n) { return n >= kParallelThreshold; }
}  // namespace

void apply_digit_transform(std::span<cplx> amps, Layout layout, int digit,
                           std::span<const cplx> u) {
  wide(amps.size()) ? parallel::apply_digit_transform(amps, layout, digit, u)
                    : serial::apply_digit_transform(amps, layout, digit, u);
}

void apply_diagonal(std::span<cplx> amps, std::span<const cplx> diag) {
  wide(amps.size()) ? parallel::apply_diagonal(amps, diag)
                    : serial::apply_diagonal(amps, diag);
}

void reflect_about_mean(std::span<cplx> amps, cplx coeff) {
  wide(amps.size()) ? parallel::reflect_about_mean(amps, coeff)
                    : serial::reflect_about_mean(amps, coeff);
}

void apply_permutation(std::span<const cplx> in, std::span<cplx> out,
                       std::span<const std::size_t> perm) {
  wide(in.size()) ? parallel::apply_permutation(in, out, perm)
                  : serial::apply_permutation(in, out, perm);
}

cplx sum(std::span<const cplx> amps) {
  return wide(amps.size()) ? parallel::sum(amps) : serial::sum(amps);
}

double norm_sq(std::span<const cplx> amps) {
  return wide(amps.size()) ? parallel::norm_sq(amps) : serial::norm_sq(amps);
}

double max_norm_excluding(std::span<const cplx> amps, std::size_t skip) {
  return wide(amps.size()) ? parallel::max_norm_excluding(amps, skip)
                           : serial::max_norm_excluding(amps, skip);
}

}  // namespace quditsim::kernels

