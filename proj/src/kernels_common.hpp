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

#ifndef QUDITSIM_SRC_KERNELS_COMMON_HPP
#define QUDITSIM_SRC_KERNELS_COMMON_HPP

#include <string>

#include "quditsim/kernels.hpp"

namespace quditsim::kernels {

// Strided view of one digit: `groups` independent runs of `radix` amplitudes,
// each spaced `stride` apart.
struct DigitGeometry {
  std::size_t radix;
  std::size_t stride;
  std::size_t groups;

  std::size_t base(std::size_t group) const {
    const std::size_t outer = group / stride;
    const std::size_t inner = group % stride;
    return outer * stride * radix + inner;
  }
};

inline void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch " +
                         std::to_string(a) + " vs " + std::to_string(b));
  }
}

inline DigitGeometry digit_geometry(std::size_t size, Layout layout, int digit,
                                    std::size_t u_entries) {
  if (layout.radix < 2 || layout.arity < 1 || digit < 0 || digit >= layout.arity) {
    throw DomainError("digit " + std::to_string(digit) + " outside register");
  }
  const auto n = static_cast<std::size_t>(layout.radix);
  if (u_entries != n * n) {
    throw DimensionError("digit transform must be radix x radix");
  }
  std::size_t stride = 1;
  for (int d = layout.arity - 1; d > digit; --d) {
    stride *= n;
  }
  std::size_t total = stride * n;
  for (int d = digit - 1; d >= 0; --d) {
    total *= n;
  }
  if (total != size) {
    throw DimensionError("amplitude buffer does not match register layout");
  }
  return DigitGeometry{n, stride, size / n};
}

}  // namespace quditsim::kernels

#endif  // QUDITSIM_SRC_KERNELS_COMMON_HPP
