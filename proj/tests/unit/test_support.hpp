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

#ifndef QUDITSIM_TEST_SUPPORT_HPP
#define QUDITSIM_TEST_SUPPORT_HPP

#include <complex>
#include <numbers>
#include <vector>

#include "quditsim/mv_function.hpp"

namespace quditsim::testing {

inline cplx w(int n, int k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
}

inline MvFunction example1() {
  return MvFunction(RegisterShape(3, 2), {1, 2, 0, 0, 1, 2, 2, 0, 1});
}

inline MvFunction example2() {
  return MvFunction(RegisterShape(3, 2), {0, 2, 1, 1, 0, 2, 2, 0, 1});
}

inline MvFunction constant_table(int n, int r, int c) {
  const RegisterShape s(n, r);
  return MvFunction(s, std::vector<int>(s.dim(), c));
}

}  // namespace quditsim::testing

#endif  // QUDITSIM_TEST_SUPPORT_HPP
