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

#ifndef QUDITSIM_CONFIG_HPP
#define QUDITSIM_CONFIG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace quditsim {

using cplx = std::complex<double>;

/// Default entrywise comparison tolerance.
inline constexpr double kDefaultTol = 1e-10;

/// Tolerance on sum |a|^2 == 1 enforced when a QuditState is constructed.
inline constexpr double kNormTol = 1e-10;

/// Default cap on vector length and on matrix entry count (2^20).
inline constexpr std::size_t kDefaultMaxDimension = std::size_t{1} << 20;

/// Current dimension guard. Initialised from QUDITSIM_MAX_DIM when that is set
/// to a positive integer, otherwise kDefaultMaxDimension.
std::size_t max_dimension();
void set_max_dimension(std::size_t dim);

/// Restores the previous guard on scope exit.
class ScopedMaxDimension {
 public:
  explicit ScopedMaxDimension(std::size_t dim) : saved_(max_dimension()) {
    set_max_dimension(dim);
  }
  ~ScopedMaxDimension() { set_max_dimension(saved_); }
  ScopedMaxDimension(const ScopedMaxDimension&) = delete;
  ScopedMaxDimension& operator=(const ScopedMaxDimension&) = delete;

 private:
  std::size_t saved_;
};

/// Shapes that do not line up, or sizes beyond the dimension guard.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values outside their domain: digits >= radix, radix < 2, unnormalised states.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed chart or function document. Line and column are 1-based; 0 means
/// the position is not known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// The caller broke a documented promise, e.g. a Deutsch-Jozsa query on a
/// function that is neither constant nor balanced.
class PromiseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quditsim

#endif  // QUDITSIM_CONFIG_HPP
