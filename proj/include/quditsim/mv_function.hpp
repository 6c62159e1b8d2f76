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

#ifndef QUDITSIM_MV_FUNCTION_HPP
#define QUDITSIM_MV_FUNCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quditsim/qudit_register.hpp"

namespace quditsim {

/// Total function {0..n-1}^r -> {0..n-1} as a truth table indexed by the
/// big-endian input index.
class MvFunction {
 public:
  /// Throws DimensionError on a table of the wrong length and DomainError on
  /// outputs outside [0, n).
  MvFunction(RegisterShape shape, std::vector<int> outputs);

  const RegisterShape& shape() const noexcept { return shape_; }
  int radix() const noexcept { return shape_.radix(); }
  int arity() const noexcept { return shape_.arity(); }
  const std::vector<int>& outputs() const noexcept { return outputs_; }
  int operator()(std::size_t index) const { return outputs_[index]; }
  int operator()(std::span<const int> digits) const {
    return outputs_[digits_to_index(shape_, digits)];
  }

  friend bool operator==(const MvFunction&, const MvFunction&) = default;

 private:
  RegisterShape shape_;
  std::vector<int> outputs_;
};

/// A0 + A1 x1 + ... + Ar xr (mod n); coefficients[0] is A0.
class AffineForm {
 public:
  AffineForm(RegisterShape shape, std::vector<int> coefficients);

  const RegisterShape& shape() const noexcept { return shape_; }
  const std::vector<int>& coefficients() const noexcept { return coeffs_; }
  int constant_term() const noexcept { return coeffs_.front(); }
  /// Whether A1..Ar are all zero.
  bool is_constant() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  RegisterShape shape_;
  std::vector<int> coeffs_;
};

enum class FunctionTag { Constant, Balanced, Neither };

std::string_view to_string(FunctionTag tag);

struct FunctionClass {
  FunctionTag tag;
  /// histogram[v] = number of inputs mapped to v.
  std::vector<std::size_t> histogram;
};

int eval_affine(const AffineForm& form, std::span<const int> digits);
MvFunction tabulate(const AffineForm& form);
FunctionClass classify(const MvFunction& f);

/// Reads A0 = f(0..0) and Ai = f(e_i) - A0, then checks the whole table.
std::optional<AffineForm> detect_affine(const MvFunction& f);

/// Exact n^r! / ((n^(r-1))!)^n. Throws DomainError when n^r > 20.
std::uint64_t count_balanced(const RegisterShape& shape);

/// Marquand-chart text.
///
///   # comment lines and blank lines are ignored
///   radix 3          optional; otherwise radix = number of columns
///   arity 2          optional; otherwise inferred from the row count
///   1 0 2
///   2 1 0
///   0 2 1
///
/// Columns are indexed by the first input x1, rows by the remaining inputs
/// (x2..xr) read as a big-endian number, so there are n^(r-1) rows of n cells
/// and cell (row, col) is outputs[col * n^(r-1) + row]. For r = 2 this is the
/// usual chart with x = A*n + B.
MvFunction parse_chart(std::string_view text);
std::string format_chart(const MvFunction& f);

/// {"radix": n, "arity": r, "outputs": [...]} or {"radix": n, "affine": [A0..Ar]}.
MvFunction function_from_json(const nlohmann::json& doc);
nlohmann::json function_to_json(const MvFunction& f);
nlohmann::json affine_to_json(const AffineForm& form);

/// "n:A0,A1,...,Ar" as accepted on the command line.
AffineForm parse_affine_spec(std::string_view spec);

}  // namespace quditsim

#endif  // QUDITSIM_MV_FUNCTION_HPP
