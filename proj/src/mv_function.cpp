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

#include "quditsim/mv_function.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <sstream>

namespace quditsim {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back({std::string(line.substr(start, i - start)),
                     static_cast<int>(start) + 1});
    }
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

MvFunction::MvFunction(RegisterShape shape, std::vector<int> outputs)
    : shape_(shape), outputs_(std::move(outputs)) {
  if (outputs_.size() != shape_.dim()) {
    throw DimensionError("truth table has " + std::to_string(outputs_.size()) +
                         " entries, expected " + std::to_string(shape_.dim()));
  }
  for (int v : outputs_) {
    if (v < 0 || v >= shape_.radix()) {
      throw DomainError("output " + std::to_string(v) + " outside [0, " +
                        std::to_string(shape_.radix()) + ")");
    }
  }
}

AffineForm::AffineForm(RegisterShape shape, std::vector<int> coefficients)
    : shape_(shape), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != static_cast<std::size_t>(shape_.arity()) + 1) {
    throw DimensionError("affine form over " + std::to_string(shape_.arity()) +
                         " inputs needs " + std::to_string(shape_.arity() + 1) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (int c : coeffs_) {
    if (c < 0 || c >= shape_.radix()) {
      throw DomainError("coefficient " + std::to_string(c) + " outside [0, " +
                        std::to_string(shape_.radix()) + ")");
    }
  }
}

bool AffineForm::is_constant() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int c) { return c == 0; });
}

std::string_view to_string(FunctionTag tag) {
  switch (tag) {
    case FunctionTag::Constant:
      return "Constant";
    case FunctionTag::Balanced:
      return "Balanced";
    case FunctionTag::Neither:
      return "Neither";
  }
  return "Neither";
}

int eval_affine(const AffineForm& form, std::span<const int> digits) {
  const RegisterShape& s = form.shape();
  if (digits.size() != static_cast<std::size_t>(s.arity())) {
    throw DimensionError("expected " + std::to_string(s.arity()) + " digits");
  }
  long long acc = form.coefficients()[0];
  for (int i = 0; i < s.arity(); ++i) {
    if (digits[i] < 0 || digits[i] >= s.radix()) {
      throw DomainError("digit " + std::to_string(digits[i]) + " out of range");
    }
    acc += static_cast<long long>(form.coefficients()[i + 1]) * digits[i];
  }
  return mod(acc, s.radix());
}

MvFunction tabulate(const AffineForm& form) {
  const RegisterShape& s = form.shape();
  std::vector<int> outputs(s.dim());
  for (std::size_t x = 0; x < s.dim(); ++x) {
    outputs[x] = eval_affine(form, index_to_digits(s, x));
  }
  return MvFunction(s, std::move(outputs));
}

FunctionClass classify(const MvFunction& f) {
  const std::size_t n = static_cast<std::size_t>(f.radix());
  FunctionClass out{FunctionTag::Neither, std::vector<std::size_t>(n, 0)};
  for (int v : f.outputs()) {
    ++out.histogram[v];
  }
  const std::size_t total = f.shape().dim();
  const std::size_t share = total / n;
  if (std::any_of(out.histogram.begin(), out.histogram.end(),
                  [&](std::size_t c) { return c == total; })) {
    out.tag = FunctionTag::Constant;
  } else if (std::all_of(out.histogram.begin(), out.histogram.end(),
                         [&](std::size_t c) { return c == share; })) {
    out.tag = FunctionTag::Balanced;
  }
  return out;
}

std::optional<AffineForm> detect_affine(const MvFunction& f) {
  const RegisterShape& s = f.shape();
  std::vector<int> coeffs(s.arity() + 1);
  coeffs[0] = f(0);
  std::size_t unit = s.dim();
  for (int i = 1; i <= s.arity(); ++i) {
    // e_i: digit i-1 set to 1, index n^(r-i).
    unit /= static_cast<std::size_t>(s.radix());
    coeffs[i] = mod(static_cast<long long>(f(unit)) - coeffs[0], s.radix());
  }
  AffineForm form(s, std::move(coeffs));
  for (std::size_t x = 0; x < s.dim(); ++x) {
    if (eval_affine(form, index_to_digits(s, x)) != f(x)) {
      return std::nullopt;
    }
  }
  return form;
}

std::uint64_t count_balanced(const RegisterShape& shape) {
  constexpr std::size_t kMaxDomain = 20;
  if (shape.dim() > kMaxDomain) {
    throw DomainError("count_balanced supports n^r <= 20, got " +
                      std::to_string(shape.dim()));
  }
  auto factorial = [](std::uint64_t k) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 2; i <= k; ++i) {
      out *= i;
    }
    return out;
  };
  const std::uint64_t share = shape.dim() / static_cast<std::size_t>(shape.radix());
  std::uint64_t result = factorial(shape.dim());
  const std::uint64_t block = factorial(share);
  for (int i = 0; i < shape.radix(); ++i) {
    result /= block;  // exact: the multinomial coefficient is an integer at every step
  }
  return result;
}

MvFunction parse_chart(std::string_view text) {
  std::optional<int> radix;
  std::optional<int> arity;
  std::vector<std::vector<Token>> rows;
  std::vector<int> row_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    const std::string& head = tokens.front().text;
    if (head == "radix" || head == "arity") {
      if (!rows.empty()) {
        throw ParseError("header '" + head + "' after chart rows", line_no,
                         tokens.front().column);
      }
      if (tokens.size() != 2) {
        throw ParseError("expected '" + head + " <integer>'", line_no,
                         tokens.front().column);
      }
      const auto v = to_int(tokens[1].text);
      if (!v || *v < 1 || *v > 64) {
        throw ParseError("invalid " + head + " '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      (head == "radix" ? radix : arity) = static_cast<int>(*v);
    } else {
      rows.push_back(std::move(tokens));
      row_lines.push_back(line_no);
    }
    if (end == text.size()) {
      break;
    }
  }

  if (rows.empty()) {
    throw ParseError("chart has no cells", line_no, 0);
  }
  const int n = radix.value_or(static_cast<int>(rows.front().size()));
  if (n < 2) {
    throw ParseError("radix must be at least 2, got " + std::to_string(n),
                     row_lines.front(), 1);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(n)) {
      const int col = rows[i].size() > static_cast<std::size_t>(n)
                          ? rows[i][n].column
                          : rows[i].back().column;
      throw ParseError("expected " + std::to_string(n) + " cells per row, got " +
                           std::to_string(rows[i].size()),
                       row_lines[i], col);
    }
  }
  int r = 0;
  if (arity) {
    r = *arity;
  } else {
    // rows == n^(r-1)
    std::size_t count = 1;
    r = 1;
    while (count < rows.size()) {
      count *= static_cast<std::size_t>(n);
      ++r;
    }
    if (count != rows.size()) {
      throw ParseError("row count " + std::to_string(rows.size()) +
                           " is not a power of the radix " + std::to_string(n),
                       row_lines.back(), 1);
    }
  }
  const std::size_t expected_rows = checked_power(n, r - 1);
  if (expected_rows != rows.size()) {
    throw ParseError("arity " + std::to_string(r) + " needs " +
                         std::to_string(expected_rows) + " rows, got " +
                         std::to_string(rows.size()),
                     row_lines.back(), 1);
  }

  const RegisterShape shape(n, r);
  std::vector<int> outputs(shape.dim());
  for (std::size_t row = 0; row < rows.size(); ++row) {
    for (int col = 0; col < n; ++col) {
      const Token& cell = rows[row][col];
      const auto v = to_int(cell.text);
      if (!v || *v < 0 || *v >= n) {
        throw ParseError("cell '" + cell.text + "' is not a digit in [0, " +
                             std::to_string(n) + ")",
                         row_lines[row], cell.column);
      }
      outputs[static_cast<std::size_t>(col) * rows.size() + row] = static_cast<int>(*v);
    }
  }
  return MvFunction(shape, std::move(outputs));
}

std::string format_chart(const MvFunction& f) {
  const std::size_t n = static_cast<std::size_t>(f.radix());
  const std::size_t rows = f.shape().dim() / n;
  std::ostringstream out;
  out << "radix " << n << "\n";
  out << "arity " << f.arity() << "\n";
  for (std::size_t row = 0; row < rows; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      out << (col ? " " : "") << f(col * rows + row);
    }
    out << "\n";
  }
  return out.str();
}

MvFunction function_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("radix")) {
    throw ParseError("function document must be an object with a 'radix' field");
  }
  auto as_int = [](const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("'") + what + "' must be an integer");
    }
    return v.get<long long>();
  };
  const long long n = as_int(doc.at("radix"), "radix");
  if (n < 2 || n > 1 << 16) {
    throw ParseError("radix must be at least 2, got " + std::to_string(n));
  }
  auto int_list = [&](const nlohmann::json& v, const char* what) {
    if (!v.is_array()) {
      throw ParseError(std::string("'") + what + "' must be an array");
    }
    std::vector<int> out;
    for (const auto& e : v) {
      const long long x = as_int(e, what);
      if (x < 0 || x >= n) {
        throw ParseError(std::string("'") + what + "' entry " + std::to_string(x) +
                         " outside [0, " + std::to_string(n) + ")");
      }
      out.push_back(static_cast<int>(x));
    }
    return out;
  };
  if (doc.contains("affine")) {
    std::vector<int> coeffs = int_list(doc.at("affine"), "affine");
    if (coeffs.size() < 2) {
      throw ParseError("'affine' needs A0 and at least one input coefficient");
    }
    const int r = static_cast<int>(coeffs.size()) - 1;
    return tabulate(AffineForm(RegisterShape(static_cast<int>(n), r), std::move(coeffs)));
  }
  if (!doc.contains("outputs") || !doc.contains("arity")) {
    throw ParseError("function document needs 'arity' and 'outputs', or 'affine'");
  }
  const long long r = as_int(doc.at("arity"), "arity");
  if (r < 1 || r > 64) {
    throw ParseError("arity must be at least 1, got " + std::to_string(r));
  }
  const RegisterShape shape(static_cast<int>(n), static_cast<int>(r));
  std::vector<int> outputs = int_list(doc.at("outputs"), "outputs");
  if (outputs.size() != shape.dim()) {
    throw ParseError("'outputs' has " + std::to_string(outputs.size()) +
                     " entries, expected " + std::to_string(shape.dim()));
  }
  return MvFunction(shape, std::move(outputs));
}

nlohmann::json function_to_json(const MvFunction& f) {
  return {{"radix", f.radix()}, {"arity", f.arity()}, {"outputs", f.outputs()}};
}

nlohmann::json affine_to_json(const AffineForm& form) {
  return {{"radix", form.shape().radix()}, {"affine", form.coefficients()}};
}

AffineForm parse_affine_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("affine spec must look like 'n:A0,A1,...,Ar'");
  }
  const auto n = to_int(spec.substr(0, colon));
  if (!n || *n < 2 || *n > 1 << 16) {
    throw ParseError("affine spec radix must be an integer >= 2");
  }
  std::vector<int> coeffs;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto field = rest.substr(0, comma);
    const auto v = to_int(field);
    if (!v || *v < 0 || *v >= *n) {
      throw ParseError("affine coefficient '" + std::string(field) +
                       "' is not a digit in [0, " + std::to_string(*n) + ")");
    }
    coeffs.push_back(static_cast<int>(*v));
    if (comma == std::string_view::npos) {
      break;
    }
    rest = rest.substr(comma + 1);
  }
  if (coeffs.size() < 2) {
    throw ParseError("affine spec needs A0 and at least one input coefficient");
  }
  const int r = static_cast<int>(coeffs.size()) - 1;
  return AffineForm(RegisterShape(static_cast<int>(*n), r), std::move(coeffs));
}

}  // namespace quditsim
