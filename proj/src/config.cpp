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

#include "quditsim/config.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace quditsim {

namespace {

std::size_t initial_max_dimension() {
  const char* env = std::getenv("QUDITSIM_MAX_DIM");
  if (env == nullptr) {
    return kDefaultMaxDimension;
  }
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    return kDefaultMaxDimension;
  }
  return value;
}

std::atomic<std::size_t>& guard() {
  static std::atomic<std::size_t> value{initial_max_dimension()};
  return value;
}

std::string with_position(const std::string& what, int line, int column) {
  if (line <= 0) {
    return what;
  }
  std::string out = "line " + std::to_string(line);
  if (column > 0) {
    out += ", column " + std::to_string(column);
  }
  return out + ": " + what;
}

}  // namespace

std::size_t max_dimension() { return guard().load(std::memory_order_relaxed); }

void set_max_dimension(std::size_t dim) {
  if (dim == 0) {
    throw DomainError("maximum dimension must be positive");
  }
  guard().store(dim, std::memory_order_relaxed);
}

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(with_position(what, line, column)),
      line_(line),
      column_(column) {}

}  // namespace quditsim
