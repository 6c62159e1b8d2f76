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

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "quditsim/kernels.hpp"
#include "quditsim/qudit_register.hpp"

namespace {

using quditsim::cplx;
namespace k = quditsim::kernels;

constexpr int kRadix = 3;

std::vector<cplx> buffer(int arity) {
  std::size_t dim = 1;
  for (int i = 0; i < arity; ++i) dim *= kRadix;
  quditsim::SeededRng rng(17);
  std::vector<cplx> v(dim);
  for (cplx& c : v) c = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  return v;
}

std::vector<cplx> fourier_block() {
  std::vector<cplx> u(kRadix * kRadix);
  const double scale = 1.0 / std::sqrt(static_cast<double>(kRadix));
  for (int j = 0; j < kRadix; ++j) {
    for (int m = 0; m < kRadix; ++m) {
      u[j * kRadix + m] = std::polar(scale, 2.0 * std::numbers::pi * j * m / kRadix);
    }
  }
  return u;
}

template <bool Parallel>
void BM_DigitTransform(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  auto v = buffer(arity);
  const auto u = fourier_block();
  for (auto _ : state) {
    for (int d = 0; d < arity; ++d) {
      if constexpr (Parallel) {
        k::parallel::apply_digit_transform(v, {kRadix, arity}, d, u);
      } else {
        k::serial::apply_digit_transform(v, {kRadix, arity}, d, u);
      }
    }
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()) * arity);
}

template <bool Parallel>
void BM_ReflectAboutMean(benchmark::State& state) {
  auto v = buffer(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::parallel::reflect_about_mean(v, cplx{-1.0, 0.0});
    } else {
      k::serial::reflect_about_mean(v, cplx{-1.0, 0.0});
    }
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}

template <bool Parallel>
void BM_NormSq(benchmark::State& state) {
  const auto v = buffer(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::parallel::norm_sq(v) : k::serial::norm_sq(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}

template <bool Parallel>
void BM_Sum(benchmark::State& state) {
  const auto v = buffer(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::parallel::sum(v) : k::serial::sum(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}

}  // namespace

BENCHMARK(BM_DigitTransform<false>)->Name("digit_transform/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_DigitTransform<true>)->Name("digit_transform/parallel")->DenseRange(8, 14, 2);
BENCHMARK(BM_ReflectAboutMean<false>)->Name("reflect_about_mean/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_ReflectAboutMean<true>)->Name("reflect_about_mean/parallel")->DenseRange(8, 14, 2);
BENCHMARK(BM_NormSq<false>)->Name("norm_sq/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_NormSq<true>)->Name("norm_sq/parallel")->DenseRange(8, 14, 2);
BENCHMARK(BM_Sum<false>)->Name("sum/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_Sum<true>)->Name("sum/parallel")->DenseRange(8, 14, 2);

BENCHMARK_MAIN();
