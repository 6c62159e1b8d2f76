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

#include "quditsim/grover.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "quditsim/kernels.hpp"
#include "quditsim/qft.hpp"

namespace quditsim {

namespace {

// omega^{-1}
cplx omega_inv(int n) { return omega_power(n, -1); }

using Mat2 = std::array<cplx, 4>;  // row-major

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 as_mat2(const CMatrix& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

}  // namespace

GroverProblem::GroverProblem(RegisterShape shape, std::size_t target)
    : shape_(shape), target_(target) {
  if (target >= shape.dim()) {
    throw DomainError("target " + std::to_string(target) + " out of range [0, " +
                      std::to_string(shape.dim()) + ")");
  }
}

PhaseOracle selective_phase_oracle(const GroverProblem& p) {
  CVector diag(std::vector<cplx>(p.size(), cplx{1.0, 0.0}));
  diag[p.target()] = omega_inv(p.shape().radix());
  return PhaseOracle(p.shape(), std::move(diag));
}

CMatrix diffusion_operator(const RegisterShape& shape) {
  const std::size_t dim = shape.dim();
  const cplx off = (1.0 - omega_inv(shape.radix())) / static_cast<double>(dim);
  CMatrix d(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      d(j, k) = off - (j == k ? 1.0 : 0.0);
    }
  }
  return d;
}

CMatrix diffusion_via_qft(const RegisterShape& shape) {
  const std::size_t dim = shape.dim();
  const cplx phase0 = omega_inv(shape.radix());  // 1 - (1 - omega^{-1})
  CMatrix out(dim, dim);
  std::vector<cplx> column(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::fill(column.begin(), column.end(), cplx{});
    column[k] = 1.0;
    apply_qft_all_inplace(column, shape, /*inverse=*/true);
    column[0] *= phase0;
    apply_qft_all_inplace(column, shape);
    for (std::size_t j = 0; j < dim; ++j) {
      out(j, k) = -column[j];
    }
  }
  return out;
}

CMatrix grover_operator_dense(const GroverProblem& p) {
  return matmul(diffusion_operator(p.shape()), selective_phase_oracle(p).to_dense());
}

void apply_grover_step(std::span<cplx> amps, const GroverProblem& p) {
  if (amps.size() != p.size()) {
    throw DimensionError("amplitude buffer does not match the search register");
  }
  const cplx w = omega_inv(p.shape().radix());
  amps[p.target()] *= w;
  kernels::reflect_about_mean(amps, 1.0 - w);
}

IterationTrace grover_iterate(const GroverProblem& p, int k) {
  if (k < 0) {
    throw DomainError("iteration count must be non-negative");
  }
  std::vector<cplx> amps = uniform_state(p.shape()).amplitudes().entries();
  IterationTrace trace;
  trace.reserve(static_cast<std::size_t>(k) + 1);
  for (int step = 0;; ++step) {
    const cplx t = amps[p.target()];
    trace.push_back({step, t, std::norm(t),
                     kernels::max_norm_excluding(amps, p.target()),
                     std::abs(1.0 - kernels::norm_sq(amps))});
    if (step == k) {
      break;
    }
    apply_grover_step(amps, p);
  }
  return trace;
}

GroverModel build_model(const GroverProblem& p) {
  if (p.size() < 2) {
    throw DomainError("the subspace model needs N > 1");
  }
  const double n_size = static_cast<double>(p.size());
  const double sqrt_n = std::sqrt(n_size);
  const cplx w = omega_inv(p.shape().radix());
  const cplx a = 1.0 - w;

  CMatrix g{{-w, a / sqrt_n}, {w * a / sqrt_n, -w - a * a / n_size}};

  const cplx root = std::sqrt(4.0 * w / n_size + a * a / (n_size * n_size));
  const cplx centre = -w - a * a / (2.0 * n_size);
  const cplx lp = centre + a / 2.0 * root;
  const cplx lm = centre - a / 2.0 * root;

  const cplx half = -a / (2.0 * sqrt_n);
  const cplx inner_root = std::sqrt(w + a * a / (4.0 * n_size));
  const cplx x = half + inner_root;
  const cplx y = half - inner_root;

  Eigen::Matrix2cd em;
  em << g(0, 0), g(0, 1), g(1, 0), g(1, 1);
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(em, /*computeEigenvectors=*/false);
  const std::array<cplx, 2> numeric{solver.eigenvalues()(0), solver.eigenvalues()(1)};
  const double straight =
      std::max(std::abs(lp - numeric[0]), std::abs(lm - numeric[1]));
  const double crossed =
      std::max(std::abs(lp - numeric[1]), std::abs(lm - numeric[0]));

  return GroverModel{p, std::move(g), lp, lm, x, y, numeric, std::min(straight, crossed)};
}

cplx model_target_amplitude(const GroverModel& m, int k) {
  if (k < 0) {
    throw DomainError("iteration count must be non-negative");
  }
  const Mat2 g = as_mat2(m.subspace);
  Mat2 power{1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < k; ++i) {
    power = mul(g, power);
  }
  // column (0, 1): coordinates of G^k |psi>
  const cplx c_target = power[1];
  const cplx c_psi = power[3];
  return c_target + c_psi / std::sqrt(static_cast<double>(m.problem.size()));
}

cplx model_target_amplitude_spectral(const GroverModel& m, int k) {
  if (k < 0) {
    throw DomainError("iteration count must be non-negative");
  }
  const cplx det = m.y - m.x;
  const Mat2 basis{1.0, 1.0, m.x, m.y};
  const Mat2 basis_inv{m.y / det, -1.0 / det, -m.x / det, 1.0 / det};
  const Mat2 diag{std::pow(m.lambda_plus, k), 0.0, 0.0, std::pow(m.lambda_minus, k)};
  const Mat2 power = mul(mul(basis, diag), basis_inv);
  return power[1] + power[3] / std::sqrt(static_cast<double>(m.problem.size()));
}

SubspaceReport subspace_consistency(const GroverProblem& p, int trials,
                                    std::uint64_t seed) {
  const GroverModel model = build_model(p);
  const Mat2 g = as_mat2(model.subspace);
  const std::size_t dim = p.size();
  const double psi_amp = 1.0 / std::sqrt(static_cast<double>(dim));

  std::vector<std::pair<cplx, cplx>> pairs{{1.0, 0.0}, {0.0, 1.0}};
  SeededRng rng(seed);
  auto draw = [&] { return cplx{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0}; };
  for (int t = 0; t < trials; ++t) {
    const cplx a = draw();
    const cplx b = draw();
    pairs.emplace_back(a, b);
  }

  double worst = 0.0;
  std::vector<cplx> v(dim);
  for (const auto& [a, b] : pairs) {
    std::fill(v.begin(), v.end(), b * psi_amp);
    v[p.target()] += a;
    apply_grover_step(v, p);

    const cplx c_target = g[0] * a + g[1] * b;
    const cplx c_psi = g[2] * a + g[3] * b;
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx expected = c_psi * psi_amp + (j == p.target() ? c_target : 0.0);
      worst = std::max(worst, std::abs(v[j] - expected));
    }
  }
  return SubspaceReport{static_cast<int>(pairs.size()), worst};
}

cplx lowest_order_amplitude(const GroverProblem& p, int k) {
  if (k < 1) {
    throw DomainError("the lowest-order amplitude is defined for k >= 1");
  }
  const cplx w = omega_inv(p.shape().radix());
  const double sqrt_n = std::sqrt(static_cast<double>(p.size()));
  return std::pow(-w, k - 1) / sqrt_n * (static_cast<double>(k) * (1.0 - w) - w);
}

int default_k_max(const RegisterShape& shape) {
  return static_cast<int>(
      std::ceil(3.0 * shape.radix() * std::sqrt(static_cast<double>(shape.dim()))));
}

OptimalIterations find_optimal_iterations(const GroverProblem& p,
                                          std::optional<int> k_max) {
  const int limit = k_max.value_or(default_k_max(p.shape()));
  if (limit < 1) {
    throw DomainError("k_max must be at least 1");
  }
  // Descents smaller than this are treated as flat so rounding noise near a
  // peak does not end the first climb early.
  constexpr double kFlat = 1e-12;

  std::vector<cplx> amps = uniform_state(p.shape()).amplitudes().entries();
  OptimalIterations out{0, std::norm(amps[p.target()]), limit, 0, 0.0};
  out.p_global = out.p_max;
  bool climbing = true;
  for (int k = 1; k <= limit; ++k) {
    apply_grover_step(amps, p);
    const double prob = std::norm(amps[p.target()]);
    if (climbing) {
      if (prob >= out.p_max - kFlat) {
        if (prob > out.p_max) {
          out.k_opt = k;
          out.p_max = prob;
        }
      } else {
        climbing = false;
      }
    }
    if (prob > out.p_global) {
      out.p_global = prob;
      out.k_global = k;
    }
  }
  return out;
}

std::vector<StudyRow> radix_study(std::size_t n_min, const std::vector<int>& radices) {
  std::vector<StudyRow> rows(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    const int n = radices[i];
    if (n < 2) {
      throw DomainError("radix must be at least 2, got " + std::to_string(n));
    }
    int r = 1;
    std::size_t dim = static_cast<std::size_t>(n);
    while (dim < n_min) {
      const std::size_t next = checked_power(n, r + 1);
      if (next == 0) {
        dim = 0;
        break;
      }
      ++r;
      dim = next;
    }
    rows[i] = StudyRow{n, r, dim, dim == 0 || dim > max_dimension(), {}, {}};
  }

  const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    StudyRow& row = rows[i];
    if (row.skipped) {
      continue;
    }
    const GroverProblem problem(RegisterShape(row.radix, row.arity), 0);
    const OptimalIterations best = find_optimal_iterations(problem);
    row.k_opt = best.k_opt;
    row.p_max = best.p_max;
  }
  return rows;
}

std::string study_csv(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "n,r,N,k_opt,p_max\n";
  for (const StudyRow& row : rows) {
    out << row.radix << ',' << row.arity << ',' << row.dim << ',';
    if (!row.skipped && row.k_opt && row.p_max) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", *row.p_max);
      out << *row.k_opt << ',' << buf;
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace quditsim
