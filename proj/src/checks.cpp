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

#include "quditsim/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "quditsim/deutsch_jozsa.hpp"
#include "quditsim/grover.hpp"
#include "quditsim/qft.hpp"

namespace quditsim {

namespace gen {

MvFunction random_table(const RegisterShape& shape, SeededRng& rng) {
  std::vector<int> outputs(shape.dim());
  for (int& v : outputs) {
    v = static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.radix())));
  }
  return MvFunction(shape, std::move(outputs));
}

MvFunction random_balanced_table(const RegisterShape& shape, SeededRng& rng) {
  std::vector<int> outputs(shape.dim());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    outputs[i] = static_cast<int>(i % static_cast<std::size_t>(shape.radix()));
  }
  rng.shuffle(outputs);
  return MvFunction(shape, std::move(outputs));
}

CVector random_state(std::size_t dim, SeededRng& rng) {
  CVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = cplx{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  }
  const double len = norm(v);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] /= len;
  }
  return v;
}

std::vector<MvFunction> all_tables(const RegisterShape& shape) {
  const std::size_t count = checked_power(shape.radix(), static_cast<int>(shape.dim()));
  if (count == 0 || count > (std::size_t{1} << 20)) {
    throw DimensionError("too many tables to enumerate");
  }
  std::vector<MvFunction> out;
  out.reserve(count);
  std::vector<int> outputs(shape.dim(), 0);
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t rest = t;
    for (std::size_t i = shape.dim(); i-- > 0;) {
      outputs[i] = static_cast<int>(rest % static_cast<std::size_t>(shape.radix()));
      rest /= static_cast<std::size_t>(shape.radix());
    }
    out.emplace_back(shape, outputs);
  }
  return out;
}

std::vector<AffineForm> all_affine_forms(const RegisterShape& shape) {
  const RegisterShape coeff_space(shape.radix(), shape.arity() + 1);
  std::vector<AffineForm> out;
  out.reserve(coeff_space.dim());
  for (std::size_t i = 0; i < coeff_space.dim(); ++i) {
    out.emplace_back(shape, index_to_digits(coeff_space, i));
  }
  return out;
}

}  // namespace gen

namespace {

class Suite {
 public:
  void add(std::string name, double tol, const std::function<double(std::string&)>& body) {
    std::string detail;
    double dev = std::numeric_limits<double>::infinity();
    try {
      dev = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    results_.push_back({std::move(name), dev, tol, dev <= tol, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

double max_of(double a, double b) { return std::max(a, b); }

}  // namespace

FunctionTag expected_affine_tag(const AffineForm& form) {
  int g = 0;
  for (std::size_t i = 1; i < form.coefficients().size(); ++i) {
    g = std::gcd(g, form.coefficients()[i]);
  }
  if (g == 0) {
    return FunctionTag::Constant;
  }
  return std::gcd(g, form.shape().radix()) == 1 ? FunctionTag::Balanced : FunctionTag::Neither;
}

namespace {

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.radix_max < 2) {
    throw DomainError("radix_max must be at least 2");
  }
  Suite suite;

  suite.add("roots.unity_sum_vanishes", 1e-10, [](std::string& detail) {
    double worst = 0.0;
    int cases = 0;
    for (int n = 2; n <= 12; ++n) {
      for (long long alpha = -3LL * n; alpha <= 3LL * n; ++alpha) {
        if (alpha % n != 0) {
          worst = max_of(worst, std::abs(root_of_unity_sum(n, alpha)));
          ++cases;
        }
      }
    }
    detail = std::to_string(cases) + " (n, alpha) pairs, n = 2..12";
    return worst;
  });

  suite.add("qft.unitary", 1e-12, [](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 16; ++n) {
      worst = max_of(worst, unitarity_deviation(fourier_matrix(n)));
    }
    detail = "n = 2..16";
    return worst;
  });

  std::vector<QftPowerReport> powers;
  for (int n = 2; n <= options.radix_max; ++n) {
    powers.push_back(qft_power_structure(n));
  }
  const std::string power_range = "n = 2.." + std::to_string(options.radix_max);
  suite.add("qft.square_is_negation_permutation", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : powers) {
      worst = max_of(worst, p.permutation_matches ? p.square_deviation
                                                  : std::numeric_limits<double>::infinity());
    }
    detail = power_range;
    return worst;
  });
  suite.add("qft.cube_is_adjoint", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : powers) {
      worst = max_of(worst, p.cube_deviation);
    }
    detail = power_range;
    return worst;
  });
  suite.add("qft.fourth_power_identity", 1e-10, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : powers) {
      worst = max_of(worst, p.fourth_deviation);
    }
    detail = power_range;
    return worst;
  });

  suite.add("qft.factorwise_matches_kron", 1e-10, [&](std::string& detail) {
    SeededRng rng(options.seed);
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 3; ++r) {
        const RegisterShape s(n, r);
        const QuditState psi(s, gen::random_state(s.dim(), rng));
        worst = max_of(worst, max_abs_diff(apply_qft_all(psi).amplitudes(),
                                           apply_qft_all_dense(psi).amplitudes()));
      }
    }
    detail = "n = 2..5, r = 1..3, random states";
    return worst;
  });

  suite.add("affine.classification", 0.0, [](std::string& detail) {
    int mismatches = 0;
    int forms = 0;
    int neither = 0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 2; ++r) {
        for (const AffineForm& form : gen::all_affine_forms(RegisterShape(n, r))) {
          const FunctionTag want = expected_affine_tag(form);
          neither += want == FunctionTag::Neither;
          mismatches += classify(tabulate(form)).tag != want;
          ++forms;
        }
      }
    }
    detail = std::to_string(forms) + " forms, " + std::to_string(neither) +
             " with gcd(A1..Ar, n) > 1 expected Neither; deviation counts misclassified forms";
    return static_cast<double>(mismatches);
  });

  suite.add("affine.detect_recovers_form", 0.0, [](std::string& detail) {
    int mismatches = 0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 2; ++r) {
        for (const AffineForm& form : gen::all_affine_forms(RegisterShape(n, r))) {
          const auto found = detect_affine(tabulate(form));
          mismatches += !found || !(*found == form);
        }
      }
    }
    const MvFunction nonaffine(RegisterShape(3, 2), {0, 2, 1, 1, 0, 2, 2, 0, 1});
    mismatches += detect_affine(nonaffine).has_value();
    detail = "exhaustive n = 2..5, r = 1..2, plus a known non-affine table";
    return static_cast<double>(mismatches);
  });

  suite.add("dj.reads_affine_coefficients", 1e-9, [](std::string& detail) {
    double worst = 0.0;
    int forms = 0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 2; ++r) {
        const RegisterShape s(n, r);
        for (const AffineForm& form : gen::all_affine_forms(s)) {
          const DjOutcome out = dj_run_phase(tabulate(form));
          const std::vector<int> tail(form.coefficients().begin() + 1,
                                      form.coefficients().end());
          const cplx amp = out.final_state[digits_to_index(s, tail)];
          worst = max_of(worst, std::abs(1.0 - std::norm(amp)));
          worst = max_of(worst, std::abs(amp - omega_power(n, -form.constant_term())));
          ++forms;
        }
      }
    }
    detail = std::to_string(forms) + " affine forms";
    return worst;
  });

  suite.add("dj.balanced_zero_amplitude", 1e-10, [&](std::string& detail) {
    std::vector<MvFunction> tables;
    for (const auto& [n, r] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
      for (MvFunction& f : gen::all_tables(RegisterShape(n, r))) {
        if (classify(f).tag == FunctionTag::Balanced) {
          tables.push_back(std::move(f));
        }
      }
    }
    SeededRng rng(options.seed + 1);
    for (int i = 0; i < 100; ++i) {
      tables.push_back(gen::random_balanced_table(RegisterShape(3, 2), rng));
    }
    double worst = 0.0;
    for (const MvFunction& f : tables) {
      worst = max_of(worst, std::abs(dj_run_phase(f).final_state[0]));
    }
    detail = std::to_string(tables.size()) + " balanced tables";
    return worst;
  });

  suite.add("oracle.unitary", 1e-12, [&](std::string& detail) {
    SeededRng rng(options.seed + 2);
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 3; ++r) {
        for (int t = 0; t < 5; ++t) {
          const MvFunction f = gen::random_table(RegisterShape(n, r), rng);
          const PhaseOracle oracle = build_phase_oracle(f);
          for (const cplx& d : oracle.diagonal().data()) {
            worst = max_of(worst, std::abs(std::abs(d) - 1.0));
          }
          std::vector<std::size_t> perm = build_full_oracle(f).permutation();
          std::sort(perm.begin(), perm.end());
          for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] != i) {
              worst = std::numeric_limits<double>::infinity();
            }
          }
        }
      }
    }
    detail = "5 random tables per shape, n = 2..5, r = 1..3";
    return worst;
  });

  suite.add("oracle.full_n_fold_identity", 0.0, [&](std::string& detail) {
    SeededRng rng(options.seed + 3);
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 2; ++r) {
        const FullOracle oracle = build_full_oracle(gen::random_table(RegisterShape(n, r), rng));
        const CVector start = gen::random_state(oracle.combined_shape().dim(), rng);
        CVector v = start;
        for (int i = 0; i < n; ++i) {
          v = oracle.apply(v);
        }
        worst = max_of(worst, max_abs_diff(v, start));
      }
    }
    detail = "n applications of the permutation oracle";
    return worst;
  });

  suite.add("oracle.phase_kickback", 1e-10, [&](std::string& detail) {
    SeededRng rng(options.seed + 4);
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
      for (int r = 1; r <= 2; ++r) {
        const RegisterShape s(n, r);
        for (int t = 0; t < 50; ++t) {
          const MvFunction f = gen::random_table(s, rng);
          worst = max_of(worst, phase_kickback_equivalence(f, gen::random_state(s.dim(), rng)));
        }
      }
    }
    detail = "50 random tables per shape, n = 2..3, r = 1..2";
    return worst;
  });

  suite.add("dj.full_circuit_matches_phase_form", 1e-9, [&](std::string& detail) {
    SeededRng rng(options.seed + 5);
    double worst = 0.0;
    int count = 0;
    for (int n = 2; n <= 4; ++n) {
      for (int r = 1; r <= 2; ++r) {
        for (int t = 0; t < 9; ++t) {
          const RegisterShape s(n, r);
          const MvFunction f = t % 3 == 0   ? gen::random_table(s, rng)
                               : t % 3 == 1 ? gen::random_balanced_table(s, rng)
                                            : tabulate(AffineForm(s, index_to_digits(RegisterShape(n, r + 1), rng.below(checked_power(n, r + 1)))));
          const DjOutcome full = dj_run_full(f);
          const DjOutcome phase = dj_run_phase(f);
          worst = max_of(worst, full.y_final == n - 1 ? std::abs(1.0 - *full.y_probability)
                                                      : std::numeric_limits<double>::infinity());
          worst = max_of(worst, global_phase_deviation(full.final_state.amplitudes(),
                                                       phase.final_state.amplitudes()));
          ++count;
        }
      }
    }
    detail = std::to_string(count) + " functions, n = 2..4; y must be |n-1>";
    return worst;
  });

  suite.add("grover.diffusion_decomposition", 1e-10, [](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 3; ++r) {
        const RegisterShape s(n, r);
        worst = max_of(worst, max_abs_diff(diffusion_operator(s), diffusion_via_qft(s)));
      }
    }
    detail = "n = 2..5, r = 1..3";
    return worst;
  });

  suite.add("grover.operators_unitary", 1e-10, [](std::string& detail) {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 3; ++r) {
        const GroverProblem p(RegisterShape(n, r), 0);
        worst = max_of(worst, unitarity_deviation(diffusion_operator(p.shape())));
        worst = max_of(worst, unitarity_deviation(selective_phase_oracle(p).to_dense()));
        worst = max_of(worst, unitarity_deviation(grover_operator_dense(p)));
      }
    }
    detail = "D, U and G for n = 2..5, r = 1..3";
    return worst;
  });

  suite.add("grover.selective_phase_via_full_oracle", 1e-10, [&](std::string& detail) {
    SeededRng rng(options.seed + 6);
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= 2; ++r) {
        const RegisterShape s(n, r);
        const GroverProblem p(s, rng.below(s.dim()));
        std::vector<int> indicator(s.dim(), 0);
        indicator[p.target()] = 1;
        const MvFunction f(s, indicator);
        worst = max_of(worst, max_abs_diff(build_phase_oracle(f).diagonal(),
                                           selective_phase_oracle(p).diagonal()));
        worst = max_of(worst, phase_kickback_equivalence(f, gen::random_state(s.dim(), rng)));
      }
    }
    detail = "indicator oracle with answer register F|1>";
    return worst;
  });

  suite.add("grover.structured_matches_dense", 1e-10, [](std::string& detail) {
    double worst = 0.0;
    for (const auto& [n, r] : {std::pair{2, 4}, {3, 3}, {3, 6}, {5, 2}}) {
      const GroverProblem p(RegisterShape(n, r), 1);
      const CMatrix g = grover_operator_dense(p);
      CVector dense = uniform_state(p.shape()).amplitudes();
      CVector fast = dense;
      for (int k = 0; k < 5; ++k) {
        dense = matvec(g, dense);
        apply_grover_step(fast.data(), p);
        worst = max_of(worst, max_abs_diff(dense, fast));
      }
    }
    detail = "5 steps at N up to 3^6";
    return worst;
  });

  suite.add("grover.subspace_consistency", 1e-9, [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& [n, r] : {std::pair{3, 3}, {4, 3}, {5, 2}}) {
      const GroverProblem p(RegisterShape(n, r), 2);
      worst = max_of(worst, subspace_consistency(p, 100, options.seed + 7).max_deviation);
    }
    detail = "100 random pairs at (3,3), (4,3), (5,2)";
    return worst;
  });

  suite.add("grover.eigenvalues_closed_form", 1e-9, [](std::string& detail) {
    double worst = 0.0;
    for (const auto& [n, r] : {std::pair{2, 2}, {3, 3}, {4, 3}, {5, 2}, {3, 4}, {7, 3}}) {
      worst = max_of(worst, build_model(GroverProblem(RegisterShape(n, r), 0)).eigen_deviation);
    }
    detail = "closed-form lambda+- vs numerical eigensolve";
    return worst;
  });

  suite.add("grover.normalization_200_iterations", 1e-10, [](std::string& detail) {
    double worst = 0.0;
    for (const TraceStep& step : grover_iterate(GroverProblem(RegisterShape(3, 6), 5), 200)) {
      worst = max_of(worst, step.norm_deviation);
    }
    detail = "n = 3, r = 6";
    return worst;
  });

  suite.add("grover.binary_reduction", 1e-9, [](std::string& detail) {
    const GroverProblem p(RegisterShape(2, 10), 3);
    const double theta = 2.0 * std::asin(1.0 / std::sqrt(1024.0));
    double worst = 0.0;
    for (const TraceStep& step : grover_iterate(p, 30)) {
      const double want = std::pow(std::sin((2 * step.k + 1) * theta / 2.0), 2);
      worst = max_of(worst, std::abs(step.target_probability - want));
    }
    detail = "n = 2, r = 10, k = 0..30 against sin^2((2k+1) theta / 2)";
    return worst;
  });

  return suite.take();
}

}  // namespace quditsim
