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

#include "quditsim/deutsch_jozsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quditsim/kernels.hpp"
#include "quditsim/qft.hpp"

namespace quditsim {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Snaps arg(z) to the nearest multiple of 2 pi / n.
int phase_exponent(cplx z, int n) {
  const double turns = std::arg(z) / (2.0 * std::numbers::pi) * n;
  return mod(std::llround(turns), n);
}

DjOutcome decide_from_state(QuditState state) {
  const RegisterShape& s = state.shape();
  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const double p = std::norm(state[i]);
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }
  DjOutcome out{std::move(state), DjDecision::BalancedOrNonAffine, {}, {}, {}, {}, {}, {}};
  if (best_p > kCertainMass) {
    const int c = phase_exponent(out.final_state[best], s.radix());
    out.phase_constant = c;
    out.constant_term = mod(-c, s.radix());
    if (best == 0) {
      out.decision = DjDecision::Constant;
    } else {
      out.decision = DjDecision::BalancedAffine;
      out.coefficients = index_to_digits(s, best);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(DjDecision d) {
  switch (d) {
    case DjDecision::Constant:
      return "Constant";
    case DjDecision::BalancedAffine:
      return "BalancedAffine";
    case DjDecision::BalancedOrNonAffine:
      return "BalancedOrNonAffine";
  }
  return "BalancedOrNonAffine";
}

std::string_view to_string(DjVerdict v) {
  switch (v) {
    case DjVerdict::Constant:
      return "Constant";
    case DjVerdict::BalancedAffine:
      return "BalancedAffine";
    case DjVerdict::BalancedNonAffine:
      return "BalancedNonAffine";
  }
  return "BalancedNonAffine";
}

DjOutcome dj_run_phase(const MvFunction& f) {
  const RegisterShape& s = f.shape();
  CVector amps(s.dim());
  amps[0] = 1.0;
  apply_qft_all_inplace(amps.data(), s);
  build_phase_oracle(f).apply_inplace(amps.data());
  apply_qft_all_inplace(amps.data(), s);
  return decide_from_state(QuditState(s, std::move(amps)));
}

DjOutcome dj_run_full(const MvFunction& f) {
  const RegisterShape& s = f.shape();
  const FullOracle oracle = build_full_oracle(f);
  const RegisterShape& combined = oracle.combined_shape();
  const auto n = static_cast<std::size_t>(s.radix());

  CVector amps(combined.dim());
  amps[1] = 1.0;  // |0...0>|1>
  apply_qft_all_inplace(amps.data(), combined);
  amps = oracle.apply(amps);
  apply_qft_all_inplace(amps.data(), combined);

  std::vector<double> y_marginal(n, 0.0);
  for (std::size_t i = 0; i < amps.dim(); ++i) {
    y_marginal[i % n] += std::norm(amps[i]);
  }
  const auto y_best = static_cast<std::size_t>(
      std::max_element(y_marginal.begin(), y_marginal.end()) - y_marginal.begin());

  CVector x_part(s.dim());
  for (std::size_t x = 0; x < s.dim(); ++x) {
    x_part[x] = amps[x * n + y_best];
  }
  const double scale = 1.0 / std::sqrt(y_marginal[y_best]);
  for (std::size_t x = 0; x < s.dim(); ++x) {
    x_part[x] *= scale;
  }

  DjOutcome out = decide_from_state(QuditState(s, std::move(x_part)));
  out.y_final = static_cast<int>(y_best);
  out.y_probability = y_marginal[y_best];
  out.combined_state = std::move(amps);
  return out;
}

DjDecisionReport dj_decide(const MvFunction& f, int runs, std::uint64_t seed) {
  if (runs < 1) {
    throw DomainError("dj_decide needs at least one run");
  }
  if (classify(f).tag == FunctionTag::Neither) {
    throw PromiseError("function is neither constant nor balanced");
  }
  const DjOutcome outcome = dj_run_phase(f);
  std::vector<double> probs(f.shape().dim());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const cplx a = outcome.final_state[i];
    probs[i] = std::abs(a) < kZeroAmplitude ? 0.0 : std::norm(a);
  }
  const Distribution dist(f.shape(), std::move(probs));
  const std::vector<std::size_t> draws =
      sample_indices(dist, seed, static_cast<std::size_t>(runs));

  DjDecisionReport report{DjVerdict::BalancedNonAffine, runs, seed, {}, {}, {}};
  for (std::size_t idx : draws) {
    report.outcomes.push_back(index_to_digits(f.shape(), idx));
    ++report.histogram[idx];
  }
  if (report.histogram.contains(0)) {
    report.verdict = DjVerdict::Constant;
  } else if (report.histogram.size() == 1) {
    report.verdict = DjVerdict::BalancedAffine;
    report.coefficients = report.outcomes.front();
  }
  return report;
}

}  // namespace quditsim
