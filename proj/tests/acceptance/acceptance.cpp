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

// Acceptance criteria runner. Prints one PASS/FAIL line per criterion.
//
//   acceptance          run every criterion
//   acceptance 7        run criterion 7 only
//
// Exit status is 0 iff every criterion that ran passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "quditsim/checks.hpp"
#include "quditsim/deutsch_jozsa.hpp"
#include "quditsim/grover.hpp"
#include "quditsim/qft.hpp"

namespace {

using namespace quditsim;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_ms;  // 0 means no runtime limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

cplx w3(int k) { return omega_power(3, k); }

MvFunction testing_constant(const RegisterShape& s) {
  return MvFunction(s, std::vector<int>(s.dim(), s.radix() - 1));
}

MvFunction chart(const char* file) {
  std::ifstream in(std::string(QUDITSIM_DATA_DIR) + "/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_chart(buf.str());
}

Outcome example1() {
  const DjOutcome out = dj_run_phase(chart("example1.chart"));
  double dev = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    dev = std::max(dev, std::abs(out.final_state[i] - (i == 7 ? w3(2) : cplx{})));
  }
  const double p = std::norm(out.final_state[7]);
  const bool ok = dev < 1e-10 && std::abs(p - 1.0) < 1e-10 && out.coefficients == Digits{2, 1} &&
                  out.phase_constant == 2;
  return {ok, "max entry deviation from w^2|21> " + fmt("%.3g", dev) + ", coefficients (" +
                  (out.coefficients ? std::to_string((*out.coefficients)[0]) + "," +
                                          std::to_string((*out.coefficients)[1])
                                    : std::string("none")) +
                  "), C = " + (out.phase_constant ? std::to_string(*out.phase_constant) : "none")};
}

Outcome example2() {
  const DjOutcome out = dj_run_phase(chart("example2.chart"));
  const cplx t = 1.0 / 3.0;
  const std::vector<cplx> want{0.0, w3(1) * t, (1.0 + w3(2)) * t, 0.0,           t,
                               2.0 * t, 0.0,   w3(2) * t,         (1.0 + w3(1)) * t};
  double dev = 0.0;
  for (std::size_t i = 0; i < 9; ++i) dev = std::max(dev, std::abs(out.final_state[i] - want[i]));
  const double p12 = std::norm(out.final_state[5]);
  return {dev < 1e-10 && std::abs(p12 - 4.0 / 9.0) < 1e-10,
          "max deviation from printed vector " + fmt("%.3g", dev) + ", P(|12>) = " +
              fmt("%.17g", p12)};
}

Outcome affine_readout() {
  double dev = 0.0;
  int forms = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 2; ++r) {
      const RegisterShape s(n, r);
      for (const AffineForm& form : gen::all_affine_forms(s)) {
        const DjOutcome out = dj_run_phase(tabulate(form));
        const Digits tail(form.coefficients().begin() + 1, form.coefficients().end());
        const cplx amp = out.final_state[digits_to_index(s, tail)];
        dev = std::max(dev, std::abs(std::norm(amp) - 1.0));
        dev = std::max(dev, std::abs(amp - omega_power(n, -form.constant_term())));
        ++forms;
      }
    }
  }
  return {dev < 1e-9, std::to_string(forms) + " forms, max deviation " + fmt("%.3g", dev)};
}

Outcome affine_classification() {
  int forms = 0;
  int wrong = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 2; ++r) {
      for (const AffineForm& form : gen::all_affine_forms(RegisterShape(n, r))) {
        const FunctionTag want = form.is_constant() ? FunctionTag::Constant : FunctionTag::Balanced;
        const FunctionTag got = classify(tabulate(form)).tag;
        ++forms;
        if (got != want) {
          ++wrong;
          if (first.empty()) {
            std::ostringstream s;
            s << "n=" << n << " A=(";
            for (std::size_t i = 0; i < form.coefficients().size(); ++i) {
              s << (i ? "," : "") << form.coefficients()[i];
            }
            s << ") is " << to_string(got);
            first = s.str();
          }
        }
      }
    }
  }
  std::string detail = std::to_string(forms) + " forms, " + std::to_string(wrong) +
                       " not constant-or-balanced";
  if (wrong) {
    detail += "; first: " + first + " (holds iff gcd(A1..Ar, n) = 1 or all Ai = 0)";
  }
  return {wrong == 0, detail};
}

Outcome balanced_zero() {
  std::vector<MvFunction> tables;
  for (const auto& [n, r] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    for (MvFunction& f : gen::all_tables(RegisterShape(n, r))) {
      if (classify(f).tag == FunctionTag::Balanced) tables.push_back(std::move(f));
    }
  }
  const std::size_t exhaustive = tables.size();
  SeededRng rng(20240611);
  for (int i = 0; i < 100; ++i) tables.push_back(gen::random_balanced_table(RegisterShape(3, 2), rng));
  double worst = 0.0;
  for (const MvFunction& f : tables) worst = std::max(worst, std::abs(dj_run_phase(f).final_state[0]));
  return {worst < 1e-10 && exhaustive == 2 + 6 + 6,
          std::to_string(exhaustive) + " exhaustive (n=2 r=1: 2, n=2 r=2: 6, n=3 r=1: 6) + 100 "
          "random n=3 r=2; max |<0..0|psi>| " + fmt("%.3g", worst)};
}

Outcome full_circuit() {
  SeededRng rng(6);
  std::vector<MvFunction> fs;
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r <= 2; ++r) {
      const RegisterShape s(n, r);
      fs.push_back(testing_constant(s));
      for (int i = 0; i < 2; ++i) fs.push_back(gen::random_balanced_table(s, rng));
      for (int i = 0; i < 2; ++i) fs.push_back(gen::random_table(s, rng));
      fs.push_back(tabulate(AffineForm(s, index_to_digits(RegisterShape(n, r + 1),
                                                          rng.below(checked_power(n, r + 1))))));
    }
  }
  for (int n = 2; fs.size() < 50; n = n == 5 ? 2 : n + 1) {
    fs.push_back(gen::random_table(RegisterShape(n, 3), rng));
  }
  double worst = 0.0;
  bool y_ok = true;
  for (const MvFunction& f : fs) {
    const DjOutcome out = dj_run_full(f);
    y_ok = y_ok && out.y_final == f.radix() - 1;
    worst = std::max(worst, std::abs(*out.y_probability - 1.0));
  }
  return {y_ok && worst < 1e-9,
          std::to_string(fs.size()) + " functions, y = |n-1> in all: " + (y_ok ? "yes" : "no") +
              ", max |P(y) - 1| " + fmt("%.3g", worst)};
}

Outcome qft_powers() {
  double worst = 0.0;
  bool perm = true;
  for (int n = 2; n <= 16; ++n) {
    const QftPowerReport r = qft_power_structure(n);
    perm = perm && r.permutation_matches;
    worst = std::max({worst, r.square_deviation, r.cube_deviation, r.fourth_deviation});
  }
  return {perm && worst < 1e-10, "n = 2..16, max deviation " + fmt("%.3g", worst)};
}

Outcome unity_sums() {
  double worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    for (long long a = -3 * n; a <= 3 * n; ++a) {
      if (a % n != 0) worst = std::max(worst, std::abs(root_of_unity_sum(n, a)));
    }
  }
  return {worst < 1e-10, "n = 2..12, alpha in [-3n, 3n], max |sum| " + fmt("%.3g", worst)};
}

Outcome diffusion() {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const RegisterShape s(n, r);
      worst = std::max(worst, max_abs_diff(diffusion_operator(s), diffusion_via_qft(s)));
    }
  }
  return {worst < 1e-10, "max entry deviation " + fmt("%.3g", worst)};
}

Outcome subspace() {
  double sub = 0.0;
  double eig = 0.0;
  for (const auto& [n, r] : {std::pair{3, 3}, {4, 3}, {5, 2}}) {
    const GroverProblem p(RegisterShape(n, r), 1);
    sub = std::max(sub, subspace_consistency(p, 100, 20240611).max_deviation);
    eig = std::max(eig, build_model(p).eigen_deviation);
  }
  return {sub < 1e-9 && eig < 1e-9, "coordinate deviation " + fmt("%.3g", sub) +
                                        ", eigenvalue deviation " + fmt("%.3g", eig)};
}

Outcome lowest_order() {
  const GroverProblem small(RegisterShape(3, 8), 0);
  const GroverProblem large(RegisterShape(3, 10), 0);
  const IterationTrace ts = grover_iterate(small, 5);
  const IterationTrace tl = grover_iterate(large, 10);
  bool ok = true;
  std::ostringstream d;
  d << "relative-deviation ratio k=1..5:";
  std::ostringstream abs_ratios;
  for (int k = 1; k <= 5; ++k) {
    const cplx ss = ts[k].target_amplitude;
    const cplx sl = tl[k].target_amplitude;
    const double abs_s = std::abs(ss - lowest_order_amplitude(small, k));
    const double abs_l = std::abs(sl - lowest_order_amplitude(large, k));
    const double ratio = (abs_s / std::abs(ss)) / (abs_l / std::abs(sl));
    ok = ok && std::abs(ratio - 9.0) <= 0.3 * 9.0;
    d << " " << fmt("%.3f", ratio);
    abs_ratios << " " << fmt("%.2f", abs_s / abs_l);
  }
  d << " (absolute:" << abs_ratios.str() << ")";
  std::vector<double> approx_diffs, sim_diffs;
  for (int k = 2; k <= 10; ++k) {
    approx_diffs.push_back(std::abs(lowest_order_amplitude(large, k)) -
                           std::abs(lowest_order_amplitude(large, k - 1)));
    sim_diffs.push_back(std::abs(tl[k].target_amplitude) - std::abs(tl[k - 1].target_amplitude));
  }
  const auto spread = [](const std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x - mean) / mean);
    return s;
  };
  const double sa = spread(approx_diffs);
  const double ss = spread(sim_diffs);
  ok = ok && sa <= 0.1 && ss <= 0.1;
  d << "; linear growth k=1..10, max successive-difference variation " << fmt("%.4f", sa)
    << " (formula), " << fmt("%.4f", ss) << " (simulated)";
  return {ok, d.str()};
}

Outcome binary() {
  const GroverProblem p(RegisterShape(2, 10), 0);
  const double theta = 2.0 * std::asin(1.0 / std::sqrt(1024.0));
  double worst = 0.0;
  for (const TraceStep& s : grover_iterate(p, 30)) {
    worst = std::max(worst, std::abs(s.target_probability -
                                     std::pow(std::sin((2 * s.k + 1) * theta / 2), 2)));
  }
  const OptimalIterations opt = find_optimal_iterations(p);
  return {worst < 1e-9 && opt.k_opt == 25 && opt.p_max > 0.999,
          "max |P - sin^2| " + fmt("%.3g", worst) + ", k_opt = " + std::to_string(opt.k_opt) +
              ", p_max = " + fmt("%.6f", opt.p_max)};
}

Outcome radix_smoke() {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run_cli({"-q", "radix-study", "--nmin", "64", "--radices", "2,3,4,5"}, in,
                                out, err);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  bool ok = code == 0 && line == "n,r,N,k_opt,p_max";
  int rows = 0;
  std::ostringstream d;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 5) {
      ok = false;
      continue;
    }
    const int k = std::stoi(f[3]);
    const double p = std::stod(f[4]);
    ok = ok && k >= 1 && p > 0.0 && p <= 1.0;
    d << " (" << line << ")";
  }
  ok = ok && rows == 4;
  return {ok, std::to_string(rows) + " rows:" + d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Affine chart reproduction", 10, example1},
      {2, "Non-affine chart reproduction", 10, example2},
      {3, "Affine readout sweep", 30000, affine_readout},
      {4, "Affine classification sweep", 5000, affine_classification},
      {5, "Balanced-zero property", 0, balanced_zero},
      {6, "Full-circuit y-register", 0, full_circuit},
      {7, "QFT power identities", 5000, qft_powers},
      {8, "Root-of-unity sums", 0, unity_sums},
      {9, "Diffusion decomposition", 0, diffusion},
      {10, "Subspace model exactness", 0, subspace},
      {11, "Lowest-order amplitude law", 60000, lowest_order},
      {12, "Binary reduction", 0, binary},
      {13, "Radix study smoke", 120000, radix_smoke},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_passed = true;
  for (const Criterion& c : all) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool passed = o.passed && in_time;
    all_passed = all_passed && passed;
    std::printf("%s criterion %d: %s | %s | %.1f ms%s\n", passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), ms,
                in_time ? "" : (" (limit " + fmt("%.0f", c.limit_ms) + " ms exceeded)").c_str());
  }
  return all_passed ? 0 : 1;
}
