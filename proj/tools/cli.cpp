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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "quditsim/checks.hpp"
#include "quditsim/deutsch_jozsa.hpp"
#include "quditsim/grover.hpp"
#include "quditsim/kernels.hpp"
#include "quditsim/qft.hpp"
#include "quditsim/report.hpp"

namespace quditsim::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionSource {
  std::string chart;
  std::string function;
  std::string affine;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  std::ostringstream discarded;

  std::ostream& note() { return quiet ? discarded : err; }
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw UsageError("cannot open '" + path + "'");
  }
  buf << file.rdbuf();
  return buf.str();
}

MvFunction load_function(const FunctionSource& src, std::istream& in) {
  const int given = !src.chart.empty() + !src.function.empty() + !src.affine.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --chart, --function, --affine");
  }
  if (!src.chart.empty()) {
    return parse_chart(read_source(src.chart, in));
  }
  if (!src.affine.empty()) {
    return tabulate(parse_affine_spec(src.affine));
  }
  json doc;
  try {
    doc = json::parse(read_source(src.function, in));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("function JSON: ") + e.what());
  }
  return function_from_json(doc);
}

json source_parameters(const FunctionSource& src) {
  json p = json::object();
  if (!src.chart.empty()) p["chart"] = src.chart;
  if (!src.function.empty()) p["function"] = src.function;
  if (!src.affine.empty()) p["affine"] = src.affine;
  return p;
}

json digits_json(const Digits& d) { return json(d); }

json probabilities_json(const QuditState& state) {
  json out = json::array();
  for (const cplx& z : state.amplitudes().data()) {
    out.push_back(std::abs(z) < kZeroAmplitude ? 0.0 : std::norm(z));
  }
  return out;
}

json class_json(const FunctionClass& cls) {
  return {{"tag", std::string(to_string(cls.tag))}, {"histogram", cls.histogram}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("'" + item + "' is not an integer in list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

// ---- dj -------------------------------------------------------------------

struct DjArgs {
  FunctionSource source;
  bool full = false;
  std::optional<int> runs;
  std::uint64_t seed = 1;
};

RunReport cmd_dj(const DjArgs& a, Streams& io) {
  const MvFunction f = load_function(a.source, io.in);
  const FunctionClass cls = classify(f);
  if (cls.tag == FunctionTag::Neither) {
    throw PromiseError("function is neither constant nor balanced");
  }
  const DjOutcome outcome = a.full ? dj_run_full(f) : dj_run_phase(f);

  RunReport report;
  report.subcommand = "dj";
  report.parameters = source_parameters(a.source);
  report.parameters["circuit"] = a.full ? "full" : "phase";
  if (a.runs) {
    report.parameters["runs"] = *a.runs;
    report.seed = a.seed;
  }

  json& p = report.payload;
  p["function"] = function_to_json(f);
  p["class"] = class_json(cls);
  p["amplitudes"] = amplitudes_to_json(outcome.final_state.amplitudes().data(), kZeroAmplitude);
  p["probabilities"] = probabilities_json(outcome.final_state);
  p["decision"] = std::string(to_string(outcome.decision));
  p["coefficients"] = outcome.coefficients ? digits_json(*outcome.coefficients) : json(nullptr);
  p["phase_constant"] = outcome.phase_constant ? json(*outcome.phase_constant) : json(nullptr);
  p["constant_term"] = outcome.constant_term ? json(*outcome.constant_term) : json(nullptr);
  if (a.full) {
    p["y_final"] = *outcome.y_final;
    p["y_probability"] = *outcome.y_probability;
  }
  if (a.runs) {
    const DjDecisionReport sampled = dj_decide(f, *a.runs, a.seed);
    json outcomes = json::array();
    for (const Digits& d : sampled.outcomes) {
      outcomes.push_back(digits_json(d));
    }
    json histogram = json::array();
    for (const auto& [index, count] : sampled.histogram) {
      histogram.push_back(
          {{"outcome", digits_json(index_to_digits(f.shape(), index))}, {"count", count}});
    }
    p["sampling"] = {{"verdict", std::string(to_string(sampled.verdict))},
                     {"outcomes", outcomes},
                     {"histogram", histogram},
                     {"coefficients", sampled.coefficients ? digits_json(*sampled.coefficients)
                                                           : json(nullptr)}};
  }

  io.note() << "dj: n=" << f.radix() << " r=" << f.arity() << " class=" << to_string(cls.tag)
            << " decision=" << to_string(outcome.decision) << "\n";
  return report;
}

// ---- grover ---------------------------------------------------------------

struct GroverArgs {
  int radix = 0;
  int arity = 0;
  std::optional<std::size_t> target;
  std::string target_digits;
  std::optional<int> iterations;
  bool scan = false;
  std::optional<int> k_max;
  std::uint64_t seed = 0;
};

json step_json(const TraceStep& s) {
  return {{"k", s.k},
          {"target_amplitude", complex_to_json(s.target_amplitude)},
          {"target_probability", s.target_probability},
          {"max_other_probability", s.max_other_probability},
          {"norm_deviation", s.norm_deviation}};
}

RunReport cmd_grover(const GroverArgs& a, Streams& io) {
  const RegisterShape shape(a.radix, a.arity);
  if (a.target && !a.target_digits.empty()) {
    throw UsageError("give at most one of --target, --target-digits");
  }
  RunReport report;
  report.subcommand = "grover";
  report.parameters = {{"radix", a.radix}, {"arity", a.arity}};

  std::size_t target = 0;
  if (a.target) {
    target = *a.target;
    report.parameters["target"] = target;
  } else if (!a.target_digits.empty()) {
    const Digits digits = parse_int_list(a.target_digits);
    if (digits.size() != static_cast<std::size_t>(a.arity)) {
      throw UsageError("--target-digits needs " + std::to_string(a.arity) + " digits");
    }
    for (int d : digits) {
      if (d < 0 || d >= a.radix) {
        throw DomainError("target digit " + std::to_string(d) + " outside [0, n)");
      }
    }
    target = digits_to_index(shape, digits);
    report.parameters["target_digits"] = digits;
  } else {
    SeededRng rng(a.seed);
    target = static_cast<std::size_t>(rng.below(shape.dim()));
    report.seed = a.seed;
  }
  const GroverProblem problem(shape, target);

  json& p = report.payload;
  p["N"] = problem.size();
  p["target"] = target;
  p["target_digits"] = index_to_digits(shape, target);

  const bool scan = a.scan || !a.iterations;
  if (a.iterations) {
    report.parameters["iterations"] = *a.iterations;
    const IterationTrace trace = grover_iterate(problem, *a.iterations);
    for (const TraceStep& s : trace) {
      io.out << step_json(s).dump() << "\n";
    }
    p["trace_rows"] = trace.size();
    p["final"] = step_json(trace.back());
  }
  if (scan) {
    report.parameters["scan"] = true;
    if (a.k_max) {
      report.parameters["k_max"] = *a.k_max;
    }
    const OptimalIterations opt = find_optimal_iterations(problem, a.k_max);
    p["scan"] = {{"k_opt", opt.k_opt},       {"p_max", opt.p_max},
                 {"k_max", opt.k_max},       {"k_global", opt.k_global},
                 {"p_global", opt.p_global}};
    io.note() << "grover: n=" << a.radix << " r=" << a.arity << " N=" << problem.size()
              << " k_opt=" << opt.k_opt << " p_max=" << opt.p_max << "\n";
  }
  if (problem.size() > 1) {
    const GroverModel model = build_model(problem);
    p["model"] = {{"lambda_plus", complex_to_json(model.lambda_plus)},
                  {"lambda_minus", complex_to_json(model.lambda_minus)},
                  {"eigen_deviation", model.eigen_deviation}};
  }
  return report;
}

// ---- radix-study ----------------------------------------------------------

struct StudyArgs {
  std::size_t n_min = 64;
  std::string radices = "2,3,4,5";
  std::optional<std::size_t> max_dim;
  std::string format = "csv";
};

RunReport cmd_radix_study(const StudyArgs& a, Streams& io, bool& emitted) {
  if (a.format != "csv" && a.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  const std::vector<int> radices = parse_int_list(a.radices);
  std::optional<ScopedMaxDimension> cap;
  if (a.max_dim) {
    cap.emplace(*a.max_dim);
  }
  const std::vector<StudyRow> rows = radix_study(a.n_min, radices);
  const std::string csv = study_csv(rows);

  RunReport report;
  report.subcommand = "radix-study";
  report.parameters = {{"nmin", a.n_min}, {"radices", radices}};
  if (a.max_dim) {
    report.parameters["max_dim"] = *a.max_dim;
  }
  json table = json::array();
  for (const StudyRow& row : rows) {
    table.push_back({{"n", row.radix},
                     {"r", row.arity},
                     {"N", row.dim},
                     {"skipped", row.skipped},
                     {"k_opt", row.k_opt ? json(*row.k_opt) : json(nullptr)},
                     {"p_max", row.p_max ? json(*row.p_max) : json(nullptr)}});
  }
  report.payload = {{"rows", table}, {"csv", csv}};
  if (a.format == "csv") {
    io.out << csv;
    emitted = true;
  }
  io.note() << "radix-study: " << rows.size() << " rows\n";
  return report;
}

// ---- verify ---------------------------------------------------------------

RunReport cmd_verify(const VerifyOptions& opts, Streams& io, bool& failed) {
  if (opts.radix_max < 2) {
    throw UsageError("--radix-max must be at least 2");
  }
  const std::vector<CheckResult> results = run_verification(opts);

  RunReport report;
  report.subcommand = "verify";
  report.parameters = {{"radix_max", opts.radix_max}};
  report.seed = opts.seed;

  json checks = json::array();
  for (const CheckResult& c : results) {
    checks.push_back({{"name", c.name},
                      {"max_deviation", c.max_deviation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed},
                      {"detail", c.detail}});
    failed = failed || !c.passed;
    io.note() << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_dev=" << c.max_deviation
              << "  tol=" << c.tolerance << "\n";
  }
  json powers = json::array();
  for (int n = 2; n <= opts.radix_max; ++n) {
    const QftPowerReport q = qft_power_structure(n);
    powers.push_back({{"radix", q.radix},
                      {"square_permutation", q.square_permutation},
                      {"permutation_matches", q.permutation_matches},
                      {"square_deviation", q.square_deviation},
                      {"cube_deviation", q.cube_deviation},
                      {"fourth_deviation", q.fourth_deviation}});
  }
  report.payload = {{"checks", checks}, {"qft_power_structure", powers}, {"all_passed", !failed}};
  if (failed) {
    report.status = ReportStatus::Error;
    report.message = "one or more checks failed";
  }
  return report;
}

// ---- classify -------------------------------------------------------------

RunReport cmd_classify(const FunctionSource& src, Streams& io) {
  const MvFunction f = load_function(src, io.in);
  const FunctionClass cls = classify(f);
  const std::optional<AffineForm> form = detect_affine(f);

  RunReport report;
  report.subcommand = "classify";
  report.parameters = source_parameters(src);
  report.payload = {{"function", function_to_json(f)},
                    {"class", class_json(cls)},
                    {"affine", form ? affine_to_json(*form) : json(nullptr)},
                    {"chart", format_chart(f)}};
  io.note() << "classify: " << to_string(cls.tag) << (form ? ", affine" : ", not affine") << "\n";
  return report;
}

void add_source_options(CLI::App* cmd, FunctionSource& src) {
  cmd->add_option("--chart", src.chart, "Marquand chart file ('-' for stdin)");
  cmd->add_option("--function", src.function, "function JSON file ('-' for stdin)");
  cmd->add_option("--affine", src.affine, "inline affine form n:A0,A1,...,Ar");
}

RunReport error_report(const std::string& subcommand, const std::string& message) {
  RunReport report;
  report.subcommand = subcommand;
  report.status = ReportStatus::Error;
  report.message = message;
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Qudit state-vector simulator for multi-valued Deutsch-Jozsa and Grover search",
               "quditsim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(QUDITSIM_VERSION));

  Streams io{in, out, err, false, {}};
  int jobs = 0;
  app.add_flag("-q,--quiet", io.quiet, "suppress the summary on stderr");
  app.add_option("-j,--jobs", jobs, "OpenMP threads for kernels and sweeps (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  DjArgs dj;
  CLI::App* dj_cmd = app.add_subcommand("dj", "run the Deutsch-Jozsa circuit on one function");
  add_source_options(dj_cmd, dj.source);
  dj_cmd->add_flag("--full", dj.full, "simulate the two-register circuit");
  dj_cmd->add_option("--runs", dj.runs, "sample this many measurements and decide");
  dj_cmd->add_option("--seed", dj.seed, "sampling seed");

  GroverArgs gr;
  CLI::App* gr_cmd = app.add_subcommand("grover", "iterate or scan the generalized Grover operator");
  gr_cmd->add_option("-n,--radix", gr.radix, "radix")->required();
  gr_cmd->add_option("-r,--arity", gr.arity, "number of qudits")->required();
  gr_cmd->add_option("--target", gr.target, "target basis index");
  gr_cmd->add_option("--target-digits", gr.target_digits, "target digits, comma separated");
  gr_cmd->add_option("--iterations", gr.iterations, "emit the trace for k = 0..K")
      ->check(CLI::NonNegativeNumber);
  gr_cmd->add_flag("--scan", gr.scan, "locate the first probability peak");
  gr_cmd->add_option("--k-max", gr.k_max, "scan bound (default ceil(3 n sqrt N))");
  gr_cmd->add_option("--seed", gr.seed, "seed used to draw the target when none is given");

  StudyArgs st;
  CLI::App* st_cmd = app.add_subcommand("radix-study", "first-peak scan across radices");
  st_cmd->add_option("--nmin", st.n_min, "smallest search-space size");
  st_cmd->add_option("--radices", st.radices, "comma-separated radices");
  st_cmd->add_option("--max-dim", st.max_dim, "dimension cap for this study");
  st_cmd->add_option("--format", st.format, "csv (default) or json");

  VerifyOptions vf;
  CLI::App* vf_cmd = app.add_subcommand("verify", "run every invariant suite");
  vf_cmd->add_option("--radix-max", vf.radix_max, "largest radix for the QFT power identities");
  vf_cmd->add_option("--seed", vf.seed, "seed for the randomized suites");

  FunctionSource cl;
  CLI::App* cl_cmd = app.add_subcommand("classify", "classify a function and test affineness");
  add_source_options(cl_cmd, cl);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string subcommand;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << QUDITSIM_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << to_json(error_report("", e.what())).dump() << "\n";
    return kExitUsage;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    subcommand = sub->get_name();
  }
  kernels::set_threads(jobs);

  try {
    bool emitted = false;
    bool failed = false;
    RunReport report;
    if (subcommand == "dj") {
      report = cmd_dj(dj, io);
    } else if (subcommand == "grover") {
      report = cmd_grover(gr, io);
      out << to_json(report).dump() << "\n";
      return kExitOk;
    } else if (subcommand == "radix-study") {
      report = cmd_radix_study(st, io, emitted);
    } else if (subcommand == "verify") {
      report = cmd_verify(vf, io, failed);
    } else {
      report = cmd_classify(cl, io);
    }
    if (!emitted) {
      out << to_json(report).dump(2) << "\n";
    }
    return failed ? kExitCheckFailed : kExitOk;
  } catch (const std::exception& e) {
    err << to_json(error_report(subcommand, e.what())).dump() << "\n";
    return kExitUsage;
  }
}

}  // namespace quditsim::cli
