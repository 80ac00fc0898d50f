// Copyright 2026 The mcqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "mcqaoa/benchmark.hpp"
#include "mcqaoa/decomposer.hpp"
#include "mcqaoa/graphs.hpp"
#include "mcqaoa/json_io.hpp"
#include "mcqaoa/metrics.hpp"
#include "mcqaoa/qaoa.hpp"
#include "mcqaoa/sweeps.hpp"
#include "mcqaoa/validate.hpp"
#include "mcqaoa/verify.hpp"

namespace fs = std::filesystem;
using namespace mcqaoa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kVerificationFailed: return kExitVerification;
    case ErrorCode::kBudgetExhausted: return kExitBudget;
    default: return kExitValidation;
  }
}

// Relative paths land in --out-dir, else $MCQAOA_OUT_DIR, else the cwd.
std::string g_out_dir;

fs::path output_path(const std::string& p) {
  fs::path path(p);
  if (path.is_absolute()) return path;
  if (!g_out_dir.empty()) return fs::path(g_out_dir) / path;
  if (const char* dir = std::getenv("MCQAOA_OUT_DIR"); dir != nullptr && *dir != '\0') return fs::path(dir) / path;
  return path;
}

std::ofstream open_output(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p);
  if (!os) throw Error(ErrorCode::kInvalidArgument, "cannot write " + p.string());
  return os;
}

void print_schema_header(std::ostream& os) { os << "# schema_version=" << kSchemaVersion << "\n"; }

std::string percent(double f, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << 100.0 * f;
  return s.str();
}

// "m=40..640" doubles from the lower to the upper bound; "m=40,80,100" lists.
std::vector<int> parse_sweep(const std::string& spec) {
  std::string body = spec;
  if (body.rfind("m=", 0) == 0) body = body.substr(2);
  std::vector<int> out;
  try {
    if (const auto dots = body.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(body.substr(0, dots)), hi = std::stoi(body.substr(dots + 2));
      if (lo < 1 || hi < lo) throw Error(ErrorCode::kInvalidArgument, "bad sweep range '" + spec + "'");
      for (int m = lo; m <= hi; m *= 2) out.push_back(m);
    } else {
      std::stringstream ss(body);
      for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad sweep '" + spec + "'");
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty sweep '" + spec + "'");
  for (int m : out) {
    if (m < 2) throw Error(ErrorCode::kInvalidArgument, "sweep sizes must be >= 2");
  }
  return out;
}

Workload parse_workload(const std::string& s) {
  if (s == "rx") return Workload::Rx;
  if (s == "x") return Workload::X;
  throw Error(ErrorCode::kInvalidArgument, "gate must be rx or x");
}

std::vector<VariantChoice> parse_variants(const std::vector<std::string>& names, int p, const std::string& nu) {
  std::vector<VariantChoice> out;
  for (const auto& n : names) out.push_back({parse_variant(n), p, parse_nu(nu)});
  return out;
}

// ---- decompose ----

struct DecomposeArgs {
  int controls = 1;
  std::string gateset = "s2_3";
  std::string ancilla = "none";
  std::string gate = "rx";
  double angle = std::numbers::pi / 2;
  std::string out;
  bool print = false;
};

int run_decompose(const DecomposeArgs& a) {
  if (a.controls < 0) throw Error(ErrorCode::kInvalidArgument, "controls must be >= 0");
  const GateSetSpec gs = parse_gateset(a.gateset);
  if (gs.family() == GateFamily::S3_2) throw Error(ErrorCode::kUnsupported, "s3_2 is counts only; use `count`");
  const AncillaBudget budget = parse_budget(a.ancilla);
  const auto ctl = iota_lines(0, a.controls);
  const Gate g = parse_workload(a.gate) == Workload::Rx ? Gate::mcrx(ctl, a.controls, a.angle)
                                                        : Gate::mcx(ctl, a.controls);
  const Circuit c = decompose(g, gs, budget);
  const auto hist = entangling_gate_histogram(c);
  std::cout << "gateset: " << gs.name() << "\n"
            << "ancilla: " << budget_name(budget) << "\n"
            << "width: " << c.width() << "\n"
            << "entangling: " << entangling_total(c) << "\n"
            << "histogram: " << histogram_text(hist) << "\n"
            << "single: " << single_count(c) << "\n"
            << "single_fused: " << fused_single_count(c) << "\n";
  if (!a.out.empty()) {
    const auto p = output_path(a.out);
    open_output(p) << circuit_to_json(c).dump(2) << "\n";
    std::cout << "wrote: " << p.string() << "\n";
  }
  if (a.print) std::cout << circuit_to_json(c).dump() << "\n";
  return kExitOk;
}

// ---- count ----

struct CountArgs {
  bool zeroed = false;
  bool burnable = false;
  std::string sweep;
  int n_max = 12;
  int n = 50;
  std::string gate = "rx";
  double density = 6.0;
  std::vector<std::string> variants{"dqva"};
  int p = 1;
  std::string nu = "m/2";
  int graphs = 5;
  std::uint64_t seed = 1;
};

int count_zeroed(const CountArgs& a) {
  if (a.n_max < 1) throw Error(ErrorCode::kInvalidArgument, "n-max must be >= 1");
  print_schema_header(std::cout);
  std::cout << "n,gateset,budget,closed_form,built\n";
  for (int n = 1; n <= a.n_max; ++n) {
    for (const auto& col : zeroed_columns()) {
      const long long closed = exact_count_zeroed(n, col.family, col.count);
      std::string built;
      if (col.family != GateFamily::S3_2) {
        const GateSetSpec gs(col.family, col.family == GateFamily::S2_3 ? 3 : 2);
        built = std::to_string(
            entangling_total(decompose(Gate::mcrx(iota_lines(0, n), n, 0.7), gs, {col.count, AncillaRegime::Zeroed})));
      }
      const auto slash = col.name.find('/');
      std::cout << n << "," << col.name.substr(0, slash) << "," << col.name.substr(slash + 1) << "," << closed
                << "," << built << "\n";
    }
  }
  return kExitOk;
}

std::string tuple_text(const std::vector<long long>& t) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < t.size(); ++i) s << (i ? " " : "") << t[i];
  return s.str() + ")";
}

int count_burnable(const CountArgs& a) {
  if (a.n < 3) throw Error(ErrorCode::kInvalidArgument, "n must be >= 3");
  const Workload w = parse_workload(a.gate);
  print_schema_header(std::cout);
  std::cout << "gate,gateset,budget,closed_form,built\n";
  const std::vector<GateSetSpec> sets{GateSetSpec::s2_2(), GateSetSpec::s2_3(), GateSetSpec::s3_2(),
                                      GateSetSpec::s2_m(4), GateSetSpec::s2_m(5)};
  for (const auto& gs : sets) {
    for (auto count : {AncillaCount::Zero, AncillaCount::One, AncillaCount::NPerControls}) {
      if (gs.family() == GateFamily::S3_2 && count != AncillaCount::Zero) continue;
      const AncillaBudget b = count == AncillaCount::Zero ? AncillaBudget::none()
                                                          : AncillaBudget{count, AncillaRegime::Burnable};
      const auto closed = asymptotic_count_burnable(a.n, w, gs, count);
      std::string closed_text;
      if (closed.exact) {
        closed_text = tuple_text(closed.tuple);
      } else {
        std::ostringstream s;
        s << "~" << closed.leading << "n C^" << (gs.m() - 1) << "X";
        closed_text = s.str();
      }
      std::string built;
      const bool buildable = gs.family() != GateFamily::S3_2 && !(w == Workload::X && count == AncillaCount::Zero);
      if (buildable) {
        const auto ctl = iota_lines(0, a.n);
        const Gate g = w == Workload::Rx ? Gate::mcrx(ctl, a.n, 0.7) : Gate::mcx(ctl, a.n);
        const Circuit c = decompose(g, gs, b);
        std::vector<long long> t{fused_single_count(c)};
        const auto h = entangling_gate_histogram(c);
        for (int arity = 2; arity <= gs.m(); ++arity) t.push_back(h.count(arity) ? h.at(arity) : 0);
        built = tuple_text(t);
      }
      std::cout << workload_name(w) << "," << gs.name() << "," << csv_field(budget_name(b)) << "," << csv_field(closed_text) << ","
                << csv_field(built) << "\n";
    }
  }
  return kExitOk;
}

int count_sweep_cmd(const CountArgs& a) {
  CountSweepOptions opt;
  opt.sizes = parse_sweep(a.sweep);
  opt.degree = a.density;
  opt.graphs_per_size = a.graphs;
  opt.seed = a.seed;
  opt.variants = parse_variants(a.variants, a.p, a.nu);
  if (opt.graphs_per_size < 1) throw Error(ErrorCode::kInvalidArgument, "graphs must be >= 1");
  const auto rows = count_sweep(opt);
  // Mean over the graphs of each size.
  std::map<std::tuple<std::string, std::string, int>, std::pair<double, int>> mean;
  for (const auto& r : rows) {
    auto& cell = mean[{r.variant, r.series, r.m}];
    cell.first += static_cast<double>(r.entangling);
    cell.second += 1;
  }
  print_schema_header(std::cout);
  std::cout << "variant,series,m,mean_entangling\n";
  std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>> series;
  for (const auto& [key, cell] : mean) {
    const auto& [variant, name, m] = key;
    const double v = cell.first / cell.second;
    std::cout << csv_field(variant) << "," << csv_field(name) << "," << m << "," << v << "\n";
    series[{variant, name}].first.push_back(m);
    series[{variant, name}].second.push_back(v);
  }
  for (const auto& [key, xy] : series) {
    if (xy.first.size() < 2) continue;
    const auto f = fit_line(xy.first, xy.second);
    std::cout << "# fit variant=" << key.first << " series=" << key.second << " slope=" << f.slope
              << " intercept=" << f.intercept << " r2=" << f.r2 << "\n";
  }
  return kExitOk;
}

int run_count(const CountArgs& a) {
  const int modes = (a.zeroed ? 1 : 0) + (a.burnable ? 1 : 0) + (a.sweep.empty() ? 0 : 1);
  if (modes != 1) throw Error(ErrorCode::kInvalidArgument, "choose exactly one of --zeroed, --burnable, --sweep");
  if (a.zeroed) return count_zeroed(a);
  if (a.burnable) return count_burnable(a);
  return count_sweep_cmd(a);
}

// ---- thresholds ----

struct ThresholdArgs {
  std::vector<double> f1{0.999};
  std::vector<double> f2{0.99};
  int max_m = 8;
};

int run_thresholds(const ThresholdArgs& a) {
  if (a.f1.size() != a.f2.size()) throw Error(ErrorCode::kInvalidArgument, "--f1 and --f2 need the same length");
  std::vector<ThresholdChain> chains;
  for (std::size_t i = 0; i < a.f1.size(); ++i) chains.push_back(threshold_chain(a.f1[i], a.f2[i], a.max_m));
  print_schema_header(std::cout);
  std::cout << "m,requirement";
  for (const auto& c : chains) std::cout << ",F1=" << c.f1 << " F2=" << c.f2 << " (%)";
  std::cout << "\n";
  for (int m = 3; m <= a.max_m; ++m) {
    std::cout << m << "," << threshold_requirement(m).text();
    for (const auto& c : chains) std::cout << "," << percent(c.at(m));
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- gdc ----

struct GdcArgs {
  double f1 = 1.0, f2 = 1.0, f3 = 1.0;
  std::string graph;
  int m = 100;
  double density = 6.0;
  int graphs = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> variants{"sa", "ma", "dqva"};
  int p = 1;
  std::string nu = "m/2";
  bool crossing = false;
};

int run_gdc(const GdcArgs& a) {
  std::vector<std::pair<std::string, Graph>> graphs;
  if (!a.graph.empty()) {
    graphs.emplace_back(a.graph, graph_from_json(read_json_file(a.graph)));
  } else {
    if (a.graphs < 1) throw Error(ErrorCode::kInvalidArgument, "graphs must be >= 1");
    for (int i = 0; i < a.graphs; ++i) {
      graphs.emplace_back("er" + std::to_string(a.m) + "-" + std::to_string(i),
                          erdos_renyi(a.m, a.density, mix_seed(a.seed, static_cast<std::uint64_t>(i))));
    }
  }
  const std::map<int, double> s2_2{{1, a.f1}, {2, a.f2}};
  const std::map<int, double> s2_3{{1, a.f1}, {2, a.f2}, {3, a.f3}};
  // Qutrit gates take the qubit fidelities of the same arity.
  const std::map<int, double> s3_2{{1, a.f1}, {2, a.f2}};
  for (const auto& [arity, f] : s2_3) {
    if (!(f > 0.0 && f <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "fidelity must lie in (0, 1]");
  }
  const auto variants = parse_variants(a.variants, a.p, a.nu);
  print_schema_header(std::cout);
  std::cout << "# gdc = -sum n_i ln F_i (natural log)\n";
  std::cout << "graph_id,variant,series,entangling,gdc";
  if (a.crossing) std::cout << ",crossing_f3_percent";
  std::cout << "\n";
  for (const auto& [id, g] : graphs) {
    std::vector<MixerCostTable> tables;
    for (const auto& s : default_count_series()) tables.emplace_back(s, max_degree(g));
    for (const auto& v : variants) {
      const AnsatzSpec spec = counting_spec(g, v, mix_seed(a.seed, 7));
      std::map<std::string, std::map<int, long long>> hist;
      for (const auto& t : tables) hist[t.series().name()] = ansatz_cost(g, spec, t);
      for (const auto& t : tables) {
        const auto& name = t.series().name();
        const auto& h = hist[name];
        const auto& fid = t.series().family == GateFamily::S2_3 ? s2_3
                          : t.series().family == GateFamily::S3_2 ? s3_2
                                                                  : s2_2;
        std::cout << csv_field(id) << "," << csv_field(v.label()) << "," << csv_field(name) << "," << entangling_part(h) << "," << gdc(h, fid);
        if (a.crossing) {
          // S2_3 against S2_2 at the same ancilla budget.
          std::string x;
          if (t.series().family == GateFamily::S2_3) {
            const std::string partner = CountSeries{GateFamily::S2_2, t.series().budget}.name();
            x = percent(crossing_f3(h, hist[partner], a.f1, a.f2), 3);
          }
          std::cout << "," << x;
        }
        std::cout << "\n";
      }
    }
  }
  if (a.crossing) {
    std::cout << "# leading-order crossing F3 (one ancilla, rx): "
              << percent(leading_crossing_f3(a.f1, a.f2, Workload::Rx, AncillaCount::One), 3) << "%\n";
  }
  return kExitOk;
}

// ---- qaoa ----

struct QaoaArgs {
  std::string graph;
  std::string variant = "ma";
  int p = 1;
  std::string nu = "m/2";
  int restarts = 10;
  int max_mixer_rounds = DqvaOptions{}.max_mixer_rounds;
  std::uint64_t seed = 1;
  std::string out;
};

int run_qaoa(const QaoaArgs& a) {
  const Graph g = graph_from_json(read_json_file(a.graph));
  if (g.node_count() > kMaxStateWidth) throw Error(ErrorCode::kInvalidArgument, "graph too large to simulate");
  BenchConfig cfg;
  cfg.restarts = a.restarts;
  cfg.max_mixer_rounds = a.max_mixer_rounds;
  const VariantChoice v{parse_variant(a.variant), a.p, parse_nu(a.nu)};
  if (v.p < 1) throw Error(ErrorCode::kInvalidArgument, "p must be >= 1");
  const int optimum = brute_force_mis(g).size;
  const TrialRecord r = run_trial(g, a.graph, optimum, v, cfg, a.seed);
  std::cout << "variant: " << r.variant << "\n"
            << "parameters: " << r.parameter_count << "\n"
            << "best_set: ";
  for (std::size_t i = 0; i < r.best_set.size(); ++i) std::cout << (i ? " " : "") << r.best_set[i];
  std::cout << "\n"
            << "best_size: " << r.best_size << "\n"
            << "optimum: " << r.optimum_size << "\n"
            << "ratio: " << r.ratio << "\n"
            << "rounds: " << r.rounds << "\n"
            << "mixer_histogram: " << histogram_text(r.mixer_histogram) << "\n";
  if (!a.out.empty()) {
    const auto p = output_path(a.out);
    open_output(p) << record_to_json(r).dump(2) << "\n";
    std::cout << "wrote: " << p.string() << "\n";
  }
  return r.budget_exhausted ? kExitBudget : kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string config;
  std::string preset;
  int threads = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_bench(const BenchArgs& a) {
  if (a.config.empty() == a.preset.empty()) throw Error(ErrorCode::kInvalidArgument, "give exactly one of --config, --preset");
  BenchConfig cfg = a.preset.empty() ? bench_config_from_json(read_json_file(a.config)) : preset_config(a.preset);
  if (a.threads > 0) cfg.threads = a.threads;
  if (a.seed_set) cfg.seed = a.seed;
  const BenchResult res = run_benchmark(cfg);
  if (!cfg.csv_path.empty()) {
    const auto p = output_path(cfg.csv_path);
    auto os = open_output(p);
    write_trials_csv(os, res.records);
    std::cerr << "wrote " << p.string() << "\n";
  }
  if (!cfg.json_path.empty()) {
    const auto p = output_path(cfg.json_path);
    open_output(p) << bench_result_to_json(res).dump(2) << "\n";
    std::cerr << "wrote " << p.string() << "\n";
  }
  write_summary_csv(std::cout, res.summaries);
  int failures = 0;
  for (const auto& s : res.summaries) failures += s.failures;
  if (failures > 0) std::cerr << failures << " trial(s) failed; see the error column\n";
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  int max_controls = 5;
  int angles = 3;
  std::uint64_t seed = 1;
  std::string fault;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.max_controls = a.max_controls;
  opt.angles = a.angles;
  opt.seed = a.seed;
  opt.fault = a.fault;
  const auto outcomes = run_verification(opt);
  int failed = 0;
  for (const auto& o : outcomes) {
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.scheme << " n=" << o.n << " max_dev=" << o.deviation << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << outcomes.size() - static_cast<std::size_t>(failed) << "/" << outcomes.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-controlled gate decomposition and constrained QAOA toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  DecomposeArgs da;
  auto* dec = app.add_subcommand("decompose", "Decompose C^n(Rx) or C^n(X) into a gate set");
  dec->add_option("--controls,-n", da.controls, "Number of controls")->required();
  dec->add_option("--gateset", da.gateset, "s2_2, s2_3 or s2_<m>");
  dec->add_option("--ancilla", da.ancilla, "none | one,<regime> | n,<regime>; regime zeroed|borrowed|burnable");
  dec->add_option("--gate", da.gate, "rx or x");
  dec->add_option("--angle", da.angle, "Rotation angle in radians");
  dec->add_option("--out", da.out, "Write the circuit JSON here");
  dec->add_option("--out-dir", g_out_dir, "Directory for relative output paths");
  dec->add_flag("--print", da.print, "Print the circuit JSON on stdout");
  dec->callback([&] { action = [&] { return run_decompose(da); }; });

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "Gate-count tables and graph-size sweeps");
  cnt->add_flag("--zeroed", ca.zeroed, "Exact zeroed-ancilla counts for n = 1..n-max");
  cnt->add_flag("--burnable", ca.burnable, "Burnable-ancilla tuples at one n");
  cnt->add_option("--sweep", ca.sweep, "Graph sizes, e.g. m=40..640 (doubling) or m=40,80");
  cnt->add_option("--n-max", ca.n_max, "Largest n for --zeroed");
  cnt->add_option("--n", ca.n, "Control count for --burnable");
  cnt->add_option("--gate", ca.gate, "rx or x (--burnable)");
  cnt->add_option("--density", ca.density, "Average degree d (edge probability d/(m-1))");
  cnt->add_option("--variant", ca.variants, "sa, ma, dqva (repeatable)");
  cnt->add_option("--p", ca.p, "Ansatz rounds");
  cnt->add_option("--nu", ca.nu, "DQVA live parameters: integer, m/2 or m");
  cnt->add_option("--graphs", ca.graphs, "Graphs averaged per size");
  cnt->add_option("--seed", ca.seed, "Graph seed");
  cnt->callback([&] { action = [&] { return run_count(ca); }; });

  GdcArgs ga;
  auto* gd = app.add_subcommand("gdc", "Gate decomposition cost of QAOA ansatzes");
  gd->add_option("--f1", ga.f1, "Single-qudit fidelity");
  gd->add_option("--f2", ga.f2, "Two-qudit fidelity");
  gd->add_option("--f3", ga.f3, "Toffoli fidelity");
  gd->add_option("--graph", ga.graph, "Graph JSON (otherwise random graphs)");
  gd->add_option("--m", ga.m, "Nodes of the random graphs");
  gd->add_option("--density", ga.density, "Average degree of the random graphs");
  gd->add_option("--graphs", ga.graphs, "Number of random graphs");
  gd->add_option("--seed", ga.seed, "Seed");
  gd->add_option("--variant", ga.variants, "sa, ma, dqva (repeatable)");
  gd->add_option("--p", ga.p, "Ansatz rounds");
  gd->add_option("--nu", ga.nu, "DQVA live parameters");
  gd->add_flag("--crossing", ga.crossing, "Add the F3 at which s2_3 and s2_2 cost the same");
  gd->callback([&] { action = [&] { return run_gdc(ga); }; });

  ThresholdArgs ta;
  auto* th = app.add_subcommand("thresholds", "Fidelity thresholds for larger native gates");
  th->add_option("--f1", ta.f1, "Single-qubit fidelities (comma separated)")->delimiter(',');
  th->add_option("--f2", ta.f2, "Two-qubit fidelities (comma separated)")->delimiter(',');
  th->add_option("--max-m", ta.max_m, "Largest gate size");
  th->callback([&] { action = [&] { return run_thresholds(ta); }; });

  QaoaArgs qa;
  auto* qo = app.add_subcommand("qaoa", "Optimize one ansatz on one graph");
  qo->add_option("--graph", qa.graph, "Graph JSON")->required();
  qo->add_option("--variant", qa.variant, "sa, ma or dqva");
  qo->add_option("--p", qa.p, "Ansatz rounds");
  qo->add_option("--nu", qa.nu, "DQVA live parameters: integer, m/2 or m");
  qo->add_option("--restarts", qa.restarts, "Random restarts");
  qo->add_option("--max-mixer-rounds", qa.max_mixer_rounds, "DQVA mixer rounds");
  qo->add_option("--seed", qa.seed, "Seed");
  qo->add_option("--out", qa.out, "Write the record JSON here");
  qo->add_option("--out-dir", g_out_dir, "Directory for relative output paths");
  qo->callback([&] { action = [&] { return run_qaoa(qa); }; });

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "Run a graph ensemble through several variants");
  be->add_option("--config", ba.config, "Config JSON");
  be->add_option("--preset", ba.preset, "desk-fig6 or desk-fig7");
  be->add_option("--threads", ba.threads, "Worker threads");
  be->add_option("--out-dir", g_out_dir, "Directory for relative output paths");
  auto* seed_opt = be->add_option("--seed", ba.seed, "Master seed override");
  be->callback([&] {
    ba.seed_set = seed_opt->count() > 0;
    action = [&] { return run_bench(ba); };
  });

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check every scheme against the ideal gate");
  ve->add_option("--max-controls", va.max_controls, "Largest control count (<= 6)");
  ve->add_option("--angles", va.angles, "Random angles per rotation check");
  ve->add_option("--seed", va.seed, "Seed");
  ve->add_option("--inject-fault", va.fault)->group("");
  ve->callback([&] { action = [&] { return run_verify(va); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
