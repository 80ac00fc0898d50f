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

#ifndef MCQAOA_BENCHMARK_HPP
#define MCQAOA_BENCHMARK_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcqaoa/graphs.hpp"
#include "mcqaoa/ir.hpp"
#include "mcqaoa/json_io.hpp"
#include "mcqaoa/metrics.hpp"
#include "mcqaoa/qaoa.hpp"
#include "mcqaoa/sweeps.hpp"

namespace mcqaoa {

inline constexpr int kSchemaVersion = 1;

enum class EnsembleKind : std::uint8_t { ErdosRenyi, Regular, Empty, File };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::ErdosRenyi;
  int nodes = 10;
  // Erdos-Renyi: p_edge wins when set, otherwise degree / (nodes - 1).
  double p_edge = -1.0;
  double degree = 3.0;
  int count = 30;
  std::uint64_t seed = 1;
  std::vector<std::string> files;
};

struct BenchConfig {
  EnsembleSpec ensemble;
  std::vector<VariantChoice> variants;
  int restarts = 10;
  std::uint64_t seed = 2026;
  int threads = 1;
  int max_mixer_rounds = DqvaOptions{}.max_mixer_rounds;
  std::string csv_path;
  std::string json_path;
};

// Entangling totals of a circuit's mixers under the zeroed-ancilla columns.
struct ZeroedColumn {
  std::string name;
  GateFamily family;
  AncillaCount count;
};

inline std::vector<ZeroedColumn> zeroed_columns() {
  return {{"s2_2/one", GateFamily::S2_2, AncillaCount::One},
          {"s2_2/n", GateFamily::S2_2, AncillaCount::NPerControls},
          {"s2_3/one", GateFamily::S2_3, AncillaCount::One},
          {"s2_3/n", GateFamily::S2_3, AncillaCount::NPerControls},
          {"s3_2/none", GateFamily::S3_2, AncillaCount::Zero}};
}

struct TrialRecord {
  std::string graph_id;
  std::string variant;
  int p = 1;
  int nu = 0;
  int parameter_count = 0;
  int best_size = 0;
  int optimum_size = 0;
  double ratio = 0.0;
  int rounds = 0;
  long evals = 0;
  std::uint64_t seed = 0;
  double max_infeasible = 0.0;
  bool budget_exhausted = false;
  std::vector<int> best_set;
  std::map<int, long long> mixer_histogram;
  std::map<std::string, long long> entangling;  // column name -> total
  std::string error;

  bool ok() const { return error.empty(); }
};

struct VariantSummary {
  std::string variant;
  int trials = 0;
  int failures = 0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double optimal_fraction = 0.0;
  double mean_rounds = 0.0;
  double mean_evals = 0.0;
  double mean_parameters = 0.0;
  double max_infeasible = 0.0;
  std::map<int, double> mean_mixer_histogram;
};

struct BenchResult {
  std::vector<TrialRecord> records;
  std::vector<VariantSummary> summaries;
};

inline std::vector<std::pair<std::string, Graph>> build_ensemble(const EnsembleSpec& e) {
  std::vector<std::pair<std::string, Graph>> out;
  if (e.kind == EnsembleKind::File) {
    for (const auto& f : e.files) out.emplace_back(f, graph_from_json(read_json_file(f)));
    return out;
  }
  if (e.count < 1) throw Error(ErrorCode::kInvalidArgument, "ensemble count must be >= 1");
  for (int i = 0; i < e.count; ++i) {
    const std::uint64_t s = mix_seed(e.seed, static_cast<std::uint64_t>(i));
    std::string id;
    Graph g;
    switch (e.kind) {
      case EnsembleKind::ErdosRenyi:
        g = e.p_edge >= 0 ? erdos_renyi_p(e.nodes, e.p_edge, s) : erdos_renyi(e.nodes, e.degree, s);
        id = "er";
        break;
      case EnsembleKind::Regular:
        g = random_regular(e.nodes, static_cast<int>(e.degree), s);
        id = "reg";
        break;
      case EnsembleKind::Empty:
        g = Graph(e.nodes);
        id = "empty";
        break;
      case EnsembleKind::File: break;
    }
    out.emplace_back(id + std::to_string(e.nodes) + "-" + std::to_string(i), std::move(g));
  }
  return out;
}

namespace detail {

// Zeroed-ancilla mixer costs built by the decomposer, one table per column.
struct ZeroedTables {
  std::vector<MixerCostTable> tables;

  explicit ZeroedTables(int max_deg) {
    for (const auto& col : zeroed_columns()) {
      const AncillaBudget b = col.count == AncillaCount::Zero
                                  ? AncillaBudget::none()
                                  : AncillaBudget{col.count, AncillaRegime::Zeroed};
      tables.emplace_back(CountSeries{col.family, b}, max_deg);
    }
  }
};

inline void fill_counts(TrialRecord& r, const ZeroedTables& z) {
  const auto cols = zeroed_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    long long built = 0, closed = 0;
    for (const auto& [l, n] : r.mixer_histogram) {
      if (l == 0) continue;
      built += n * entangling_part(z.tables[i].at(l));
      closed += n * exact_count_zeroed(l, cols[i].family, cols[i].count);
    }
    if (built != closed) {
      throw Error(ErrorCode::kVerificationFailed,
                  "count cross-check failed for " + cols[i].name + ": built " + std::to_string(built) +
                      ", closed form " + std::to_string(closed));
    }
    r.entangling[cols[i].name] = built;
  }
}

}  // namespace detail

inline TrialRecord run_trial(const Graph& g, const std::string& graph_id, int optimum, const VariantChoice& v,
                             const BenchConfig& cfg, std::uint64_t seed) {
  TrialRecord r;
  r.graph_id = graph_id;
  r.variant = v.label();
  r.p = v.p;
  r.seed = seed;
  r.optimum_size = optimum;
  VariationalOptions vopt;
  vopt.restarts = cfg.restarts;
  AnsatzSpec final_spec;
  std::uint64_t best = 0;
  if (v.variant == Variant::DQVA) {
    r.nu = v.nu.resolve(g.node_count());
    DqvaOptions dopt;
    dopt.p = v.p;
    dopt.max_mixer_rounds = cfg.max_mixer_rounds;
    dopt.variational = vopt;
    const auto d = dqva_outer_loop(g, r.nu, dopt, seed);
    for (int node : d.best_set) best |= std::uint64_t{1} << node;
    r.rounds = d.rounds;
    r.evals = d.evals;
    r.budget_exhausted = d.budget_exhausted;
    r.max_infeasible = d.max_infeasible;
    final_spec = d.last_spec;
  } else {
    std::mt19937_64 rng(seed);
    const auto spec = v.variant == Variant::SA ? make_sa_spec(g, v.p) : make_ma_spec(g, v.p);
    const auto res = optimize_ansatz(g, spec, rng, vopt);
    best = res.measured;
    r.rounds = 1;
    r.evals = res.evals;
    r.budget_exhausted = res.budget_exhausted;
    r.max_infeasible = res.max_infeasible;
    final_spec = res.spec;
  }
  if (!g.is_independent_mask(best)) throw Error(ErrorCode::kVerificationFailed, "best set is not independent");
  r.best_set = mask_to_nodes(best);
  r.best_size = static_cast<int>(r.best_set.size());
  r.parameter_count = static_cast<int>(final_spec.live_indices(g.node_count()).size());
  r.mixer_histogram = mixer_histogram(g, final_spec);
  r.ratio = optimum > 0 ? static_cast<double>(r.best_size) / optimum : 1.0;
  return r;
}

inline std::vector<VariantSummary> summarize(const std::vector<TrialRecord>& records,
                                             const std::vector<VariantChoice>& variants) {
  std::vector<VariantSummary> out;
  for (const auto& v : variants) {
    VariantSummary s;
    s.variant = v.label();
    s.min_ratio = std::numeric_limits<double>::infinity();
    s.max_ratio = -std::numeric_limits<double>::infinity();
    int ok = 0;
    for (const auto& r : records) {
      if (r.variant != s.variant) continue;
      ++s.trials;
      if (!r.ok()) {
        ++s.failures;
        continue;
      }
      ++ok;
      s.mean_ratio += r.ratio;
      s.min_ratio = std::min(s.min_ratio, r.ratio);
      s.max_ratio = std::max(s.max_ratio, r.ratio);
      s.optimal_fraction += r.best_size == r.optimum_size ? 1.0 : 0.0;
      s.mean_rounds += r.rounds;
      s.mean_evals += static_cast<double>(r.evals);
      s.mean_parameters += r.parameter_count;
      s.max_infeasible = std::max(s.max_infeasible, r.max_infeasible);
      for (const auto& [k, n] : r.mixer_histogram) s.mean_mixer_histogram[k] += static_cast<double>(n);
    }
    if (ok > 0) {
      for (double* x : {&s.mean_ratio, &s.optimal_fraction, &s.mean_rounds, &s.mean_evals, &s.mean_parameters}) {
        *x /= ok;
      }
      for (auto& [k, n] : s.mean_mixer_histogram) n /= ok;
    } else {
      s.min_ratio = s.max_ratio = 0.0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Trials run on cfg.threads workers; records come back in (graph, variant)
// order whatever the scheduling. A failing trial is recorded, not fatal.
inline BenchResult run_benchmark(const BenchConfig& cfg) {
  if (cfg.variants.empty()) throw Error(ErrorCode::kInvalidArgument, "no variants configured");
  if (cfg.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  const auto graphs = build_ensemble(cfg.ensemble);
  std::vector<int> optimum;
  int max_deg = 0;
  for (const auto& [id, g] : graphs) {
    optimum.push_back(brute_force_mis(g).size);
    max_deg = std::max(max_deg, max_degree(g));
  }
  const detail::ZeroedTables tables(max_deg);

  const std::size_t nv = cfg.variants.size();
  const std::size_t total = graphs.size() * nv;
  BenchResult out;
  out.records.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < total; t = next++) {
      const std::size_t gi = t / nv, vi = t % nv;
      const auto& [id, g] = graphs[gi];
      const std::uint64_t seed = mix_seed(mix_seed(cfg.seed, gi), vi);
      TrialRecord& r = out.records[t];
      try {
        r = run_trial(g, id, optimum[gi], cfg.variants[vi], cfg, seed);
        detail::fill_counts(r, tables);
      } catch (const std::exception& e) {
        r.graph_id = id;
        r.variant = cfg.variants[vi].label();
        r.seed = seed;
        r.optimum_size = optimum[gi];
        r.error = e.what();
      }
    }
  };
  const int nthreads = std::clamp(cfg.threads, 1, 256);
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  out.summaries = summarize(out.records, cfg.variants);
  return out;
}

// ---- configuration ----

inline VariantChoice variant_from_json(const json& j) {
  VariantChoice v;
  v.variant = parse_variant(j.at("variant").get<std::string>());
  v.p = j.value("p", 1);
  if (v.p < 1) throw Error(ErrorCode::kInvalidArgument, "p must be >= 1");
  if (j.contains("nu")) {
    v.nu = j.at("nu").is_number_integer() ? NuRule{NuRule::Kind::Fixed, j.at("nu").get<int>()}
                                          : parse_nu(j.at("nu").get<std::string>());
    if (v.nu.kind == NuRule::Kind::Fixed && v.nu.value < 1) {
      throw Error(ErrorCode::kInvalidArgument, "nu must be >= 1");
    }
  }
  return v;
}

inline BenchConfig bench_config_from_json(const json& j) {
  BenchConfig c;
  try {
    const json& e = j.at("ensemble");
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "erdos_renyi") {
      c.ensemble.kind = EnsembleKind::ErdosRenyi;
    } else if (kind == "regular") {
      c.ensemble.kind = EnsembleKind::Regular;
    } else if (kind == "empty") {
      c.ensemble.kind = EnsembleKind::Empty;
    } else if (kind == "file") {
      c.ensemble.kind = EnsembleKind::File;
      c.ensemble.files = e.at("files").get<std::vector<std::string>>();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown ensemble kind '" + kind + "'");
    }
    c.ensemble.nodes = e.value("nodes", c.ensemble.nodes);
    c.ensemble.p_edge = e.value("p_edge", c.ensemble.p_edge);
    c.ensemble.degree = e.value("degree", c.ensemble.degree);
    c.ensemble.count = e.value("count", c.ensemble.count);
    c.ensemble.seed = e.value("seed", c.ensemble.seed);
    for (const auto& v : j.at("variants")) c.variants.push_back(variant_from_json(v));
    c.restarts = j.value("restarts", c.restarts);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    c.max_mixer_rounds = j.value("max_mixer_rounds", c.max_mixer_rounds);
    if (j.contains("outputs")) {
      c.csv_path = j.at("outputs").value("csv", "");
      c.json_path = j.at("outputs").value("json", "");
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad bench config: ") + ex.what());
  }
  if (c.ensemble.nodes < 1 || c.ensemble.nodes > 26) {
    throw Error(ErrorCode::kInvalidArgument, "ensemble nodes must lie in [1, 26]");
  }
  return c;
}

// 30 Erdos-Renyi graphs, m = 10, edge probability 0.5, three variants.
inline BenchConfig preset_config(const std::string& name) {
  BenchConfig c;
  c.ensemble.kind = EnsembleKind::ErdosRenyi;
  c.ensemble.nodes = 10;
  c.ensemble.p_edge = 0.5;
  c.ensemble.count = 30;
  c.ensemble.seed = 7;
  if (name == "desk-fig6") {
    c.variants = {{Variant::SA, 1, {}}, {Variant::MA, 1, {}}, {Variant::DQVA, 1, {NuRule::Kind::HalfNodes, 0}}};
  } else if (name == "desk-fig7") {
    c.variants = {{Variant::DQVA, 1, {NuRule::Kind::Fixed, 3}},
                  {Variant::DQVA, 1, {NuRule::Kind::HalfNodes, 0}},
                  {Variant::DQVA, 1, {NuRule::Kind::AllNodes, 0}}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown preset '" + name + "'");
  }
  c.csv_path = name + ".csv";
  c.json_path = name + ".json";
  return c;
}

// ---- output ----

inline std::string histogram_text(const std::map<int, long long>& h) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, n] : h) {
    s << (first ? "" : ";") << k << ":" << n;
    first = false;
  }
  return s.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "graph_id,variant,p,nu,parameters,best_size,optimum,ratio,rounds,evals,seed,max_infeasible,"
        "budget_exhausted,best_set,mixer_histogram";
  for (const auto& c : zeroed_columns()) os << ",entangling_" << c.name;
  os << ",error\n";
  for (const auto& r : records) {
    std::ostringstream set;
    for (std::size_t i = 0; i < r.best_set.size(); ++i) set << (i ? " " : "") << r.best_set[i];
    os << csv_field(r.graph_id) << "," << csv_field(r.variant) << "," << r.p << "," << r.nu << ","
       << r.parameter_count << "," << r.best_size << "," << r.optimum_size << "," << r.ratio << "," << r.rounds
       << "," << r.evals << "," << r.seed << "," << r.max_infeasible << "," << (r.budget_exhausted ? 1 : 0)
       << "," << set.str() << "," << histogram_text(r.mixer_histogram);
    for (const auto& c : zeroed_columns()) {
      auto it = r.entangling.find(c.name);
      os << "," << (it == r.entangling.end() ? std::string() : std::to_string(it->second));
    }
    os << "," << csv_field(r.error) << "\n";
  }
}

inline json record_to_json(const TrialRecord& r) {
  json h = json::object();
  for (const auto& [k, n] : r.mixer_histogram) h[std::to_string(k)] = n;
  json j = {{"graph_id", r.graph_id},   {"variant", r.variant},     {"p", r.p},
            {"nu", r.nu},               {"params", r.parameter_count}, {"best_set", r.best_set},
            {"best_size", r.best_size}, {"optimum", r.optimum_size}, {"ratio", r.ratio},
            {"rounds", r.rounds},       {"evals", r.evals},          {"seed", r.seed},
            {"max_infeasible", r.max_infeasible}, {"mixer_histogram", h},
            {"entangling_histogram", r.entangling}};
  if (!r.ok()) j["error"] = r.error;
  return j;
}

inline json summaries_to_json(const std::vector<VariantSummary>& ss) {
  json out = json::array();
  for (const auto& s : ss) {
    json h = json::object();
    for (const auto& [k, n] : s.mean_mixer_histogram) h[std::to_string(k)] = n;
    out.push_back({{"variant", s.variant},
                   {"trials", s.trials},
                   {"failures", s.failures},
                   {"mean_ratio", s.mean_ratio},
                   {"min_ratio", s.min_ratio},
                   {"max_ratio", s.max_ratio},
                   {"optimal_fraction", s.optimal_fraction},
                   {"mean_rounds", s.mean_rounds},
                   {"mean_evals", s.mean_evals},
                   {"mean_parameters", s.mean_parameters},
                   {"max_infeasible", s.max_infeasible},
                   {"mean_mixer_histogram", h}});
  }
  return out;
}

inline json bench_result_to_json(const BenchResult& r) {
  json recs = json::array();
  for (const auto& t : r.records) recs.push_back(record_to_json(t));
  return {{"schema_version", kSchemaVersion}, {"summaries", summaries_to_json(r.summaries)}, {"records", recs}};
}

inline void write_summary_csv(std::ostream& os, const std::vector<VariantSummary>& ss) {
  os << "# schema_version=" << kSchemaVersion << "\n";
  os << "variant,trials,failures,mean_ratio,min_ratio,max_ratio,optimal_fraction,mean_rounds,mean_parameters\n";
  for (const auto& s : ss) {
    os << csv_field(s.variant) << "," << s.trials << "," << s.failures << "," << s.mean_ratio << ","
       << s.min_ratio << "," << s.max_ratio << "," << s.optimal_fraction << "," << s.mean_rounds << ","
       << s.mean_parameters << "\n";
  }
}

}  // namespace mcqaoa

#endif  // MCQAOA_BENCHMARK_HPP
