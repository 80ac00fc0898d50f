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

#ifndef MCQAOA_SWEEPS_HPP
#define MCQAOA_SWEEPS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mcqaoa/decomposer.hpp"
#include "mcqaoa/graphs.hpp"
#include "mcqaoa/ir.hpp"
#include "mcqaoa/metrics.hpp"
#include "mcqaoa/qaoa.hpp"
#include "mcqaoa/validate.hpp"

namespace mcqaoa {

// A gate set paired with an ancilla budget; one line of a count plot.
struct CountSeries {
  GateFamily family = GateFamily::S2_2;
  AncillaBudget budget;

  std::string name() const {
    return GateSetSpec(family, family == GateFamily::S2_3 ? 3 : 2).name() + "/" + budget_name(budget);
  }
};

// The five lines of the graph-size plot, all with burnable ancillas.
inline std::vector<CountSeries> default_count_series() {
  const auto burn = AncillaRegime::Burnable;
  return {{GateFamily::S2_2, AncillaBudget::one(burn)},
          {GateFamily::S2_2, AncillaBudget::per_control(burn)},
          {GateFamily::S2_3, AncillaBudget::one(burn)},
          {GateFamily::S2_3, AncillaBudget::per_control(burn)},
          {GateFamily::S3_2, AncillaBudget::none()}};
}

// Per-arity cost of one partial mixer with l neighbours, indexed by l.
// Arity 1 holds single-qudit gates, adjacent runs on a line fused. Qubit sets
// are built and counted; S3_2 uses the closed forms (two-qudit exact,
// single-qudit 10l - 10).
class MixerCostTable {
 public:
  MixerCostTable() = default;

  MixerCostTable(const CountSeries& series, int max_degree) : series_(series) {
    for (int l = 0; l <= max_degree; ++l) rows_.push_back(build(l));
  }

  const CountSeries& series() const { return series_; }
  int max_degree() const { return static_cast<int>(rows_.size()) - 1; }

  const std::map<int, long long>& at(int l) const {
    if (l < 0 || l > max_degree()) throw Error(ErrorCode::kIndexOutOfRange, "degree outside cost table");
    return rows_[static_cast<std::size_t>(l)];
  }

 private:
  std::map<int, long long> build(int l) const {
    if (l == 0) return {{1, 1}};
    if (series_.family == GateFamily::S3_2) {
      return {{1, std::max(10LL * l - 10, 0LL)},
              {2, exact_count_zeroed(l, GateFamily::S3_2, AncillaCount::Zero, ParityMode::Exact)}};
    }
    const GateSetSpec gs(series_.family, series_.family == GateFamily::S2_3 ? 3 : 2);
    std::vector<int> controls(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) controls[static_cast<std::size_t>(i)] = i;
    const Circuit c = decompose(Gate::mcrx(controls, l, 0.7), gs, series_.budget);
    auto h = entangling_gate_histogram(c);
    h[1] = fused_single_count(c);
    return h;
  }

  CountSeries series_;
  std::vector<std::map<int, long long>> rows_;
};

inline long long entangling_part(const std::map<int, long long>& h) {
  long long t = 0;
  for (const auto& [arity, n] : h) {
    if (arity >= 2) t += n;
  }
  return t;
}

// How many live parameters DQVA gets on an m-node graph.
struct NuRule {
  enum class Kind : std::uint8_t { Fixed, HalfNodes, AllNodes } kind = Kind::HalfNodes;
  int value = 1;

  int resolve(int m) const {
    switch (kind) {
      case Kind::Fixed: return value;
      case Kind::HalfNodes: return (m + 1) / 2;
      case Kind::AllNodes: return m;
    }
    return value;
  }
  std::string text() const {
    switch (kind) {
      case Kind::Fixed: return std::to_string(value);
      case Kind::HalfNodes: return "m/2";
      case Kind::AllNodes: return "m";
    }
    return "?";
  }
};

// "m/2" (rounded up), "m", or a positive integer.
inline NuRule parse_nu(const std::string& s) {
  if (s == "m/2" || s == "n/2") return {NuRule::Kind::HalfNodes, 0};
  if (s == "m" || s == "n") return {NuRule::Kind::AllNodes, 0};
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw Error(ErrorCode::kInvalidArgument, "bad nu '" + s + "'");
  return {NuRule::Kind::Fixed, v};
}

struct VariantChoice {
  Variant variant = Variant::SA;
  int p = 1;
  NuRule nu;

  std::string label() const {
    std::string s = std::string(variant_name(variant)) + " p=" + std::to_string(p);
    if (variant == Variant::DQVA) s += " nu=" + nu.text();
    return s;
  }
};

// The ansatz whose gates are counted. DQVA starts from the empty set with a
// seeded sigma, as in its first optimization round.
inline AnsatzSpec counting_spec(const Graph& g, const VariantChoice& v, std::uint64_t seed) {
  switch (v.variant) {
    case Variant::SA: return make_sa_spec(g, v.p);
    case Variant::MA: return make_ma_spec(g, v.p);
    case Variant::DQVA: {
      std::vector<int> sigma = identity_order(g.node_count());
      std::mt19937_64 rng(seed);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      return make_dqva_spec(g, v.p, std::min(v.nu.resolve(g.node_count()), v.p * (g.node_count() + 1)),
                            sigma, std::vector<char>(static_cast<std::size_t>(g.node_count()), 0));
    }
  }
  return make_sa_spec(g, v.p);
}

// Whole-ansatz histogram: mixers from the table, one Rz per node for each
// live phase layer, one X per warm-start node.
inline std::map<int, long long> ansatz_cost(const Graph& g, const AnsatzSpec& spec, const MixerCostTable& table) {
  std::map<int, long long> total;
  for (const auto& [l, n] : mixer_histogram(g, spec)) {
    for (const auto& [arity, k] : table.at(l)) total[arity] += n * k;
  }
  for (int k = 0; k < spec.p; ++k) {
    if (spec.gamma_on(k)) total[1] += g.node_count();
  }
  for (char b : spec.warm_start) total[1] += b ? 1 : 0;
  return total;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.node_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

struct CountRow {
  int m = 0;
  std::uint64_t seed = 0;
  std::string variant;
  std::string series;
  std::map<int, long long> histogram;
  long long entangling = 0;
};

struct CountSweepOptions {
  std::vector<int> sizes{40, 80, 160, 320, 640};
  double degree = 6.0;
  int graphs_per_size = 5;
  std::uint64_t seed = 1;
  std::vector<VariantChoice> variants{{Variant::DQVA, 1, {}}};
  std::vector<CountSeries> series = default_count_series();
};

inline std::vector<CountRow> count_sweep(const CountSweepOptions& opt) {
  std::vector<CountRow> rows;
  for (int m : opt.sizes) {
    for (int k = 0; k < opt.graphs_per_size; ++k) {
      const std::uint64_t gseed = mix_seed(opt.seed, static_cast<std::uint64_t>(m) * 1000 + static_cast<std::uint64_t>(k));
      const Graph g = erdos_renyi(m, opt.degree, gseed);
      std::vector<MixerCostTable> tables;
      for (const auto& s : opt.series) tables.emplace_back(s, max_degree(g));
      for (const auto& v : opt.variants) {
        const AnsatzSpec spec = counting_spec(g, v, mix_seed(gseed, 7));
        for (const auto& t : tables) {
          CountRow r{m, gseed, v.label(), t.series().name(), ansatz_cost(g, spec, t), 0};
          r.entangling = entangling_part(r.histogram);
          rows.push_back(std::move(r));
        }
      }
    }
  }
  return rows;
}

// Least-squares line through (x, y) and its coefficient of determination.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

inline LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorCode::kInvalidArgument, "fit needs two or more points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

// F3 at which an S2_3 histogram and an S2_2 histogram have equal GDC.
inline double crossing_f3(const std::map<int, long long>& s2_3, const std::map<int, long long>& s2_2,
                          double f1, double f2) {
  auto small = s2_3;
  const auto it = small.find(3);
  const double n3 = it == small.end() ? 0.0 : static_cast<double>(it->second);
  if (n3 <= 0) throw Error(ErrorCode::kInvalidArgument, "no three-qubit gates to trade");
  small.erase(it);
  const std::map<int, double> fid{{1, f1}, {2, f2}};
  const double rest = gdc(s2_2, fid) - gdc(small, fid);
  return std::exp(-rest / n3);
}

// Same crossing from the per-control leading terms only.
inline double leading_crossing_f3(double f1, double f2, Workload w, AncillaCount count) {
  const auto a = asymptotic_count_burnable(1000, w, GateSetSpec::s2_3(), count);
  const double rate_b = asymptotic_cost_rate(GateSetSpec::s2_2(f1, f2), w, count);
  double rate_a_small = 0.0;
  for (const auto& [arity, slope] : a.slopes) {
    if (arity == 1) rate_a_small -= slope * std::log(f1);
    if (arity == 2) rate_a_small -= slope * std::log(f2);
  }
  return std::exp(-(rate_b - rate_a_small) / a.slopes.at(3));
}

}  // namespace mcqaoa

#endif  // MCQAOA_SWEEPS_HPP
