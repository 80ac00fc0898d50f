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

#ifndef MCQAOA_METRICS_HPP
#define MCQAOA_METRICS_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "mcqaoa/ir.hpp"

namespace mcqaoa {

enum class Workload : std::uint8_t { Rx, X };

inline const char* workload_name(Workload w) { return w == Workload::Rx ? "rx" : "x"; }

// How parity-dependent qutrit counts are reported.
enum class ParityMode : std::uint8_t { Exact, Larger };

// Entangling count of C^n(Rx) with zeroed ancillas. S3_2 ignores `count`.
inline long long exact_count_zeroed(int n, GateFamily family, AncillaCount count,
                                    ParityMode parity = ParityMode::Exact) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (family == GateFamily::S3_2) {
    const bool odd = n % 2 == 1;
    if (odd || parity == ParityMode::Larger) return 6LL * n - 4;
    return 6LL * n - 8;
  }
  if (count == AncillaCount::Zero || family == GateFamily::S2_m) {
    throw Error(ErrorCode::kUnsupported, "no zeroed-ancilla count for this column");
  }
  const bool one = count == AncillaCount::One;
  if (family == GateFamily::S2_3) {
    if (one) {
      static const long long base[] = {0, 2, 2, 4, 10};
      return n < 5 ? base[n] : 8LL * n - 24;
    }
    return n < 2 ? 2 : 2LL * n - 2;
  }
  if (one) {
    static const long long base[] = {0, 2, 6, 18, 42};
    return n < 5 ? base[n] : 16LL * n - 8;
  }
  static const long long base[] = {0, 2, 6};
  return n < 3 ? base[n] : 6LL * n;
}

// a*n + b gates of each arity, arity 1 first.
struct LinearTuple {
  std::vector<std::pair<long long, long long>> terms;

  std::vector<long long> at(int n) const {
    std::vector<long long> out;
    for (const auto& [a, b] : terms) out.push_back(a * n + b);
    return out;
  }
};

struct BurnableCount {
  // Exact cells carry a tuple; S2_m cells only a leading coefficient of
  // (m-1)-controlled NOTs per control.
  bool exact = false;
  std::vector<long long> tuple;
  double leading = 0.0;
  int gate_arity = 0;
  // Per-control slope for each arity.
  std::map<int, double> slopes;
};

namespace detail {

inline LinearTuple burnable_form(Workload w, GateFamily f, AncillaCount c, bool odd) {
  using T = LinearTuple;
  if (f == GateFamily::S3_2) {
    return T{{{10, -10}, {6, odd ? -4 : -8}}};
  }
  const bool x = w == Workload::X;
  if (f == GateFamily::S2_2) {
    switch (c) {
      case AncillaCount::Zero: return T{{{28, -24}, {28, -60}}};
      case AncillaCount::One:
        return x ? T{{{8, 8}, {8, -4}}} : T{{{16, 20}, {16, -6}}};
      case AncillaCount::NPerControls: return T{{{8, -8}, {6, -6}}};
    }
  }
  switch (c) {
    case AncillaCount::Zero: return T{{{0, 12}, {0, 6}, {14, -38}}};
    case AncillaCount::One:
      return x ? T{{{0, 0}, {0, 0}, {4, -12}}} : T{{{0, 4}, {0, 2}, {8, -24}}};
    case AncillaCount::NPerControls:
      return x ? T{{{0, 0}, {0, 0}, {1, -1}}} : T{{{0, 6}, {0, 2}, {1, -2}}};
  }
  return {};
}

}  // namespace detail

// Burnable-ancilla asymptotic counts. Empty cells fall back to the C^n(Rx)
// entry of the same row; S3_2 always uses its no-ancilla row.
inline BurnableCount asymptotic_count_burnable(int n, Workload w, const GateSetSpec& gs,
                                               AncillaCount count,
                                               ParityMode parity = ParityMode::Larger) {
  const GateFamily f = gs.family();
  if (f == GateFamily::S3_2 || count == AncillaCount::Zero) w = Workload::Rx;
  if (f == GateFamily::S2_2 && count == AncillaCount::NPerControls) w = Workload::Rx;
  BurnableCount out;
  if (f == GateFamily::S2_m) {
    const double denom = gs.m() - 2;
    double num = 0;
    switch (count) {
      case AncillaCount::Zero: num = 16; break;
      case AncillaCount::One: num = w == Workload::X ? 4 : 8; break;
      case AncillaCount::NPerControls: num = 1; break;
    }
    out.leading = num / denom;
    out.gate_arity = gs.m();
    out.slopes[gs.m()] = out.leading;
    return out;
  }
  const bool odd = parity == ParityMode::Larger || n % 2 == 1;
  const LinearTuple form = detail::burnable_form(w, f, count, odd);
  out.exact = true;
  out.tuple = form.at(n);
  out.gate_arity = static_cast<int>(form.terms.size());
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    if (form.terms[i].first != 0) out.slopes[static_cast<int>(i) + 1] = static_cast<double>(form.terms[i].first);
  }
  out.leading = static_cast<double>(form.terms.back().first);
  return out;
}

// -sum_i n_i ln F_i, natural log.
inline double gdc(const std::map<int, long long>& histogram, const std::map<int, double>& fidelities) {
  double cost = 0.0;
  for (const auto& [arity, count] : histogram) {
    if (count < 0) throw Error(ErrorCode::kInvalidArgument, "negative gate count");
    if (count == 0) continue;
    auto it = fidelities.find(arity);
    if (it == fidelities.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no fidelity for arity " + std::to_string(arity));
    }
    if (!(it->second > 0.0 && it->second <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "fidelity must lie in (0, 1]");
    }
    cost -= static_cast<double>(count) * std::log(it->second);
  }
  return cost;
}

// F_m^lhs > F_{m-1}^rhs, or the m = 3 base inequality against F1, F2.
struct ThresholdRequirement {
  int m = 3;
  int lhs_exponent = 1;
  int rhs_exponent = 2;

  std::string text() const {
    if (m == 3) return "F3 > F1^2 F2^2";
    std::string lhs = "F" + std::to_string(m);
    if (lhs_exponent != 1) lhs += "^" + std::to_string(lhs_exponent);
    return lhs + " > F" + std::to_string(m - 1) + "^" + std::to_string(rhs_exponent);
  }

  // `f` maps arity to fidelity.
  bool satisfied(const std::map<int, double>& f) const {
    if (m == 3) return f.at(3) > std::pow(f.at(1) * f.at(2), 2);
    return std::pow(f.at(m), lhs_exponent) > std::pow(f.at(m - 1), rhs_exponent);
  }
};

inline ThresholdRequirement threshold_requirement(int m) {
  if (m < 3) throw Error(ErrorCode::kInvalidArgument, "threshold_requirement needs m >= 3");
  if (m == 3) return {3, 1, 2};
  if (m == 4) return {4, 1, 2};
  return {m, m - 3, m - 2};
}

struct ThresholdChain {
  double f1 = 1.0;
  double f2 = 1.0;
  std::map<int, double> thresholds;  // m -> F_m*

  double at(int m) const { return thresholds.at(m); }
};

// Each threshold assumes the smaller gates sit exactly at theirs.
inline ThresholdChain threshold_chain(double f1, double f2, int max_m = 8) {
  if (!(f1 > 0 && f1 <= 1 && f2 > 0 && f2 <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "fidelity must lie in (0, 1]");
  }
  if (max_m < 3) throw Error(ErrorCode::kInvalidArgument, "max_m must be >= 3");
  ThresholdChain c{f1, f2, {}};
  c.thresholds[3] = std::pow(f1 * f2, 2);
  for (int m = 4; m <= max_m; ++m) {
    const auto req = threshold_requirement(m);
    c.thresholds[m] = std::pow(c.thresholds[m - 1],
                               static_cast<double>(req.rhs_exponent) / req.lhs_exponent);
  }
  return c;
}

// Per-control log-infidelity rate of the leading term.
inline double asymptotic_cost_rate(const GateSetSpec& gs, Workload w, AncillaCount count) {
  const auto c = asymptotic_count_burnable(1000, w, gs, count);
  double rate = 0.0;
  for (const auto& [arity, slope] : c.slopes) rate -= slope * std::log(gs.fidelity(arity));
  return rate;
}

inline bool gateset_dominates(const GateSetSpec& a, const GateSetSpec& b, Workload w,
                              AncillaCount count) {
  return asymptotic_cost_rate(a, w, count) < asymptotic_cost_rate(b, w, count);
}

}  // namespace mcqaoa

#endif  // MCQAOA_METRICS_HPP
