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

#ifndef MCQAOA_QAOA_HPP
#define MCQAOA_QAOA_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcqaoa/ir.hpp"
#include "mcqaoa/optimizer.hpp"
#include "mcqaoa/simulator.hpp"

namespace mcqaoa {

enum class Variant : std::uint8_t { SA, MA, DQVA };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::SA: return "sa";
    case Variant::MA: return "ma";
    case Variant::DQVA: return "dqva";
  }
  return "?";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "sa") return Variant::SA;
  if (s == "ma") return Variant::MA;
  if (s == "dqva") return Variant::DQVA;
  throw Error(ErrorCode::kInvalidArgument, "unknown variant '" + s + "'");
}

// Partial mixer as two C^l(X) with open controls expanded, per the usual
// SU(2) split. theta = 2 beta.
inline Circuit partial_mixer(const Graph& g, int node, double theta) {
  if (node < 0 || node >= g.node_count()) throw Error(ErrorCode::kIndexOutOfRange, "node out of range");
  Circuit c(g.node_count());
  const auto& nb = g.neighbors(node);
  if (nb.empty()) {
    c.append(Gate::single(SingleOp::Rx, node, theta));
    return c;
  }
  const double hp = std::numbers::pi / 2;
  for (int v : nb) c.append(Gate::single(SingleOp::X, v));
  c.append(Gate::single(SingleOp::Rz, node, hp));
  c.append(Gate::single(SingleOp::Ry, node, theta / 2));
  c.append(Gate::mcx(nb, node));
  c.append(Gate::single(SingleOp::Ry, node, -theta / 2));
  c.append(Gate::mcx(nb, node));
  c.append(Gate::single(SingleOp::Rz, node, -hp));
  for (int v : nb) c.append(Gate::single(SingleOp::X, v));
  return c;
}

// One MCRx with open controls on every neighbor.
inline Gate compact_partial_mixer(const Graph& g, int node, double theta) {
  std::vector<Control> cs;
  for (int v : g.neighbors(node)) cs.push_back({v, Polarity::NegativeOn0});
  return Gate::mcrx(std::move(cs), node, theta);
}

// exp(i gamma sum_i b_i) up to global phase.
inline Circuit phase_separator(const Graph& g, double gamma) {
  Circuit c(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) c.append(Gate::single(SingleOp::Rz, v, gamma));
  return c;
}

// Parameters are laid out per round as [gamma_k, beta_k(node 0..m-1)] for
// MA and DQVA, [gamma_k, beta_k] for SA.
struct AnsatzSpec {
  Variant variant = Variant::SA;
  int p = 1;
  std::vector<double> params;
  std::vector<std::vector<int>> permutation;  // per round, node order
  std::vector<std::vector<char>> mask;        // per round, per node; 1 = off
  std::vector<char> gamma_mask;               // per round; 1 = off
  std::vector<char> warm_start;               // per node

  std::size_t stride(int m) const {
    return variant == Variant::SA ? 2 : static_cast<std::size_t>(m) + 1;
  }
  double gamma(int round, int m) const { return params[static_cast<std::size_t>(round) * stride(m)]; }
  double beta(int round, int node, int m) const {
    const std::size_t base = static_cast<std::size_t>(round) * stride(m) + 1;
    return variant == Variant::SA ? params[base] : params[base + static_cast<std::size_t>(node)];
  }
  bool mixer_on(int round, int node) const {
    return mask.empty() || !mask[static_cast<std::size_t>(round)][static_cast<std::size_t>(node)];
  }
  bool gamma_on(int round) const {
    return gamma_mask.empty() || !gamma_mask[static_cast<std::size_t>(round)];
  }

  // Indices into params that the optimizer may move.
  std::vector<std::size_t> live_indices(int m) const {
    std::vector<std::size_t> out;
    for (int k = 0; k < p; ++k) {
      const std::size_t base = static_cast<std::size_t>(k) * stride(m);
      if (gamma_on(k)) out.push_back(base);
      if (variant == Variant::SA) {
        out.push_back(base + 1);
        continue;
      }
      for (int v = 0; v < m; ++v) {
        if (mixer_on(k, v)) out.push_back(base + 1 + static_cast<std::size_t>(v));
      }
    }
    return out;
  }
};

inline std::vector<int> identity_order(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

inline AnsatzSpec make_sa_spec(const Graph& g, int p) {
  AnsatzSpec s;
  s.variant = Variant::SA;
  s.p = p;
  s.params.assign(2 * static_cast<std::size_t>(p), 0.0);
  s.permutation.assign(static_cast<std::size_t>(p), identity_order(g.node_count()));
  s.warm_start.assign(static_cast<std::size_t>(g.node_count()), 0);
  return s;
}

inline AnsatzSpec make_ma_spec(const Graph& g, int p) {
  AnsatzSpec s = make_sa_spec(g, p);
  s.variant = Variant::MA;
  s.params.assign(static_cast<std::size_t>(p) * (static_cast<std::size_t>(g.node_count()) + 1), 0.0);
  return s;
}

// Live parameters are chosen in this order until nu are live: mixers of
// nodes that can join the warm-start set, then mixers of set members and of
// nodes blocked by exactly one member, then all other mixers, then the
// gammas. Ties follow sigma.
inline AnsatzSpec make_dqva_spec(const Graph& g, int p, int nu, const std::vector<int>& sigma,
                                 const std::vector<char>& warm_start) {
  const int m = g.node_count();
  if (nu < 1) throw Error(ErrorCode::kInvalidArgument, "nu must be >= 1");
  AnsatzSpec s = make_ma_spec(g, p);
  s.variant = Variant::DQVA;
  s.permutation.assign(static_cast<std::size_t>(p), sigma);
  s.warm_start = warm_start;
  s.mask.assign(static_cast<std::size_t>(p), std::vector<char>(static_cast<std::size_t>(m), 1));
  s.gamma_mask.assign(static_cast<std::size_t>(p), 1);

  auto in_set = [&](int v) { return warm_start[static_cast<std::size_t>(v)] != 0; };
  // 0: can join the set, 1: in the set or blocked by exactly one member
  // (a swap candidate), 2: everything else.
  auto tier = [&](int v) {
    if (in_set(v)) return 1;
    const auto& nb = g.neighbors(v);
    const auto blockers = std::count_if(nb.begin(), nb.end(), in_set);
    return blockers == 0 ? 0 : blockers == 1 ? 1 : 2;
  };
  int live = 0;
  for (int t = 0; t <= 2; ++t) {
    for (int k = 0; k < p && live < nu; ++k) {
      for (int v : sigma) {
        auto& bit = s.mask[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
        if (live < nu && bit && tier(v) == t) {
          bit = 0;
          ++live;
        }
      }
    }
  }
  for (int k = 0; k < p && live < nu; ++k) {
    s.gamma_mask[static_cast<std::size_t>(k)] = 0;
    ++live;
  }
  return s;
}

inline void check_spec(const Graph& g, const AnsatzSpec& s) {
  const int m = g.node_count();
  if (s.p < 1) throw Error(ErrorCode::kInvalidArgument, "p must be >= 1");
  if (s.params.size() != static_cast<std::size_t>(s.p) * s.stride(m)) {
    throw Error(ErrorCode::kInvalidArgument, "parameter vector has wrong length");
  }
  if (s.permutation.size() != static_cast<std::size_t>(s.p)) {
    throw Error(ErrorCode::kInvalidArgument, "one permutation per round required");
  }
  for (const auto& sigma : s.permutation) {
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_order(m)) throw Error(ErrorCode::kInvalidArgument, "sigma is not a permutation");
  }
  if (s.warm_start.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::kInvalidArgument, "warm start has wrong length");
  }
  std::vector<int> set;
  for (int v = 0; v < m; ++v) {
    if (s.warm_start[static_cast<std::size_t>(v)]) set.push_back(v);
  }
  if (!g.is_independent(set)) throw Error(ErrorCode::kInvalidArgument, "warm start is not an independent set");
}

enum class MixerForm : std::uint8_t { Compact, Expanded };

inline Circuit build_ansatz(const Graph& g, const AnsatzSpec& s, MixerForm form = MixerForm::Compact) {
  check_spec(g, s);
  const int m = g.node_count();
  Circuit c(m);
  for (int v = 0; v < m; ++v) {
    if (s.warm_start[static_cast<std::size_t>(v)]) c.append(Gate::single(SingleOp::X, v));
  }
  for (int k = 0; k < s.p; ++k) {
    for (int v : s.permutation[static_cast<std::size_t>(k)]) {
      if (!s.mixer_on(k, v)) continue;
      const double theta = 2 * s.beta(k, v, m);
      if (form == MixerForm::Compact) {
        c.append(compact_partial_mixer(g, v, theta));
      } else {
        c.append(partial_mixer(g, v, theta));
      }
    }
    if (s.gamma_on(k)) c.append(phase_separator(g, s.gamma(k, m)));
  }
  return c;
}

// Live partial mixers keyed by control count.
inline std::map<int, long long> mixer_histogram(const Graph& g, const AnsatzSpec& s) {
  std::map<int, long long> h;
  for (int k = 0; k < s.p; ++k) {
    for (int v : s.permutation[static_cast<std::size_t>(k)]) {
      if (s.mixer_on(k, v)) ++h[g.degree(v)];
    }
  }
  return h;
}

inline Statevector simulate_ansatz(const Graph& g, const AnsatzSpec& s) {
  Statevector state(g.node_count());
  state.apply(build_ansatz(g, s));
  return state;
}

// Expected Hamming weight.
inline double objective_expectation(const Statevector& state, const Graph& g) {
  if (std::abs(state.norm() - 1.0) > 1e-9) throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
  if (state.width() != g.node_count()) throw Error(ErrorCode::kInvalidArgument, "state width != node count");
  double e = 0.0;
  const auto& a = state.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    e += std::norm(a[i]) * std::popcount(static_cast<std::uint64_t>(i));
  }
  return e;
}

// Total probability on bitstrings that are not independent sets.
inline double infeasible_weight(const Statevector& state, const Graph& g) {
  double w = 0.0;
  const auto& a = state.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!g.is_independent_mask(i)) w += std::norm(a[i]);
  }
  return w;
}

// Largest feasible bitstring holding at least `min_prob`; ties go to the
// more probable one.
inline std::uint64_t measure_best(const Statevector& state, const Graph& g, double min_prob = 1e-2) {
  std::uint64_t best = 0;
  int best_w = -1;
  double best_p = -1.0;
  const auto& a = state.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double p = std::norm(a[i]);
    if (p < min_prob || !g.is_independent_mask(i)) continue;
    const int w = std::popcount(static_cast<std::uint64_t>(i));
    if (w > best_w || (w == best_w && p > best_p)) {
      best = i;
      best_w = w;
      best_p = p;
    }
  }
  return best;
}

inline std::vector<int> mask_to_nodes(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

struct VariationalOptions {
  int restarts = 10;
  OptimizeOptions optimizer;
  double min_prob = 1e-2;
};

struct VariationalResult {
  AnsatzSpec spec;
  double expectation = 0.0;
  std::uint64_t measured = 0;
  long evals = 0;
  bool budget_exhausted = false;
  double max_infeasible = 0.0;
};

// Best-of-restarts optimization of the live parameters of `spec`.
// Starting points are uniform in [0, pi).
inline VariationalResult optimize_ansatz(const Graph& g, AnsatzSpec spec, std::mt19937_64& rng,
                                         const VariationalOptions& opt = {}) {
  const int m = g.node_count();
  const auto live = spec.live_indices(m);
  std::uniform_real_distribution<double> uni(0.0, std::numbers::pi);
  VariationalResult best;
  best.expectation = -1.0;
  long evals = 0;
  bool exhausted = false;
  for (int r = 0; r < std::max(opt.restarts, 1); ++r) {
    std::vector<double> x0(live.size());
    for (auto& x : x0) x = uni(rng);
    auto objective = [&](const std::vector<double>& x) {
      for (std::size_t i = 0; i < live.size(); ++i) spec.params[live[i]] = x[i];
      return objective_expectation(simulate_ansatz(g, spec), g);
    };
    const auto res = optimize(objective, x0, opt.optimizer);
    evals += res.evals;
    exhausted = exhausted || res.budget_exhausted;
    if (res.value > best.expectation) {
      for (std::size_t i = 0; i < live.size(); ++i) spec.params[live[i]] = res.x[i];
      best.spec = spec;
      best.expectation = res.value;
    }
  }
  const Statevector state = simulate_ansatz(g, best.spec);
  best.measured = measure_best(state, g, opt.min_prob);
  best.max_infeasible = infeasible_weight(state, g);
  best.evals = evals;
  best.budget_exhausted = exhausted;
  return best;
}

struct DqvaOptions {
  int p = 1;
  int max_mixer_rounds = 10;
  // Per mixer round, how many times an equal-size unseen set may replace the
  // warm start.
  int max_sideways = 1;
  // End the outer loop after this many consecutive mixer rounds that do not
  // enlarge the best set; 0 runs every mixer round.
  int stall_patience = 0;
  VariationalOptions variational;
};

struct DqvaResult {
  std::vector<int> best_set;
  int rounds = 0;
  long evals = 0;
  bool budget_exhausted = false;
  double max_infeasible = 0.0;
  AnsatzSpec last_spec;
};

// Outer loop: every mixer round draws a fresh sigma and starts from the best
// set so far; inner rounds re-run the optimization from the last accepted set
// while it grows (or moves sideways), at most m times.
inline DqvaResult dqva_outer_loop(const Graph& g, int nu, const DqvaOptions& opt, std::uint64_t seed) {
  const int m = g.node_count();
  std::mt19937_64 rng(seed);
  std::uint64_t best = 0;
  DqvaResult out;
  int stalled = 0;
  for (int mr = 0; mr < std::max(opt.max_mixer_rounds, 1); ++mr) {
    std::vector<int> sigma = identity_order(m);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::uint64_t current = best;
    const int before = std::popcount(best);
    std::set<std::uint64_t> visited{current};
    // With every mixer live a sideways step opens no new moves.
    int sideways_left = nu < opt.p * m ? opt.max_sideways : 0;
    for (int inner = 0; inner < std::max(m, 1); ++inner) {
      std::vector<char> warm(static_cast<std::size_t>(m), 0);
      for (int v : mask_to_nodes(current)) warm[static_cast<std::size_t>(v)] = 1;
      const auto spec = make_dqva_spec(g, opt.p, nu, sigma, warm);
      const auto res = optimize_ansatz(g, spec, rng, opt.variational);
      ++out.rounds;
      out.evals += res.evals;
      out.budget_exhausted = out.budget_exhausted || res.budget_exhausted;
      out.max_infeasible = std::max(out.max_infeasible, res.max_infeasible);
      out.last_spec = res.spec;
      if (!g.is_independent_mask(res.measured)) {
        throw Error(ErrorCode::kVerificationFailed, "measured bitstring is not independent");
      }
      const int got = std::popcount(res.measured), have = std::popcount(current);
      const bool grew = got > have;
      const bool sideways = sideways_left > 0 && got == have && !visited.count(res.measured);
      if (!grew && !sideways) break;
      if (!grew) --sideways_left;
      current = res.measured;
      visited.insert(current);
      if (std::popcount(current) > std::popcount(best)) best = current;
    }
    stalled = std::popcount(best) == before ? stalled + 1 : 0;
    if (opt.stall_patience > 0 && stalled >= opt.stall_patience) break;
  }
  out.best_set = mask_to_nodes(best);
  return out;
}

}  // namespace mcqaoa

#endif  // MCQAOA_QAOA_HPP
