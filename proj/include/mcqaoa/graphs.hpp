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

#ifndef MCQAOA_GRAPHS_HPP
#define MCQAOA_GRAPHS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcqaoa/ir.hpp"

namespace mcqaoa {

// SplitMix64 step, used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Graph erdos_renyi_p(int m, double p, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one node");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (uni(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(m, edges);
}

// Edge probability d / (m - 1).
inline Graph erdos_renyi(int m, double d, std::uint64_t seed) {
  if (m > 1 && (d < 0 || d > m - 1)) throw Error(ErrorCode::kInvalidArgument, "average degree outside [0, m-1]");
  return erdos_renyi_p(m, m > 1 ? d / (m - 1) : 0.0, seed);
}

// Pairing model with rejection of self-loops and multi-edges.
inline Graph random_regular(int m, int degree, std::uint64_t seed, int max_attempts = 10000) {
  if ((static_cast<long>(m) * degree) % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "m * degree must be even");
  }
  if (m <= degree) throw Error(ErrorCode::kInvalidArgument, "need m > degree");
  std::vector<int> points;
  for (int v = 0; v < m; ++v) points.insert(points.end(), static_cast<std::size_t>(degree), v);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      int u = points[i], v = points[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && seen.emplace(u, v).second;
    }
    if (ok) return Graph(m, std::vector<std::pair<int, int>>(seen.begin(), seen.end()));
  }
  throw Error(ErrorCode::kBudgetExhausted, "random_regular: rejection limit exceeded");
}

inline Graph complete_graph(int m) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
  }
  return Graph(m, e);
}

inline Graph path_graph(int m) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < m; ++u) e.emplace_back(u, u + 1);
  return Graph(m, e);
}

inline Graph petersen_graph() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

struct MisResult {
  int size = 0;
  std::vector<int> witness;
};

namespace detail {

inline void mis_branch(const std::vector<std::uint32_t>& adj, std::uint32_t cand, std::uint32_t chosen,
                       int& best, std::uint32_t& best_set) {
  const int here = std::popcount(chosen);
  if (cand == 0) {
    if (here > best) {
      best = here;
      best_set = chosen;
    }
    return;
  }
  if (here + std::popcount(cand) <= best) return;
  // Branch on the candidate with most candidate neighbours.
  int v = -1, vdeg = -1;
  for (std::uint32_t c = cand; c; c &= c - 1) {
    const int u = std::countr_zero(c);
    const int d = std::popcount(adj[static_cast<std::size_t>(u)] & cand);
    if (d > vdeg) {
      v = u;
      vdeg = d;
    }
  }
  const std::uint32_t bit = std::uint32_t{1} << v;
  if (vdeg == 0) {
    mis_branch(adj, cand & ~bit, chosen | bit, best, best_set);
    return;
  }
  mis_branch(adj, cand & ~bit & ~adj[static_cast<std::size_t>(v)], chosen | bit, best, best_set);
  mis_branch(adj, cand & ~bit, chosen, best, best_set);
}

}  // namespace detail

inline MisResult brute_force_mis(const Graph& g) {
  const int m = g.node_count();
  if (m > 30) throw Error(ErrorCode::kInvalidArgument, "brute_force_mis supports m <= 30");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = m == 32 ? ~0U : ((std::uint32_t{1} << m) - 1);
  int best = 0;
  std::uint32_t best_set = 0;
  detail::mis_branch(adj, all, 0, best, best_set);
  MisResult r;
  r.size = best;
  for (int v = 0; v < m; ++v) {
    if ((best_set >> v) & 1U) r.witness.push_back(v);
  }
  if (!g.is_independent(r.witness)) throw Error(ErrorCode::kVerificationFailed, "MIS witness not independent");
  return r;
}

}  // namespace mcqaoa

#endif  // MCQAOA_GRAPHS_HPP
