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

#ifndef MCQAOA_EQUIVALENCE_HPP
#define MCQAOA_EQUIVALENCE_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "mcqaoa/ir.hpp"
#include "mcqaoa/simulator.hpp"

namespace mcqaoa {

// Basis index -> amplitude, zeros dropped. Decomposed circuits are mostly
// permutations, so columns stay small even on wide registers.
using SparseColumn = std::map<std::uint64_t, cplx>;

inline void sparse_apply(SparseColumn& s, const Gate& g) {
  std::uint64_t mask = 0, want = 0;
  for (const auto& c : g.controls) {
    mask |= std::uint64_t{1} << c.line;
    if (c.polarity == Polarity::PositiveOn1) want |= std::uint64_t{1} << c.line;
  }
  const Mat2 u = gate_target_matrix(g);
  for (int t : g.targets) {
    const std::uint64_t tb = std::uint64_t{1} << t;
    SparseColumn next;
    for (const auto& [i, a] : s) {
      if ((i & mask) != want) {
        next[i] += a;
        continue;
      }
      const int bit = (i & tb) ? 1 : 0;
      const std::uint64_t i0 = i & ~tb, i1 = i | tb;
      const cplx to0 = u[static_cast<std::size_t>(bit)] * a;
      const cplx to1 = u[static_cast<std::size_t>(2 + bit)] * a;
      if (to0 != cplx(0)) next[i0] += to0;
      if (to1 != cplx(0)) next[i1] += to1;
    }
    for (auto it = next.begin(); it != next.end();) {
      it = std::abs(it->second) < 1e-15 ? next.erase(it) : std::next(it);
    }
    s = std::move(next);
  }
}

inline SparseColumn sparse_column(const Circuit& c, std::uint64_t input) {
  SparseColumn s{{input, cplx(1.0)}};
  for (const auto& g : c.gates()) sparse_apply(s, g);
  return s;
}

// Phase-insensitive max deviation between two sets of columns.
inline double sparse_deviation(const std::vector<SparseColumn>& a,
                               const std::vector<SparseColumn>& b) {
  cplx overlap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (const auto& [i, x] : a[k]) {
      auto it = b[k].find(i);
      if (it != b[k].end()) overlap += std::conj(it->second) * x;
    }
  }
  const cplx ph = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (const auto& [i, x] : a[k]) {
      auto it = b[k].find(i);
      dev = std::max(dev, std::abs(x - ph * (it == b[k].end() ? cplx(0) : it->second)));
    }
    for (const auto& [i, y] : b[k]) {
      if (!a[k].count(i)) dev = std::max(dev, std::abs(y));
    }
  }
  return dev;
}

// Inputs over all lines, with the listed lines pinned to zero.
inline std::vector<std::uint64_t> inputs_with_zeroed(int width, const std::vector<int>& zeroed) {
  std::uint64_t zmask = 0;
  for (int l : zeroed) zmask |= std::uint64_t{1} << l;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << width); ++i) {
    if ((i & zmask) == 0) out.push_back(i);
  }
  return out;
}

inline double deviation_on_inputs(const Circuit& actual, const Circuit& ideal,
                                  const std::vector<std::uint64_t>& inputs) {
  std::vector<SparseColumn> a, b;
  a.reserve(inputs.size());
  b.reserve(inputs.size());
  for (auto in : inputs) {
    a.push_back(sparse_column(actual, in));
    b.push_back(sparse_column(ideal, in));
  }
  return sparse_deviation(a, b);
}

inline Circuit ideal_circuit(const Gate& g, int width) {
  Circuit c(width);
  c.append(g);
  return c;
}

// Zeroed contract: ancilla lines start in |0> and must come back to |0>.
// Borrowed lines are checked in every basis state.
inline double contract_deviation(const Circuit& decomposed, const Gate& ideal) {
  std::vector<int> zeroed;
  for (const auto& a : decomposed.ancilla()) {
    if (a.regime != AncillaRegime::Borrowed) zeroed.push_back(a.line);
  }
  return deviation_on_inputs(decomposed, ideal_circuit(ideal, decomposed.width()),
                             inputs_with_zeroed(decomposed.width(), zeroed));
}

// Unpaired burnable C^n(X): on basis inputs with zeroed ancillas the
// non-ancilla lines must match the ideal gate. Returns mismatch count.
inline int burnable_basis_mismatches(const Circuit& decomposed, const Gate& ideal) {
  std::uint64_t anc = 0;
  std::vector<int> lines;
  for (const auto& a : decomposed.ancilla()) {
    anc |= std::uint64_t{1} << a.line;
    lines.push_back(a.line);
  }
  const Circuit want = ideal_circuit(ideal, decomposed.width());
  int bad = 0;
  for (auto in : inputs_with_zeroed(decomposed.width(), lines)) {
    const auto got = sparse_column(decomposed, in);
    const auto exp = sparse_column(want, in);
    if (got.size() != 1 || exp.size() != 1 ||
        (got.begin()->first & ~anc) != (exp.begin()->first & ~anc) ||
        std::abs(std::abs(got.begin()->second) - 1.0) > 1e-9) {
      ++bad;
    }
  }
  return bad;
}

// Unpaired burnable gate on superposition-free ancillas: from zeroed
// ancillas every output column must hold one fixed ancilla pattern, and with
// that pattern stripped the columns must match the ideal gate up to one
// global phase. A column that entangles the ancillas counts as deviation 1.
inline double burnable_deviation(const Circuit& decomposed, const Gate& ideal) {
  std::uint64_t anc = 0;
  std::vector<int> lines;
  for (const auto& a : decomposed.ancilla()) {
    anc |= std::uint64_t{1} << a.line;
    lines.push_back(a.line);
  }
  const Circuit want = ideal_circuit(ideal, decomposed.width());
  std::vector<SparseColumn> got, exp;
  for (auto in : inputs_with_zeroed(decomposed.width(), lines)) {
    SparseColumn stripped;
    const auto col = sparse_column(decomposed, in);
    if (col.empty()) return 1.0;
    const std::uint64_t pattern = col.begin()->first & anc;
    for (const auto& [i, a] : col) {
      if ((i & anc) != pattern) return 1.0;
      stripped[i & ~anc] += a;
    }
    got.push_back(std::move(stripped));
    exp.push_back(sparse_column(want, in));
  }
  return sparse_deviation(got, exp);
}

}  // namespace mcqaoa

#endif  // MCQAOA_EQUIVALENCE_HPP
