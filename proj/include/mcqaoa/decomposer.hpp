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

#ifndef MCQAOA_DECOMPOSER_HPP
#define MCQAOA_DECOMPOSER_HPP

#include <algorithm>
#include <numbers>
#include <string>
#include <vector>

#include "mcqaoa/ir.hpp"
#include "mcqaoa/toffoli_to_cnot.hpp"
#include "mcqaoa/validate.hpp"

namespace mcqaoa {

enum class SchemeId : std::uint8_t {
  Su2Split,
  HalfZeroed,
  BorrowedLadder,
  NAncillaZeroed,
  HalfBorrowed,
  GeneralizedBorrowedLadder,
  BurnableLadder,
  TopLevel,
};

inline const char* scheme_name(SchemeId s) {
  switch (s) {
    case SchemeId::Su2Split: return "su2_split";
    case SchemeId::HalfZeroed: return "half_split_zeroed";
    case SchemeId::BorrowedLadder: return "borrowed_ladder";
    case SchemeId::NAncillaZeroed: return "n_ancilla_ladder";
    case SchemeId::HalfBorrowed: return "half_split_borrowed_x";
    case SchemeId::GeneralizedBorrowedLadder: return "generalized_ladder";
    case SchemeId::BurnableLadder: return "burnable_ladder";
    case SchemeId::TopLevel: return "decompose";
  }
  return "?";
}

namespace detail {

using Lines = std::vector<int>;
using Gates = std::vector<Gate>;

inline Lines slice(const Lines& xs, std::size_t from, std::size_t to) {
  return Lines(xs.begin() + static_cast<std::ptrdiff_t>(from),
               xs.begin() + static_cast<std::ptrdiff_t>(to));
}

inline Lines concat(Lines a, const Lines& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Borrowed lines needed by the ladder for k controls and gates of at most
// `mc` controls.
inline int ladder_borrow_need(int k, int mc) {
  if (k <= mc) return 0;
  return ceil_div(k - mc, mc - 1);
}

inline void emit_direct_mcx(Gates& out, const Lines& controls, int target, bool relative) {
  if (controls.empty()) {
    out.push_back(Gate::single(SingleOp::X, target));
  } else {
    out.push_back(Gate::mcx(controls, target, relative && controls.size() == 2));
  }
}

// Controls c[0..k) are split into rungs. The bottom rung takes the first
// k - r*(mc-1) controls, every other rung mc-1 controls plus a borrowed line.
inline void emit_ladder(Gates& out, const Lines& c, int target, const Lines& borrowed, int mc) {
  const int k = static_cast<int>(c.size());
  const int r = ladder_borrow_need(k, mc);
  const int bottom = k - r * (mc - 1);
  std::vector<Gate> rungs;  // rungs[0] = B, rungs[j] = A_j, j < r
  rungs.push_back(Gate::mcx(slice(c, 0, static_cast<std::size_t>(bottom)), borrowed[0], true));
  for (int j = 1; j < r; ++j) {
    const auto from = static_cast<std::size_t>(bottom + (j - 1) * (mc - 1));
    Lines ctl = slice(c, from, from + static_cast<std::size_t>(mc - 1));
    ctl.push_back(borrowed[static_cast<std::size_t>(j - 1)]);
    rungs.push_back(Gate::mcx(ctl, borrowed[static_cast<std::size_t>(j)], true));
  }
  Lines top = slice(c, static_cast<std::size_t>(k - (mc - 1)), static_cast<std::size_t>(k));
  top.push_back(borrowed[static_cast<std::size_t>(r - 1)]);
  const Gate t_gate = Gate::mcx(top, target, false);
  for (auto& g : rungs) {
    if (g.controls.size() != 2) g.relative_phase_ok = false;
  }

  auto emit_w = [&] {
    for (int j = r - 1; j >= 1; --j) out.push_back(rungs[static_cast<std::size_t>(j)]);
    out.push_back(rungs[0]);
    for (int j = 1; j < r; ++j) out.push_back(rungs[static_cast<std::size_t>(j)]);
  };
  out.push_back(t_gate);
  emit_w();
  out.push_back(t_gate);
  emit_w();
}

// C^k(X) from gates with at most `mc` controls, borrowing lines from `idle`
// (lowest first) in any state and restoring them.
inline void emit_mcx(Gates& out, const Lines& controls, int target, const Lines& idle, int mc,
                     bool relative = false) {
  const int k = static_cast<int>(controls.size());
  if (k <= mc) {
    emit_direct_mcx(out, controls, target, relative);
    return;
  }
  const int need = ladder_borrow_need(k, mc);
  if (static_cast<int>(idle.size()) >= need) {
    emit_ladder(out, controls, target, slice(idle, 0, static_cast<std::size_t>(need)), mc);
    return;
  }
  if (idle.empty()) {
    throw Error(ErrorCode::kUnsupported,
                "C^" + std::to_string(k) + "(X) needs at least one spare line");
  }
  // Split in half around one borrowed line.
  const int b = idle[0];
  const Lines rest = slice(idle, 1, idle.size());
  const auto k1 = static_cast<std::size_t>((k + 1) / 2);
  const Lines first = slice(controls, 0, k1);
  const Lines second = concat(slice(controls, k1, controls.size()), {b});
  const Lines idle1 = concat(concat(slice(controls, k1, controls.size()), {target}), rest);
  const Lines idle2 = concat(first, rest);
  for (int rep = 0; rep < 2; ++rep) {
    emit_mcx(out, first, b, idle1, mc);
    emit_mcx(out, second, target, idle2, mc);
  }
}

// Rz(pi/2) Ry(theta/2) C^n(X) Ry(-theta/2) C^n(X) Rz(-pi/2) on the target.
inline void emit_su2_split(Gates& out, const Lines& controls, int target, double theta,
                           const Lines& idle, int mc, bool relative = false) {
  const double half_pi = std::numbers::pi / 2;
  out.push_back(Gate::single(SingleOp::Rz, target, half_pi));
  out.push_back(Gate::single(SingleOp::Ry, target, theta / 2));
  emit_mcx(out, controls, target, idle, mc, relative);
  out.push_back(Gate::single(SingleOp::Ry, target, -theta / 2));
  emit_mcx(out, controls, target, idle, mc, relative);
  out.push_back(Gate::single(SingleOp::Rz, target, -half_pi));
}

// C^2(Rx) in the X-diagonal frame. The two Toffolis only need to be correct
// up to a diagonal phase, which the Rz in between commutes with.
inline void emit_c2rx_diag(Gates& out, int c0, int c1, int target, double theta) {
  out.push_back(Gate::single(SingleOp::H, target));
  out.push_back(Gate::single(SingleOp::Rz, target, theta / 2));
  out.push_back(Gate::mcx(Lines{c0, c1}, target, true));
  out.push_back(Gate::single(SingleOp::Rz, target, -theta / 2));
  out.push_back(Gate::mcx(Lines{c0, c1}, target, true));
  out.push_back(Gate::single(SingleOp::H, target));
}

// Base cases shared by every budget: n <= 2 or the gate fits the set.
inline bool emit_small_rx(Gates& out, const Lines& c, int target, double theta, int mc) {
  const int n = static_cast<int>(c.size());
  if (n == 0) {
    out.push_back(Gate::single(SingleOp::Rx, target, theta));
    return true;
  }
  if (n == 2 && mc == 2) {
    emit_c2rx_diag(out, c[0], c[1], target, theta);
    return true;
  }
  if (n <= mc) {
    emit_su2_split(out, c, target, theta, {}, mc);
    return true;
  }
  return false;
}

// Compute chain: AND of controls into anc.back(), using gates of at most
// `mc` controls. Returns the line holding the product.
inline int emit_and_chain(Gates& out, const Lines& c, const Lines& anc, int mc, bool relative) {
  std::size_t used = std::min(c.size(), static_cast<std::size_t>(mc));
  int acc = anc[0];
  emit_direct_mcx(out, slice(c, 0, used), acc, relative);
  std::size_t a = 1;
  while (used < c.size()) {
    const std::size_t take = std::min(c.size() - used, static_cast<std::size_t>(mc - 1));
    Lines ctl = slice(c, used, used + take);
    ctl.push_back(acc);
    acc = anc[a++];
    emit_direct_mcx(out, ctl, acc, relative);
    used += take;
  }
  return acc;
}

// Number of chain gates (and ancillas) needed to AND k controls.
inline int and_chain_length(int k, int mc) {
  if (k <= mc) return 1;
  return 1 + ceil_div(k - mc, mc - 1);
}

}  // namespace detail

inline std::vector<int> iota_lines(int from, int count) {
  std::vector<int> v(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = from + i;
  return v;
}

// Register layout used by the scheme builders: controls 0..n-1, target n,
// ancillas from n+1.
inline Circuit su2_split(int n, double theta) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "su2_split needs n >= 1");
  Circuit c(n + 1);
  detail::emit_su2_split(c.mutable_gates(), iota_lines(0, n), n, theta, {}, n);
  return c;
}

inline Circuit half_split_zeroed(int n, double theta) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "half_split_zeroed needs n >= 2");
  Circuit c(n + 2);
  const int t = n, a = n + 1;
  c.add_ancilla(a, AncillaRegime::Zeroed);
  const auto k1 = static_cast<std::size_t>((n + 1) / 2);
  const auto ctl = iota_lines(0, n);
  const auto first = detail::slice(ctl, 0, k1);
  auto second = detail::slice(ctl, k1, ctl.size());
  second.push_back(a);
  c.append(Gate::mcx(first, a, true));
  c.append(Gate::mcrx(second, t, theta));
  c.append(Gate::mcx(first, a, true));
  return c;
}

inline Circuit borrowed_ladder(int k, const std::vector<int>& borrowed) {
  if (k < 3) throw Error(ErrorCode::kInvalidArgument, "borrowed_ladder needs k >= 3");
  if (static_cast<int>(borrowed.size()) < k - 2) {
    throw Error(ErrorCode::kInvalidArgument, "borrowed_ladder needs k-2 borrowed lines");
  }
  int width = k + 1;
  for (int b : borrowed) {
    if (b <= k) throw Error(ErrorCode::kInvalidArgument, "borrowed lines overlap controls/target");
    width = std::max(width, b + 1);
  }
  Circuit c(width);
  for (int b : borrowed) c.add_ancilla(b, AncillaRegime::Borrowed);
  detail::emit_ladder(c.mutable_gates(), iota_lines(0, k), k, borrowed, 2);
  return c;
}

inline Circuit generalized_ladder(int k, int m, const std::vector<int>& borrowed) {
  if (m < 3) throw Error(ErrorCode::kInvalidArgument, "generalized_ladder needs m >= 3");
  const int mc = m - 1;
  if (static_cast<int>(borrowed.size()) < detail::ladder_borrow_need(k, mc)) {
    throw Error(ErrorCode::kInvalidArgument, "generalized_ladder: insufficient borrowed lines");
  }
  int width = k + 1;
  for (int b : borrowed) {
    if (b <= k) throw Error(ErrorCode::kInvalidArgument, "borrowed lines overlap controls/target");
    width = std::max(width, b + 1);
  }
  Circuit c(width);
  for (int b : borrowed) c.add_ancilla(b, AncillaRegime::Borrowed);
  if (k <= mc) {
    detail::emit_direct_mcx(c.mutable_gates(), iota_lines(0, k), k, false);
  } else {
    detail::emit_ladder(c.mutable_gates(), iota_lines(0, k), k, borrowed, mc);
  }
  return c;
}

inline Circuit n_ancilla_ladder(int n, double theta) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "n_ancilla_ladder needs n >= 3");
  const auto ctl = iota_lines(0, n);
  const auto anc = iota_lines(n + 1, n - 2);
  Circuit c(2 * n - 1);
  for (int a : anc) c.add_ancilla(a, AncillaRegime::Zeroed);
  auto& g = c.mutable_gates();
  const int acc = detail::emit_and_chain(g, detail::slice(ctl, 0, ctl.size() - 1), anc, 2, true);
  const std::size_t chain = g.size();
  detail::emit_su2_split(g, {ctl.back(), acc}, n, theta, {}, 2);
  for (std::size_t i = chain; i-- > 0;) g.push_back(g[i]);
  return c;
}

inline Circuit half_split_borrowed_x(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "half_split_borrowed_x needs n >= 3");
  Circuit c(n + 2);
  const int t = n, b = n + 1;
  c.add_ancilla(b, AncillaRegime::Borrowed);
  const auto ctl = iota_lines(0, n);
  const auto k1 = static_cast<std::size_t>((n + 1) / 2);
  const auto first = detail::slice(ctl, 0, k1);
  const auto second = detail::concat(detail::slice(ctl, k1, ctl.size()), {b});
  for (int rep = 0; rep < 2; ++rep) {
    c.append(Gate::mcx(first, b));
    c.append(Gate::mcx(second, t));
  }
  return c;
}

inline Circuit burnable_ladder(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "burnable_ladder needs n >= 3");
  const auto ctl = iota_lines(0, n);
  const auto anc = iota_lines(n + 1, n - 2);
  Circuit c(2 * n - 1);
  for (int a : anc) c.add_ancilla(a, AncillaRegime::Burnable);
  detail::emit_and_chain(c.mutable_gates(), ctl, detail::concat(anc, {n}), 2, false);
  return c;
}

namespace detail {

inline void need_ancilla(const Lines& anc, std::size_t k, const char* what) {
  if (anc.size() < k) {
    throw Error(ErrorCode::kUnsupported,
                std::string(what) + " needs " + std::to_string(k) + " ancilla lines");
  }
}

// Positive-control bodies of decompose(). Lines: controls c, target t, extra
// lines `anc` already declared in the caller's circuit.
inline void body_rx(Gates& out, const Lines& c, int t, double theta, const Lines& anc,
                    const AncillaBudget& budget, int mc) {
  const int n = static_cast<int>(c.size());
  if (emit_small_rx(out, c, t, theta, mc)) return;
  const auto k1 = static_cast<std::size_t>((n + 1) / 2);
  const Lines first = slice(c, 0, k1);
  const Lines second = slice(c, k1, c.size());

  if (budget.count == AncillaCount::Zero) {
    // Ry(theta) = X Ry(-theta/2) X Ry(theta/2) gated by the last control,
    // conjugated into Rx by Rz(+-pi/2).
    const int last = c.back();
    const Lines rest = slice(c, 0, c.size() - 1);
    auto cry = [&](double phi) {
      out.push_back(Gate::single(SingleOp::Ry, t, phi / 2));
      out.push_back(Gate::mcx(Lines{last}, t));
      out.push_back(Gate::single(SingleOp::Ry, t, -phi / 2));
      out.push_back(Gate::mcx(Lines{last}, t));
    };
    out.push_back(Gate::single(SingleOp::Rz, t, std::numbers::pi / 2));
    cry(theta / 2);
    emit_mcx(out, rest, t, {last}, mc);
    cry(-theta / 2);
    emit_mcx(out, rest, t, {last}, mc);
    out.push_back(Gate::single(SingleOp::Rz, t, -std::numbers::pi / 2));
    return;
  }

  switch (budget.regime) {
    case AncillaRegime::Zeroed:
      if (budget.count == AncillaCount::One) {
        need_ancilla(anc, 1, "half_split_zeroed");
        const int a = anc[0];
        emit_mcx(out, first, a, concat(second, {t}), mc, true);
        emit_su2_split(out, concat(second, {a}), t, theta, first, mc);
        emit_mcx(out, first, a, concat(second, {t}), mc, true);
      } else {
        const Lines head = slice(c, 0, c.size() - static_cast<std::size_t>(mc - 1));
        const Lines tail = slice(c, head.size(), c.size());
        const int len = and_chain_length(static_cast<int>(head.size()), mc);
        need_ancilla(anc, static_cast<std::size_t>(len), "n_ancilla_ladder");
        const std::size_t mark = out.size();
        const int acc = emit_and_chain(out, head, anc, mc, true);
        const std::size_t chain = out.size();
        emit_su2_split(out, concat(tail, {acc}), t, theta, {}, mc);
        for (std::size_t i = chain; i-- > mark;) out.push_back(out[i]);
      }
      return;
    case AncillaRegime::Borrowed:
      emit_su2_split(out, c, t, theta, anc, mc);
      return;
    case AncillaRegime::Burnable: {
      int acc = 0;
      if (budget.count == AncillaCount::One) {
        need_ancilla(anc, 1, "burnable split");
        acc = anc[0];
        emit_mcx(out, c, acc, {t}, mc);
      } else {
        need_ancilla(anc, static_cast<std::size_t>(and_chain_length(n, mc)), "burnable ladder");
        acc = emit_and_chain(out, c, anc, mc, false);
      }
      emit_su2_split(out, {acc}, t, theta, {}, mc);
      return;
    }
  }
}

inline void body_x(Gates& out, const Lines& c, int t, const Lines& anc,
                   const AncillaBudget& budget, int mc) {
  const int n = static_cast<int>(c.size());
  if (n <= mc) {
    emit_direct_mcx(out, c, t, false);
    return;
  }
  const auto k1 = static_cast<std::size_t>((n + 1) / 2);
  const Lines first = slice(c, 0, k1);
  const Lines second = slice(c, k1, c.size());
  if (budget.count == AncillaCount::Zero) {
    throw Error(ErrorCode::kUnsupported,
                "C^" + std::to_string(n) + "(X) with no ancilla is not supported; "
                "use the C^n(Rx) route or provide one ancilla");
  }
  switch (budget.regime) {
    case AncillaRegime::Zeroed:
      if (budget.count == AncillaCount::One) {
        need_ancilla(anc, 1, "half split");
        const int a = anc[0];
        emit_mcx(out, first, a, concat(second, {t}), mc, true);
        emit_mcx(out, concat(second, {a}), t, first, mc);
        emit_mcx(out, first, a, concat(second, {t}), mc, true);
      } else {
        const Lines head = slice(c, 0, c.size() - static_cast<std::size_t>(mc - 1));
        const Lines tail = slice(c, head.size(), c.size());
        need_ancilla(anc, static_cast<std::size_t>(and_chain_length(static_cast<int>(head.size()), mc)),
                     "n_ancilla_ladder");
        const std::size_t mark = out.size();
        const int acc = emit_and_chain(out, head, anc, mc, true);
        const std::size_t chain = out.size();
        emit_direct_mcx(out, concat(tail, {acc}), t, false);
        for (std::size_t i = chain; i-- > mark;) out.push_back(out[i]);
      }
      return;
    case AncillaRegime::Borrowed:
      emit_mcx(out, c, t, anc, mc);
      return;
    case AncillaRegime::Burnable:
      if (budget.count == AncillaCount::One) {
        need_ancilla(anc, 1, "burnable half split");
        emit_mcx(out, first, anc[0], concat(second, {t}), mc);
        emit_mcx(out, concat(second, {anc[0]}), t, first, mc);
      } else {
        const Lines head = slice(c, 0, c.size() - static_cast<std::size_t>(mc - 1));
        const Lines tail = slice(c, head.size(), c.size());
        need_ancilla(anc, static_cast<std::size_t>(and_chain_length(static_cast<int>(head.size()), mc)),
                     "burnable ladder");
        const int acc = emit_and_chain(out, head, anc, mc, false);
        emit_direct_mcx(out, concat(tail, {acc}), t, false);
      }
      return;
  }
}

// Ancilla lines a scheme will touch for n controls.
inline int ancilla_demand(const Gate& g, const AncillaBudget& budget, int mc) {
  const int n = static_cast<int>(g.controls.size());
  const bool rx = g.kind == GateKind::MultiControlledRx;
  if (budget.count == AncillaCount::Zero) return 0;
  if (rx && n <= std::max(mc, 2)) return 0;
  if (!rx && n <= mc) return 0;
  if (budget.count == AncillaCount::One) return 1;
  if (budget.regime == AncillaRegime::Borrowed) return std::max(ladder_borrow_need(n, mc), 1);
  if (budget.regime == AncillaRegime::Burnable && rx) return and_chain_length(n, mc);
  return and_chain_length(n - (mc - 1), mc);
}

}  // namespace detail

// S2_2 circuits are built from Toffolis and lowered afterwards.
inline int construction_max_controls(const GateSetSpec& gs) { return std::max(2, gs.max_controls()); }

inline bool in_gateset(const Gate& g, const GateSetSpec& gs) {
  if (g.kind == GateKind::SingleQudit) return true;
  if (g.kind == GateKind::MultiControlledRx) return false;
  if (g.targets.size() != 1) return false;
  for (const auto& c : g.controls) {
    if (c.polarity != Polarity::PositiveOn1) return false;
  }
  return static_cast<int>(g.controls.size()) <= gs.max_controls();
}

// Decomposes one multi-controlled gate. Output lines: 0..n-1 controls,
// n target, then the ancillas the scheme uses.
inline Circuit decompose(const Gate& gate, const GateSetSpec& gateset, const AncillaBudget& budget) {
  if (gateset.family() == GateFamily::S3_2) {
    throw Error(ErrorCode::kUnsupported, "s3_2 is counts only; use `count`");
  }
  if (gate.kind == GateKind::SingleQudit || gate.targets.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "decompose expects a single-target MCX or MCRx");
  }
  const int n = static_cast<int>(gate.controls.size());
  const int mc = construction_max_controls(gateset);
  const int demand = detail::ancilla_demand(gate, budget, mc);

  Circuit c(n + 1 + demand);
  const auto anc = iota_lines(n + 1, demand);
  for (int a : anc) c.add_ancilla(a, budget.regime);
  auto& out = c.mutable_gates();

  Gate local = gate;
  for (int i = 0; i < n; ++i) local.controls[static_cast<std::size_t>(i)].line = i;
  local.targets = {n};
  std::vector<int> open;
  for (const auto& ctl : local.controls) {
    if (ctl.polarity == Polarity::NegativeOn0) open.push_back(ctl.line);
    if (ctl.polarity == Polarity::PositiveOn2) {
      throw Error(ErrorCode::kPolarityMismatch, "qutrit controls cannot be decomposed");
    }
  }
  for (int l : open) out.push_back(Gate::single(SingleOp::X, l));
  const auto ctl = iota_lines(0, n);
  if (local.kind == GateKind::MultiControlledRx) {
    detail::body_rx(out, ctl, n, local.angle, anc, budget, mc);
  } else {
    detail::body_x(out, ctl, n, anc, budget, mc);
  }
  for (int l : open) out.push_back(Gate::single(SingleOp::X, l));

  if (gateset.family() == GateFamily::S2_2) c = toffoli_to_cnot(c);
  require_valid(c);
  return c;
}

// Rewrites every gate outside the gate set, in place on the circuit's lines.
// Zeroed and borrowed ancillas are shared between gates, burnable ones are
// fresh per gate.
inline Circuit decompose_circuit(const Circuit& in, const GateSetSpec& gateset,
                                 const AncillaBudget& budget) {
  const int mc = construction_max_controls(gateset);
  Circuit out(in.width(), in.dim());
  for (const auto& a : in.ancilla()) out.add_ancilla(a.line, a.regime);
  std::vector<int> pool;
  for (const auto& g : in.gates()) {
    if (in_gateset(g, gateset)) {
      out.append(g);
      continue;
    }
    const int demand = detail::ancilla_demand(g, budget, mc);
    std::vector<int> lines = g.lines();
    std::vector<int> anc;
    if (budget.regime == AncillaRegime::Burnable) {
      for (int i = 0; i < demand; ++i) {
        anc.push_back(out.width());
        out.add_ancilla(out.width(), budget.regime);
        out.widen(out.width() + 1);
      }
    } else {
      while (static_cast<int>(pool.size()) < demand) {
        pool.push_back(out.width());
        out.add_ancilla(out.width(), budget.regime);
        out.widen(out.width() + 1);
      }
      anc.assign(pool.begin(), pool.begin() + demand);
    }
    lines.insert(lines.end(), anc.begin(), anc.end());
    const Circuit local = decompose(g, gateset, budget);
    for (Gate lg : local.gates()) {
      for (auto& ctl : lg.controls) ctl.line = lines[static_cast<std::size_t>(ctl.line)];
      for (auto& t : lg.targets) t = lines[static_cast<std::size_t>(t)];
      out.append(std::move(lg));
    }
  }
  require_valid(out);
  return out;
}

inline Gate inverse_gate(Gate g) {
  if (g.kind == GateKind::MultiControlledRx) {
    g.angle = -g.angle;
  } else if (g.kind == GateKind::SingleQudit) {
    switch (g.op) {
      case SingleOp::S: g.op = SingleOp::Sdg; break;
      case SingleOp::Sdg: g.op = SingleOp::S; break;
      case SingleOp::T: g.op = SingleOp::Tdg; break;
      case SingleOp::Tdg: g.op = SingleOp::T; break;
      case SingleOp::Rx:
      case SingleOp::Ry:
      case SingleOp::Rz: g.angle = -g.angle; break;
      default: break;
    }
  }
  return g;
}

inline Circuit inverse_circuit(const Circuit& c) {
  Circuit out(c.width(), c.dim());
  for (const auto& a : c.ancilla()) out.add_ancilla(a.line, a.regime);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(inverse_gate(*it));
  return out;
}

// C^n(Rx(theta)) as in the partial mixer: the two C^n(X) are a burnable
// decomposition and its mirror, so the mirror uncomputes the garbage.
// Layout as decompose(): controls 0..n-1, target n, ancillas after.
inline Circuit paired_mixer(int n, double theta, const GateSetSpec& gateset,
                            const AncillaBudget& budget) {
  const Circuit fwd = decompose(Gate::mcx(iota_lines(0, n), n), gateset, budget);
  Circuit c(fwd.width());
  for (const auto& a : fwd.ancilla()) c.add_ancilla(a.line, a.regime);
  const double half_pi = std::numbers::pi / 2;
  c.append(Gate::single(SingleOp::Rz, n, half_pi));
  c.append(Gate::single(SingleOp::Ry, n, theta / 2));
  c.append(fwd);
  c.append(Gate::single(SingleOp::Ry, n, -theta / 2));
  c.append(inverse_circuit(fwd));
  c.append(Gate::single(SingleOp::Rz, n, -half_pi));
  return c;
}

}  // namespace mcqaoa

#endif  // MCQAOA_DECOMPOSER_HPP
