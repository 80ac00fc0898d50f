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

#ifndef MCQAOA_TOFFOLI_TO_CNOT_HPP
#define MCQAOA_TOFFOLI_TO_CNOT_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "mcqaoa/ir.hpp"

namespace mcqaoa {

namespace detail {

inline Gate cx(int c, int t) { return Gate::mcx(std::vector<int>{c}, t); }

// Six-CNOT Toffoli, exact.
inline void emit_toffoli(std::vector<Gate>& out, int a, int b, int t) {
  out.push_back(Gate::single(SingleOp::H, t));
  out.push_back(cx(b, t));
  out.push_back(Gate::single(SingleOp::Tdg, t));
  out.push_back(cx(a, t));
  out.push_back(Gate::single(SingleOp::T, t));
  out.push_back(cx(b, t));
  out.push_back(Gate::single(SingleOp::Tdg, t));
  out.push_back(cx(a, t));
  out.push_back(Gate::single(SingleOp::T, b));
  out.push_back(Gate::single(SingleOp::T, t));
  out.push_back(Gate::single(SingleOp::H, t));
  out.push_back(cx(a, b));
  out.push_back(Gate::single(SingleOp::T, a));
  out.push_back(Gate::single(SingleOp::Tdg, b));
  out.push_back(cx(a, b));
}

// Three-CNOT Toffoli up to the phase -1 on |x=1, y=0, t=1>. Self-inverse.
inline void emit_relative_toffoli(std::vector<Gate>& out, int x, int y, int t) {
  const double q = std::numbers::pi / 4;
  out.push_back(Gate::single(SingleOp::Ry, t, q));
  out.push_back(cx(y, t));
  out.push_back(Gate::single(SingleOp::Ry, t, q));
  out.push_back(cx(x, t));
  out.push_back(Gate::single(SingleOp::Ry, t, -q));
  out.push_back(cx(y, t));
  out.push_back(Gate::single(SingleOp::Ry, t, -q));
}

inline bool angle_is_zero(double a) {
  const double period = 4 * std::numbers::pi;
  double r = std::fmod(a, period);
  if (r < 0) r += period;
  return r < 1e-12 || period - r < 1e-12;
}

inline bool is_inverse_pair(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.targets != b.targets || a.controls != b.controls) return false;
  if (a.kind == GateKind::MultiControlledX) return true;
  if (a.kind == GateKind::MultiControlledRx) return angle_is_zero(a.angle + b.angle);
  if (is_rotation(a.op)) return a.op == b.op && angle_is_zero(a.angle + b.angle);
  auto inv = [](SingleOp op) {
    switch (op) {
      case SingleOp::S: return SingleOp::Sdg;
      case SingleOp::Sdg: return SingleOp::S;
      case SingleOp::T: return SingleOp::Tdg;
      case SingleOp::Tdg: return SingleOp::T;
      default: return op;
    }
  };
  return b.op == inv(a.op);
}

inline bool shares_line(const Gate& a, const Gate& b) {
  for (int l : a.lines()) {
    if (b.touches(l)) return true;
  }
  return false;
}

}  // namespace detail

// Removes gate pairs that are inverses once the gates between them, which
// touch none of their lines, are commuted away. Repeats to a fixpoint.
inline Circuit cancel_inverse_pairs(const Circuit& in) {
  std::vector<Gate> gates = in.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> dead(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (dead[j] || !detail::shares_line(gates[i], gates[j])) continue;
        if (detail::is_inverse_pair(gates[i], gates[j])) {
          dead[i] = dead[j] = 1;
          changed = true;
        }
        break;
      }
    }
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!dead[i]) kept.push_back(std::move(gates[i]));
    }
    gates = std::move(kept);
  }
  Circuit out(in.width(), in.dim());
  for (const auto& a : in.ancilla()) out.add_ancilla(a.line, a.regime);
  for (auto& g : gates) out.append(std::move(g));
  return out;
}

// Lowers a circuit with at most two controls per gate to CNOTs and
// single-qubit gates. Toffolis flagged relative_phase_ok use the 3-CNOT form.
inline Circuit toffoli_to_cnot(const Circuit& in) {
  Circuit mid(in.width(), in.dim());
  for (const auto& a : in.ancilla()) mid.add_ancilla(a.line, a.regime);
  auto& out = mid.mutable_gates();
  for (const auto& g : in.gates()) {
    if (g.kind == GateKind::SingleQudit) {
      out.push_back(g);
      continue;
    }
    if (g.controls.size() > 2) {
      throw Error(ErrorCode::kUnsupported, "toffoli_to_cnot: gate with more than two controls");
    }
    std::vector<int> flips;
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::NegativeOn0) flips.push_back(c.line);
      if (c.polarity == Polarity::PositiveOn2) {
        throw Error(ErrorCode::kPolarityMismatch, "toffoli_to_cnot: qutrit control");
      }
    }
    for (int l : flips) out.push_back(Gate::single(SingleOp::X, l));
    const int t = g.target();
    const std::size_t nc = g.controls.size();
    if (g.kind == GateKind::MultiControlledRx) {
      if (nc == 0) {
        out.push_back(Gate::single(SingleOp::Rx, t, g.angle));
      } else if (nc == 1) {
        const int c = g.controls[0].line;
        const double hp = std::numbers::pi / 2;
        out.push_back(Gate::single(SingleOp::Rz, t, hp));
        out.push_back(Gate::single(SingleOp::Ry, t, g.angle / 2));
        out.push_back(detail::cx(c, t));
        out.push_back(Gate::single(SingleOp::Ry, t, -g.angle / 2));
        out.push_back(detail::cx(c, t));
        out.push_back(Gate::single(SingleOp::Rz, t, -hp));
      } else {
        throw Error(ErrorCode::kUnsupported, "toffoli_to_cnot: controlled Rx with two controls");
      }
    } else {
      for (int tt : g.targets) {
        if (nc == 0) {
          out.push_back(Gate::single(SingleOp::X, tt));
        } else if (nc == 1) {
          out.push_back(detail::cx(g.controls[0].line, tt));
        } else if (g.relative_phase_ok) {
          detail::emit_relative_toffoli(out, g.controls[1].line, g.controls[0].line, tt);
        } else {
          detail::emit_toffoli(out, g.controls[0].line, g.controls[1].line, tt);
        }
      }
    }
    for (int l : flips) out.push_back(Gate::single(SingleOp::X, l));
  }
  return cancel_inverse_pairs(mid);
}

}  // namespace mcqaoa

#endif  // MCQAOA_TOFFOLI_TO_CNOT_HPP
