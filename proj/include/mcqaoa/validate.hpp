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

#ifndef MCQAOA_VALIDATE_HPP
#define MCQAOA_VALIDATE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "mcqaoa/ir.hpp"

namespace mcqaoa {

struct ValidationError {
  ErrorCode code;
  std::size_t gate_index;  // gates().size() for circuit-level problems
  std::string message;
};

inline std::optional<ValidationError> validate_gate(const Gate& g, int width, int dim,
                                                    std::size_t index = 0) {
  auto fail = [index](ErrorCode code, std::string msg) {
    return ValidationError{code, index, "gate " + std::to_string(index) + ": " + std::move(msg)};
  };
  if (g.targets.empty()) return fail(ErrorCode::kInvalidArgument, "no target");
  if (g.kind != GateKind::MultiControlledX && g.targets.size() != 1) {
    return fail(ErrorCode::kInvalidArgument, "expected exactly one target");
  }
  if (g.kind == GateKind::SingleQudit && !g.controls.empty()) {
    return fail(ErrorCode::kInvalidArgument, "single-qudit gate with controls");
  }
  std::set<int> seen;
  for (int line : g.lines()) {
    if (line < 0 || line >= width) {
      return fail(ErrorCode::kIndexOutOfRange,
                  "line " + std::to_string(line) + " outside width " + std::to_string(width));
    }
    if (!seen.insert(line).second) {
      return fail(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + " used twice");
    }
  }
  for (const auto& c : g.controls) {
    if (c.polarity == Polarity::PositiveOn2 && dim != 3) {
      return fail(ErrorCode::kPolarityMismatch, "PositiveOn2 control requires qutrits");
    }
  }
  return std::nullopt;
}

// Returns the first invariant violation, or nullopt if the circuit is valid.
inline std::optional<ValidationError> validate_circuit(const Circuit& c) {
  if (c.dim() != 2 && c.dim() != 3) {
    return ValidationError{ErrorCode::kInvalidArgument, c.size(), "dimension must be 2 or 3"};
  }
  if (c.width() < 0) {
    return ValidationError{ErrorCode::kInvalidArgument, c.size(), "negative width"};
  }
  std::set<int> anc;
  for (const auto& a : c.ancilla()) {
    if (a.line < 0 || a.line >= c.width()) {
      return ValidationError{ErrorCode::kIndexOutOfRange, c.size(),
                             "ancilla line " + std::to_string(a.line) + " outside register"};
    }
    if (!anc.insert(a.line).second) {
      return ValidationError{ErrorCode::kAncillaOverlap, c.size(),
                             "ancilla line " + std::to_string(a.line) + " declared twice"};
    }
  }
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    if (auto err = validate_gate(c.gates()[i], c.width(), c.dim(), i)) return err;
  }
  return std::nullopt;
}

inline void require_valid(const Circuit& c) {
  if (auto err = validate_circuit(c)) throw Error(err->code, err->message);
}

// Multi-line gates keyed by line count.
inline std::map<int, long long> entangling_gate_histogram(const Circuit& c) {
  std::map<int, long long> h;
  for (const auto& g : c.gates()) {
    if (g.is_entangling()) ++h[static_cast<int>(g.arity())];
  }
  return h;
}

inline long long entangling_total(const Circuit& c) {
  long long total = 0;
  for (const auto& [arity, n] : entangling_gate_histogram(c)) total += n;
  return total;
}

// Single-qudit gates with adjacent runs on one line fused into one gate.
inline long long fused_single_count(const Circuit& c) {
  std::vector<char> open(static_cast<std::size_t>(c.width()), 0);
  long long count = 0;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::SingleQudit) {
      auto& flag = open[static_cast<std::size_t>(g.target())];
      if (!flag) ++count;
      flag = 1;
    } else {
      for (int line : g.lines()) open[static_cast<std::size_t>(line)] = 0;
    }
  }
  return count;
}

inline long long single_count(const Circuit& c) {
  long long n = 0;
  for (const auto& g : c.gates()) n += g.kind == GateKind::SingleQudit ? 1 : 0;
  return n;
}

}  // namespace mcqaoa

#endif  // MCQAOA_VALIDATE_HPP
