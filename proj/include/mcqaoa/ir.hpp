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

#ifndef MCQAOA_IR_HPP
#define MCQAOA_IR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcqaoa {

enum class ErrorCode : std::uint8_t {
  kInvalidArgument,
  kIndexOutOfRange,
  kPolarityMismatch,
  kAncillaOverlap,
  kUnsupported,
  kVerificationFailed,
  kBudgetExhausted,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Polarity : std::uint8_t { PositiveOn1, PositiveOn2, NegativeOn0 };

struct Control {
  int line = 0;
  Polarity polarity = Polarity::PositiveOn1;

  friend bool operator==(const Control&, const Control&) = default;
};

enum class GateKind : std::uint8_t { SingleQudit, MultiControlledX, MultiControlledRx };

// Names accepted for SingleQudit gates. Angle is ignored for the fixed ones.
enum class SingleOp : std::uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, Rx, Ry, Rz };

inline const char* single_op_name(SingleOp op) {
  switch (op) {
    case SingleOp::X: return "x";
    case SingleOp::Y: return "y";
    case SingleOp::Z: return "z";
    case SingleOp::H: return "h";
    case SingleOp::S: return "s";
    case SingleOp::Sdg: return "sdg";
    case SingleOp::T: return "t";
    case SingleOp::Tdg: return "tdg";
    case SingleOp::Rx: return "rx";
    case SingleOp::Ry: return "ry";
    case SingleOp::Rz: return "rz";
  }
  return "?";
}

inline std::optional<SingleOp> parse_single_op(const std::string& s) {
  static const std::pair<const char*, SingleOp> table[] = {
      {"x", SingleOp::X},   {"y", SingleOp::Y},     {"z", SingleOp::Z},
      {"h", SingleOp::H},   {"s", SingleOp::S},     {"sdg", SingleOp::Sdg},
      {"t", SingleOp::T},   {"tdg", SingleOp::Tdg}, {"rx", SingleOp::Rx},
      {"ry", SingleOp::Ry}, {"rz", SingleOp::Rz},
  };
  for (const auto& [name, op] : table) {
    if (s == name) return op;
  }
  return std::nullopt;
}

inline bool is_rotation(SingleOp op) {
  return op == SingleOp::Rx || op == SingleOp::Ry || op == SingleOp::Rz;
}

struct Gate {
  GateKind kind = GateKind::SingleQudit;
  SingleOp op = SingleOp::X;  // only meaningful for SingleQudit
  double angle = 0.0;
  std::vector<Control> controls;
  std::vector<int> targets;
  // An MCX carrying this flag may be realized up to a diagonal phase on the
  // lines it touches. Simulation treats it as an exact MCX.
  bool relative_phase_ok = false;

  static Gate single(SingleOp op, int target, double angle = 0.0) {
    Gate g;
    g.kind = GateKind::SingleQudit;
    g.op = op;
    g.angle = is_rotation(op) ? angle : 0.0;
    g.targets = {target};
    return g;
  }

  static Gate mcx(std::vector<Control> controls, int target, bool relative = false) {
    Gate g;
    g.kind = GateKind::MultiControlledX;
    g.controls = std::move(controls);
    g.targets = {target};
    g.relative_phase_ok = relative;
    return g;
  }

  static Gate mcx(const std::vector<int>& controls, int target, bool relative = false) {
    std::vector<Control> cs;
    cs.reserve(controls.size());
    for (int c : controls) cs.push_back({c, Polarity::PositiveOn1});
    return mcx(std::move(cs), target, relative);
  }

  static Gate mcx(std::initializer_list<int> controls, int target, bool relative = false) {
    return mcx(std::vector<int>(controls), target, relative);
  }

  static Gate mcrx(std::vector<Control> controls, int target, double angle) {
    Gate g;
    g.kind = GateKind::MultiControlledRx;
    g.controls = std::move(controls);
    g.targets = {target};
    g.angle = angle;
    return g;
  }

  static Gate mcrx(const std::vector<int>& controls, int target, double angle) {
    std::vector<Control> cs;
    cs.reserve(controls.size());
    for (int c : controls) cs.push_back({c, Polarity::PositiveOn1});
    return mcrx(std::move(cs), target, angle);
  }

  static Gate mcrx(std::initializer_list<int> controls, int target, double angle) {
    return mcrx(std::vector<int>(controls), target, angle);
  }

  std::size_t arity() const { return controls.size() + targets.size(); }
  bool is_entangling() const { return arity() >= 2; }
  int target() const { return targets.front(); }

  std::vector<int> lines() const {
    std::vector<int> out;
    out.reserve(arity());
    for (const auto& c : controls) out.push_back(c.line);
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
  }

  bool touches(int line) const {
    if (std::find(targets.begin(), targets.end(), line) != targets.end()) return true;
    return std::any_of(controls.begin(), controls.end(),
                       [line](const Control& c) { return c.line == line; });
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class AncillaRegime : std::uint8_t { Zeroed, Borrowed, Burnable };

inline const char* regime_name(AncillaRegime r) {
  switch (r) {
    case AncillaRegime::Zeroed: return "zeroed";
    case AncillaRegime::Borrowed: return "borrowed";
    case AncillaRegime::Burnable: return "burnable";
  }
  return "?";
}

inline std::optional<AncillaRegime> parse_regime(const std::string& s) {
  if (s == "zeroed") return AncillaRegime::Zeroed;
  if (s == "borrowed") return AncillaRegime::Borrowed;
  if (s == "burnable") return AncillaRegime::Burnable;
  return std::nullopt;
}

struct AncillaLine {
  int line = 0;
  AncillaRegime regime = AncillaRegime::Zeroed;

  friend bool operator==(const AncillaLine&, const AncillaLine&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width, int dim = 2) : dim_(dim), width_(width) {}

  int dim() const { return dim_; }
  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<AncillaLine>& ancilla() const { return ancilla_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& append(Gate g) {
    gates_.push_back(std::move(g));
    return *this;
  }

  Circuit& append(const Circuit& other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  Circuit& add_ancilla(int line, AncillaRegime regime) {
    ancilla_.push_back({line, regime});
    return *this;
  }

  // Grows the register; existing lines keep their indices.
  Circuit& widen(int width) {
    width_ = std::max(width_, width);
    return *this;
  }

  std::vector<Gate>& mutable_gates() { return gates_; }

  bool is_ancilla(int line) const {
    return std::any_of(ancilla_.begin(), ancilla_.end(),
                       [line](const AncillaLine& a) { return a.line == line; });
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int dim_ = 2;
  int width_ = 0;
  std::vector<AncillaLine> ancilla_;
  std::vector<Gate> gates_;
};

enum class GateFamily : std::uint8_t { S2_2, S2_3, S2_m, S3_2 };

class GateSetSpec {
 public:
  GateSetSpec() : GateSetSpec(GateFamily::S2_2) {}

  // Missing fidelities default to 1.
  explicit GateSetSpec(GateFamily family, int m = 0, std::map<int, double> fidelities = {})
      : family_(family), m_(m), fidelities_(std::move(fidelities)) {
    switch (family_) {
      case GateFamily::S2_2: m_ = 2; break;
      case GateFamily::S2_3: m_ = 3; break;
      case GateFamily::S3_2: m_ = 2; break;
      case GateFamily::S2_m:
        if (m_ < 2) throw Error(ErrorCode::kInvalidArgument, "S2_m requires m >= 2");
        if (m_ == 2) family_ = GateFamily::S2_2;
        if (m_ == 3) family_ = GateFamily::S2_3;
        break;
    }
    for (const auto& [arity, f] : fidelities_) {
      if (!(f > 0.0 && f <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "fidelity must lie in (0, 1]");
      }
      if (arity < 1 || arity > m_) {
        throw Error(ErrorCode::kInvalidArgument,
                    "fidelity given for arity " + std::to_string(arity) +
                        " which the gate set never emits");
      }
    }
    for (int i = 1; i <= m_; ++i) fidelities_.try_emplace(i, 1.0);
  }

  static GateSetSpec s2_2(double f1 = 1.0, double f2 = 1.0) {
    return GateSetSpec(GateFamily::S2_2, 2, {{1, f1}, {2, f2}});
  }
  static GateSetSpec s2_3(double f1 = 1.0, double f2 = 1.0, double f3 = 1.0) {
    return GateSetSpec(GateFamily::S2_3, 3, {{1, f1}, {2, f2}, {3, f3}});
  }
  static GateSetSpec s2_m(int m) { return GateSetSpec(GateFamily::S2_m, m); }
  static GateSetSpec s3_2(double f1 = 1.0, double f2 = 1.0) {
    return GateSetSpec(GateFamily::S3_2, 2, {{1, f1}, {2, f2}});
  }

  GateFamily family() const { return family_; }
  // Largest gate arity in the set.
  int m() const { return m_; }
  int dim() const { return family_ == GateFamily::S3_2 ? 3 : 2; }
  // Largest control count of an emitted MCX.
  int max_controls() const { return m_ - 1; }
  double fidelity(int arity) const { return fidelities_.at(arity); }
  const std::map<int, double>& fidelities() const { return fidelities_; }

  std::string name() const {
    switch (family_) {
      case GateFamily::S2_2: return "s2_2";
      case GateFamily::S2_3: return "s2_3";
      case GateFamily::S3_2: return "s3_2";
      case GateFamily::S2_m: return "s2_" + std::to_string(m_);
    }
    return "?";
  }

 private:
  GateFamily family_;
  int m_;
  std::map<int, double> fidelities_;
};

// Accepts s2_2, s2_3, s3_2 and s2_<m>.
inline GateSetSpec parse_gateset(const std::string& s) {
  if (s == "s3_2") return GateSetSpec::s3_2();
  if (s.rfind("s2_", 0) == 0 && s.size() > 3) {
    const std::string tail = s.substr(3);
    if (std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return GateSetSpec(GateFamily::S2_m, std::stoi(tail));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gate set '" + s + "'");
}

enum class AncillaCount : std::uint8_t { Zero, One, NPerControls };

struct AncillaBudget {
  AncillaCount count = AncillaCount::Zero;
  AncillaRegime regime = AncillaRegime::Zeroed;

  static AncillaBudget none() { return {AncillaCount::Zero, AncillaRegime::Zeroed}; }
  static AncillaBudget one(AncillaRegime r) { return {AncillaCount::One, r}; }
  static AncillaBudget per_control(AncillaRegime r) { return {AncillaCount::NPerControls, r}; }

  friend bool operator==(const AncillaBudget&, const AncillaBudget&) = default;
};

inline const char* count_name(AncillaCount c) {
  switch (c) {
    case AncillaCount::Zero: return "none";
    case AncillaCount::One: return "one";
    case AncillaCount::NPerControls: return "n";
  }
  return "?";
}

// "none", "one,zeroed", "n,burnable", ...
inline AncillaBudget parse_budget(const std::string& s) {
  const auto comma = s.find(',');
  const std::string count = s.substr(0, comma);
  AncillaBudget b;
  if (count == "none") {
    b.count = AncillaCount::Zero;
  } else if (count == "one") {
    b.count = AncillaCount::One;
  } else if (count == "n") {
    b.count = AncillaCount::NPerControls;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown ancilla count '" + count + "'");
  }
  if (comma != std::string::npos) {
    auto r = parse_regime(s.substr(comma + 1));
    if (!r) throw Error(ErrorCode::kInvalidArgument, "unknown ancilla regime in '" + s + "'");
    b.regime = *r;
  }
  return b;
}

inline std::string budget_name(const AncillaBudget& b) {
  if (b.count == AncillaCount::Zero) return "none";
  return std::string(count_name(b.count)) + "," + regime_name(b.regime);
}

class Graph {
 public:
  Graph() = default;

  explicit Graph(int node_count, const std::vector<std::pair<int, int>>& edges = {})
      : adjacency_(static_cast<std::size_t>(node_count)) {
    if (node_count < 0) throw Error(ErrorCode::kInvalidArgument, "negative node count");
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    const auto& n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  bool is_independent(const std::vector<int>& nodes) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (has_edge(nodes[i], nodes[j])) return false;
      }
    }
    return true;
  }

  // Bit i of `mask` selects node i.
  bool is_independent_mask(std::uint64_t mask) const {
    for (const auto& [u, v] : edges_) {
      if (((mask >> u) & 1U) && ((mask >> v) & 1U)) return false;
    }
    return true;
  }

 private:
  void add_edge(int u, int v) {
    const int m = node_count();
    if (u < 0 || v < 0 || u >= m || v >= m) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    edges_.emplace_back(u, v);
    insert_sorted(adjacency_[static_cast<std::size_t>(u)], v);
    insert_sorted(adjacency_[static_cast<std::size_t>(v)], u);
  }

  static void insert_sorted(std::vector<int>& xs, int x) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x);
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace mcqaoa

#endif  // MCQAOA_IR_HPP
