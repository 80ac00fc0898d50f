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

#ifndef MCQAOA_SIMULATOR_HPP
#define MCQAOA_SIMULATOR_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "mcqaoa/ir.hpp"
#include "mcqaoa/validate.hpp"

namespace mcqaoa {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major

inline constexpr int kMaxStateWidth = 26;
inline constexpr int kMaxUnitaryWidth = 12;

inline Mat2 single_matrix(SingleOp op, double angle) {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  switch (op) {
    case SingleOp::X: return {0, 1, 1, 0};
    case SingleOp::Y: return {0, -i, i, 0};
    case SingleOp::Z: return {1, 0, 0, -1};
    case SingleOp::H: return {r, r, r, -r};
    case SingleOp::S: return {1, 0, 0, i};
    case SingleOp::Sdg: return {1, 0, 0, -i};
    case SingleOp::T: return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
    case SingleOp::Tdg: return {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)};
    case SingleOp::Rx: return {c, -i * s, -i * s, c};
    case SingleOp::Ry: return {c, -s, s, c};
    case SingleOp::Rz: return {std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)};
  }
  return {1, 0, 0, 1};
}

inline Mat2 gate_target_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::SingleQudit: return single_matrix(g.op, g.angle);
    case GateKind::MultiControlledX: return single_matrix(SingleOp::X, 0.0);
    case GateKind::MultiControlledRx: return single_matrix(SingleOp::Rx, g.angle);
  }
  return {1, 0, 0, 1};
}

class Statevector {
 public:
  explicit Statevector(int width, std::uint64_t basis = 0) : width_(width) {
    if (width < 0 || width > kMaxStateWidth) {
      throw Error(ErrorCode::kInvalidArgument, "statevector width out of range");
    }
    amps_.assign(std::size_t{1} << width, cplx(0.0, 0.0));
    amps_.at(basis) = 1.0;
  }

  int width() const { return width_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  double probability(std::uint64_t basis) const { return std::norm(amps_.at(basis)); }

  std::vector<double> probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
  }

  // Line i is bit i of the basis index.
  void apply(const Gate& g) {
    if (auto err = validate_gate(g, width_, 2)) throw Error(err->code, err->message);
    std::uint64_t mask = 0, want = 0;
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::PositiveOn2) {
        throw Error(ErrorCode::kPolarityMismatch, "qutrit control in qubit simulation");
      }
      mask |= std::uint64_t{1} << c.line;
      if (c.polarity == Polarity::PositiveOn1) want |= std::uint64_t{1} << c.line;
    }
    const Mat2 u = gate_target_matrix(g);
    for (int t : g.targets) apply_2x2(u, t, mask, want);
  }

  void apply(const Circuit& c) {
    for (const auto& g : c.gates()) apply(g);
  }

 private:
  void apply_2x2(const Mat2& u, int target, std::uint64_t mask, std::uint64_t want) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t n = amps_.size();
    const bool is_x = u[0] == cplx(0) && u[3] == cplx(0) && u[1] == cplx(1) && u[2] == cplx(1);
    const bool diag = u[1] == cplx(0) && u[2] == cplx(0);
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((i & tbit) || (i & mask) != want) continue;
      cplx& a0 = amps_[i];
      cplx& a1 = amps_[i | tbit];
      if (is_x) {
        std::swap(a0, a1);
      } else if (diag) {
        a0 *= u[0];
        a1 *= u[3];
      } else {
        const cplx x0 = a0, x1 = a1;
        a0 = u[0] * x0 + u[1] * x1;
        a1 = u[2] * x0 + u[3] * x1;
      }
    }
  }

  int width_;
  std::vector<cplx> amps_;
};

inline Statevector apply_gate(Statevector state, const Gate& g) {
  state.apply(g);
  return state;
}

// Dense square matrix, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<cplx> data;

  cplx& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

  static Matrix identity(std::size_t dim) {
    Matrix m{dim, std::vector<cplx>(dim * dim, 0.0)};
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Matrix circuit_unitary(const Circuit& c) {
  if (c.width() > kMaxUnitaryWidth) {
    throw Error(ErrorCode::kInvalidArgument,
                "circuit_unitary supports width <= " + std::to_string(kMaxUnitaryWidth));
  }
  const std::size_t dim = std::size_t{1} << c.width();
  Matrix m{dim, std::vector<cplx>(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    Statevector s(c.width(), col);
    s.apply(c);
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = s[row];
  }
  return m;
}

// Columns of the circuit unitary for the listed input basis states.
inline std::vector<std::vector<cplx>> circuit_columns(const Circuit& c,
                                                      const std::vector<std::uint64_t>& inputs) {
  std::vector<std::vector<cplx>> cols;
  cols.reserve(inputs.size());
  for (auto in : inputs) {
    Statevector s(c.width(), in);
    s.apply(c);
    cols.push_back(s.amplitudes());
  }
  return cols;
}

// min over phi of max |a - e^{i phi} b|, with phi from the overlap.
inline double max_deviation_up_to_phase(const std::vector<std::vector<cplx>>& a,
                                        const std::vector<std::vector<cplx>>& b) {
  if (a.size() != b.size()) return INFINITY;
  cplx overlap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].size() != b[k].size()) return INFINITY;
    for (std::size_t i = 0; i < a[k].size(); ++i) overlap += std::conj(b[k][i]) * a[k][i];
  }
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = 0; i < a[k].size(); ++i) {
      dev = std::max(dev, std::abs(a[k][i] - phase * b[k][i]));
    }
  }
  return dev;
}

inline double max_deviation_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) return INFINITY;
  return max_deviation_up_to_phase(std::vector<std::vector<cplx>>{a.data},
                                   std::vector<std::vector<cplx>>{b.data});
}

inline bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = 1e-8) {
  return max_deviation_up_to_phase(a, b) <= tol;
}

// i.i.d. draws of basis indices from |amplitude|^2.
inline std::vector<std::uint64_t> sample(const Statevector& state, int shots, std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 1");
  const auto p = state.probabilities();
  std::discrete_distribution<std::uint64_t> dist(p.begin(), p.end());
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
  for (auto& x : out) x = dist(rng);
  return out;
}

}  // namespace mcqaoa

#endif  // MCQAOA_SIMULATOR_HPP
