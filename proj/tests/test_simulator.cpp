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

#include <gtest/gtest.h>

#include <map>
#include <numbers>

#include "mcqaoa/equivalence.hpp"
#include "mcqaoa/simulator.hpp"
#include "test_support.hpp"

namespace mcqaoa {
namespace {

using testing::Gen;

Circuit random_circuit(Gen& gen, int width, int gates) {
  Circuit c(width);
  const SingleOp ops[] = {SingleOp::X, SingleOp::Y, SingleOp::Z, SingleOp::H, SingleOp::S, SingleOp::Sdg,
                          SingleOp::T, SingleOp::Tdg, SingleOp::Rx, SingleOp::Ry, SingleOp::Rz};
  for (int k = 0; k < gates; ++k) {
    const auto ls = gen.lines(width, gen.integer(1, width));
    if (ls.size() == 1) {
      c.append(Gate::single(ops[gen.integer(0, 10)], ls[0], gen.angle()));
      continue;
    }
    std::vector<Control> ctl;
    for (std::size_t i = 1; i < ls.size(); ++i) {
      ctl.push_back({ls[i], gen.coin() ? Polarity::PositiveOn1 : Polarity::NegativeOn0});
    }
    if (gen.coin()) {
      c.append(Gate::mcx(ctl, ls[0]));
    } else {
      c.append(Gate::mcrx(ctl, ls[0], gen.angle()));
    }
  }
  return c;
}

TEST(Simulator, SingleMatricesMatchOracle) {
  Gen gen(3);
  for (int op = 0; op <= static_cast<int>(SingleOp::Rz); ++op) {
    const double a = gen.angle();
    const auto got = single_matrix(static_cast<SingleOp>(op), a);
    const auto want = testing::oracle_single(static_cast<SingleOp>(op), a);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(got[i] - want[i]), 0.0, 1e-14) << op;
  }
}

TEST(Simulator, RxIsExpOfMinusHalfThetaX) {
  // Rx(pi) = -iX
  const auto m = single_matrix(SingleOp::Rx, std::numbers::pi);
  EXPECT_NEAR(std::abs(m[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[1] - cplx(0, -1)), 0.0, 1e-15);
}

TEST(Simulator, LineIsBitOfIndex) {
  Statevector s(3);
  s.apply(Gate::single(SingleOp::X, 1));
  EXPECT_DOUBLE_EQ(s.probability(0b010), 1.0);
  s.apply(Gate::mcx({1}, 2));
  EXPECT_DOUBLE_EQ(s.probability(0b110), 1.0);
  s.apply(Gate::mcx(std::vector<Control>{{0, Polarity::NegativeOn0}}, 1));
  EXPECT_DOUBLE_EQ(s.probability(0b100), 1.0);
}

TEST(Simulator, RandomCircuitsMatchDenseOracle) {
  Gen gen(2026);
  for (int trial = 0; trial < 40; ++trial) {
    const int w = gen.integer(1, 5);
    const Circuit c = random_circuit(gen, w, gen.integer(1, 15));
    const Matrix u = circuit_unitary(c);
    const auto want = testing::oracle_circuit(c);
    double dev = 0;
    for (std::size_t r = 0; r < u.dim; ++r) {
      for (std::size_t col = 0; col < u.dim; ++col) dev = std::max(dev, std::abs(u(r, col) - want[r][col]));
    }
    EXPECT_LT(dev, 1e-12) << "trial " << trial;
  }
}

TEST(Simulator, PreservesNorm) {
  Gen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = gen.integer(1, 8);
    Statevector s(w, static_cast<std::uint64_t>(gen.integer(0, (1 << w) - 1)));
    s.apply(random_circuit(gen, w, 30));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Simulator, SparseColumnsAgreeWithDense) {
  Gen gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = gen.integer(2, 6);
    const Circuit c = random_circuit(gen, w, 12);
    const std::uint64_t in = static_cast<std::uint64_t>(gen.integer(0, (1 << w) - 1));
    Statevector s(w, in);
    s.apply(c);
    const auto col = sparse_column(c, in);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto it = col.find(i);
      const cplx sparse = it == col.end() ? cplx(0) : it->second;
      EXPECT_NEAR(std::abs(sparse - s[i]), 0.0, 1e-12);
    }
  }
}

TEST(Simulator, PhaseInsensitiveComparison) {
  Circuit a(2), b(2);
  a.append(Gate::mcx({0}, 1));
  b.append(Gate::mcx({0}, 1));
  b.append(Gate::single(SingleOp::Rz, 0, 0.3));
  b.append(Gate::single(SingleOp::Rz, 0, -0.3));
  EXPECT_TRUE(equal_up_to_phase(circuit_unitary(a), circuit_unitary(b)));
  // Rz(a + 2 pi) = -Rz(a).
  Circuit g(1);
  g.append(Gate::single(SingleOp::Rz, 0, 0.7));
  Circuit p(1);
  p.append(Gate::single(SingleOp::Rz, 0, 0.7 + 2 * std::numbers::pi));
  EXPECT_TRUE(equal_up_to_phase(circuit_unitary(g), circuit_unitary(p)));
  Circuit q(1);
  q.append(Gate::single(SingleOp::Rz, 0, 0.8));
  EXPECT_FALSE(equal_up_to_phase(circuit_unitary(g), circuit_unitary(q)));
}

TEST(Simulator, RejectsOversizeRegisters) {
  EXPECT_THROW(Statevector(kMaxStateWidth + 1), Error);
  EXPECT_THROW(circuit_unitary(Circuit(kMaxUnitaryWidth + 1)), Error);
  Statevector s(2);
  EXPECT_THROW(s.apply(Gate::mcx({0}, 2)), Error);
}

TEST(Simulator, SamplingFollowsProbabilities) {
  Statevector s(1);
  s.apply(Gate::single(SingleOp::Ry, 0, 2 * std::acos(std::sqrt(0.8))));
  const auto draws = sample(s, 20000, 9);
  std::map<std::uint64_t, int> counts;
  for (auto d : draws) ++counts[d];
  EXPECT_NEAR(counts[0] / 20000.0, 0.8, 0.02);
  EXPECT_EQ(sample(s, 100, 4), sample(s, 100, 4));
}

TEST(Equivalence, ContractDetectsDirtyAncilla) {
  // X on a zeroed ancilla leaves it dirty: the contract check must notice.
  Circuit c(3);
  c.add_ancilla(2, AncillaRegime::Zeroed);
  c.append(Gate::mcx({0}, 1));
  c.append(Gate::single(SingleOp::X, 2));
  EXPECT_GT(contract_deviation(c, Gate::mcx({0}, 1)), 0.5);
  // A borrowed line must be restored for every state it starts in.
  Circuit b(3);
  b.add_ancilla(2, AncillaRegime::Borrowed);
  b.append(Gate::mcx({0, 2}, 1));
  EXPECT_GT(contract_deviation(b, Gate::mcx({0}, 1)), 0.5);
  Circuit z(3);
  z.add_ancilla(2, AncillaRegime::Zeroed);
  z.append(Gate::mcx(std::vector<Control>{{0, Polarity::PositiveOn1}, {2, Polarity::NegativeOn0}}, 1));
  EXPECT_LT(contract_deviation(z, Gate::mcx({0}, 1)), 1e-12);
}

TEST(Equivalence, BurnableAllowsGarbageNotEntanglement) {
  Circuit c(3);
  c.add_ancilla(2, AncillaRegime::Burnable);
  c.append(Gate::mcx({0}, 2));
  c.append(Gate::mcx({2}, 1));
  EXPECT_LT(burnable_deviation(c, Gate::mcx({0}, 1)), 1e-12);
  Circuit bad(3);
  bad.add_ancilla(2, AncillaRegime::Burnable);
  bad.append(Gate::single(SingleOp::H, 2));
  bad.append(Gate::mcx({2}, 1));
  EXPECT_DOUBLE_EQ(burnable_deviation(bad, Gate::mcx({0}, 1)), 1.0);
}

}  // namespace
}  // namespace mcqaoa
