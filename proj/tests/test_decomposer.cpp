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

#include <algorithm>
#include <numbers>

#include "mcqaoa/decomposer.hpp"
#include "mcqaoa/equivalence.hpp"
#include "mcqaoa/metrics.hpp"
#include "mcqaoa/toffoli_to_cnot.hpp"
#include "mcqaoa/validate.hpp"
#include "test_support.hpp"

namespace mcqaoa {
namespace {

using testing::Gen;

std::vector<std::size_t> control_counts(const Circuit& c) {
  std::vector<std::size_t> out;
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::SingleQudit) out.push_back(g.controls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long arity_count(const Circuit& c, int arity) {
  const auto h = entangling_gate_histogram(c);
  return h.count(arity) ? h.at(arity) : 0;
}

// Dense oracle check restricted to inputs with the zeroed ancillas at 0.
double oracle_deviation(const Circuit& c, const Gate& ideal) {
  Circuit want(c.width());
  want.append(ideal);
  const auto a = testing::oracle_circuit(c);
  const auto b = testing::oracle_circuit(want);
  std::uint64_t zmask = 0;
  for (const auto& an : c.ancilla()) {
    if (an.regime != AncillaRegime::Borrowed) zmask |= std::uint64_t{1} << an.line;
  }
  testing::Dense ar, br;
  std::vector<std::vector<testing::C>> ca, cb;
  for (std::size_t col = 0; col < a.size(); ++col) {
    if (col & zmask) continue;
    std::vector<testing::C> x, y;
    for (std::size_t r = 0; r < a.size(); ++r) {
      x.push_back(a[r][col]);
      y.push_back(b[r][col]);
    }
    ca.push_back(x);
    cb.push_back(y);
  }
  return max_deviation_up_to_phase(ca, cb);
}

// Zeroed-ancilla entangling counts as printed in the reference table,
// n = 1..5; columns s2_2/one, s2_3/one, s2_2/n, s2_3/n, s3_2/none.
constexpr long long kPrintedRows[5][5] = {
    {2, 2, 2, 2, 2}, {6, 2, 6, 2, 4}, {18, 4, 18, 4, 14}, {42, 10, 24, 6, 16}, {72, 16, 30, 8, 26}};

long long printed_closed_form(int n, int col) {
  if (n <= 5) return kPrintedRows[n - 1][col];
  switch (col) {
    case 0: return 16LL * n - 8;
    case 1: return 8LL * n - 24;
    case 2: return 6LL * n;
    case 3: return 2LL * n - 2;
    default: return n % 2 ? 6LL * n - 4 : 6LL * n - 8;
  }
}

TEST(ZeroedCounts, BuiltCircuitsMatchPrintedTable) {
  const std::pair<GateSetSpec, AncillaCount> cols[] = {{GateSetSpec::s2_2(), AncillaCount::One},
                                                       {GateSetSpec::s2_3(), AncillaCount::One},
                                                       {GateSetSpec::s2_2(), AncillaCount::NPerControls},
                                                       {GateSetSpec::s2_3(), AncillaCount::NPerControls}};
  for (int n = 1; n <= 12; ++n) {
    for (int col = 0; col < 4; ++col) {
      const auto& [gs, count] = cols[col];
      const Circuit c = decompose(Gate::mcrx(iota_lines(0, n), n, 0.9), gs, {count, AncillaRegime::Zeroed});
      EXPECT_EQ(entangling_total(c), printed_closed_form(n, col)) << "n=" << n << " col=" << col;
    }
  }
}

TEST(ZeroedCounts, ClosedFormsMatchPrintedTable) {
  const std::pair<GateFamily, AncillaCount> cols[] = {{GateFamily::S2_2, AncillaCount::One},
                                                      {GateFamily::S2_3, AncillaCount::One},
                                                      {GateFamily::S2_2, AncillaCount::NPerControls},
                                                      {GateFamily::S2_3, AncillaCount::NPerControls},
                                                      {GateFamily::S3_2, AncillaCount::Zero}};
  for (int n = 1; n <= 12; ++n) {
    for (int col = 0; col < 5; ++col) {
      EXPECT_EQ(exact_count_zeroed(n, cols[col].first, cols[col].second), printed_closed_form(n, col))
          << "n=" << n << " col=" << col;
    }
  }
}

TEST(Su2Split, OneControlHasTwoCnotsAndFourSingles) {
  const Circuit c = su2_split(1, 0.37);
  EXPECT_EQ(arity_count(c, 2), 2);
  EXPECT_EQ(entangling_total(c), 2);
  EXPECT_EQ(single_count(c), 4);
}

TEST(Su2Split, ZeroAngleIsIdentity) {
  const Circuit c = su2_split(2, 0.0);
  EXPECT_LT(testing::phase_free_distance(testing::oracle_circuit(c), testing::identity(8)), 1e-12);
}

TEST(Su2Split, MatchesDirectGate) {
  EXPECT_LT(oracle_deviation(su2_split(2, 1.3), Gate::mcrx({0, 1}, 2, 1.3)), 1e-10);
  Gen gen(77);
  for (int n = 1; n <= 5; ++n) {
    const double t = gen.angle();
    EXPECT_LT(oracle_deviation(su2_split(n, t), Gate::mcrx(iota_lines(0, n), n, t)), 1e-10) << n;
  }
}

TEST(HalfSplitZeroed, ControlCountsFollowCeilFloor) {
  // ceil(5/2) = 3 onto the ancilla, floor(5/2) + 1 = 3 on the rotation.
  EXPECT_EQ(control_counts(half_split_zeroed(5, 0.4)), (std::vector<std::size_t>{3, 3, 3}));
  EXPECT_EQ(control_counts(half_split_zeroed(2, 0.4)), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(control_counts(half_split_zeroed(6, 0.4)), (std::vector<std::size_t>{3, 3, 4}));
}

TEST(HalfSplitZeroed, FullExpansionAtFiveIsSeventyTwoCnots) {
  const Circuit c = decompose(Gate::mcrx(iota_lines(0, 5), 5, 0.4), GateSetSpec::s2_2(),
                              AncillaBudget::one(AncillaRegime::Zeroed));
  EXPECT_EQ(arity_count(c, 2), 72);
  EXPECT_EQ(entangling_total(c), 72);
}

TEST(HalfSplitZeroed, MatchesOracle) {
  Gen gen(5);
  for (int n = 2; n <= 5; ++n) {
    const double t = gen.angle();
    EXPECT_LT(oracle_deviation(half_split_zeroed(n, t), Gate::mcrx(iota_lines(0, n), n, t)), 1e-10) << n;
  }
}

TEST(BorrowedLadder, UsesFourKMinusEightToffolis) {
  for (int k : {3, 4, 5, 6, 7}) {
    const Circuit c = borrowed_ladder(k, iota_lines(k + 1, k - 2));
    EXPECT_EQ(arity_count(c, 3), 4LL * k - 8) << k;
    EXPECT_EQ(entangling_total(c), 4LL * k - 8) << k;
  }
}

TEST(BorrowedLadder, CorrectForEveryBorrowedState) {
  for (int k : {3, 4}) {
    const Circuit c = borrowed_ladder(k, iota_lines(k + 1, k - 2));
    // All ancillas are borrowed, so every column is compared.
    EXPECT_LT(oracle_deviation(c, Gate::mcx(iota_lines(0, k), k)), 1e-12) << k;
  }
}

TEST(BorrowedLadder, RejectsTooFewBorrowedLines) {
  EXPECT_THROW(borrowed_ladder(5, iota_lines(6, 1)), Error);
}

TEST(NAncillaLadder, ToffoliCounts) {
  EXPECT_EQ(arity_count(n_ancilla_ladder(4, 0.2), 3), 6);
  EXPECT_EQ(arity_count(n_ancilla_ladder(5, 0.2), 3), 8);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(entangling_total(n_ancilla_ladder(n, 0.2)), 2LL * n - 2);
}

TEST(NAncillaLadder, MatchesOracleOnZeroedInputs) {
  EXPECT_LT(oracle_deviation(n_ancilla_ladder(3, 0.7), Gate::mcrx({0, 1, 2}, 3, 0.7)), 1e-10);
  EXPECT_LT(oracle_deviation(n_ancilla_ladder(4, -2.1), Gate::mcrx({0, 1, 2, 3}, 4, -2.1)), 1e-10);
}

TEST(NAncillaLadder, ToffoliLoweringGivesTwentyFourCnots) {
  const Circuit c = decompose(Gate::mcrx(iota_lines(0, 4), 4, 0.2), GateSetSpec::s2_2(),
                              AncillaBudget::per_control(AncillaRegime::Zeroed));
  EXPECT_EQ(arity_count(c, 2), 24);
  EXPECT_EQ(entangling_total(c), 24);
}

TEST(HalfSplitBorrowedX, ControlMultisets) {
  EXPECT_EQ(control_counts(half_split_borrowed_x(6)), (std::vector<std::size_t>{3, 3, 4, 4}));
  EXPECT_EQ(control_counts(half_split_borrowed_x(3)), (std::vector<std::size_t>{2, 2, 2, 2}));
}

TEST(HalfSplitBorrowedX, MatchesOracleForAllBorrowedStates) {
  EXPECT_LT(oracle_deviation(half_split_borrowed_x(4), Gate::mcx({0, 1, 2, 3}, 4)), 1e-12);
  EXPECT_LT(oracle_deviation(half_split_borrowed_x(5), Gate::mcx(iota_lines(0, 5), 5)), 1e-12);
}

TEST(GeneralizedLadder, ThreeLineGatesReduceToBorrowedLadder) {
  const Circuit c = generalized_ladder(5, 3, iota_lines(6, 3));
  EXPECT_EQ(arity_count(c, 3), 12);
  EXPECT_EQ(c.gates(), borrowed_ladder(5, iota_lines(6, 3)).gates());
}

TEST(GeneralizedLadder, FourLineRungs) {
  const Circuit c = generalized_ladder(7, 4, iota_lines(8, 2));
  const auto h = entangling_gate_histogram(c);
  ASSERT_EQ(h.size(), 1U);
  EXPECT_EQ(h.begin()->first, 4);
  EXPECT_LT(oracle_deviation(generalized_ladder(5, 4, iota_lines(6, 2)), Gate::mcx(iota_lines(0, 5), 5)), 1e-12);
}

TEST(GeneralizedLadder, GateCountScalesAsFourKOverMMinusTwo) {
  for (int m : {4, 5, 6}) {
    const int k1 = 60, k2 = 120;
    auto count = [&](int k) {
      const int need = std::max(detail::ladder_borrow_need(k, m - 1), 1);
      return static_cast<double>(entangling_total(generalized_ladder(k, m, iota_lines(k + 1, need))));
    };
    const double slope = (count(k2) - count(k1)) / (k2 - k1);
    EXPECT_NEAR(slope, 4.0 / (m - 2), 0.35) << m;
  }
}

TEST(BurnableLadder, NMinusOneToffolis) {
  EXPECT_EQ(arity_count(burnable_ladder(5), 3), 4);
  EXPECT_EQ(arity_count(burnable_ladder(3), 3), 2);
}

TEST(BurnableLadder, TargetFlipsIffAllControlsSet) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(burnable_basis_mismatches(burnable_ladder(n), Gate::mcx(iota_lines(0, n), n)), 0);
}

TEST(Decompose, PinnedExamples) {
  EXPECT_EQ(entangling_total(decompose(Gate::mcrx(iota_lines(0, 3), 3, 1.0), GateSetSpec::s2_2(),
                                       AncillaBudget::one(AncillaRegime::Zeroed))),
            18);
  EXPECT_EQ(entangling_total(decompose(Gate::mcrx(iota_lines(0, 4), 4, 1.0), GateSetSpec::s2_3(),
                                       AncillaBudget::one(AncillaRegime::Zeroed))),
            10);
  for (const auto& b : {AncillaBudget::none(), AncillaBudget::one(AncillaRegime::Zeroed),
                        AncillaBudget::per_control(AncillaRegime::Burnable)}) {
    const Gate g = Gate::mcrx({0, 1}, 2, 0.8);
    const Circuit c = decompose(g, GateSetSpec::s2_3(), b);
    EXPECT_EQ(arity_count(c, 3), 2);
    EXPECT_EQ(single_count(c), 4);
    EXPECT_LT(oracle_deviation(c, g), 1e-12);
  }
  EXPECT_EQ(arity_count(decompose(Gate::mcx(iota_lines(0, 5), 5), GateSetSpec::s2_3(),
                                  AncillaBudget::per_control(AncillaRegime::Burnable)),
                        3),
            4);
}

TEST(Decompose, RejectsQutritTargetsAndControls) {
  try {
    decompose(Gate::mcrx({0, 1}, 2, 0.1), GateSetSpec::s3_2(), AncillaBudget::none());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
  const Gate q = Gate::mcx(std::vector<Control>{{0, Polarity::PositiveOn2}, {1, Polarity::PositiveOn1}}, 2);
  EXPECT_THROW(decompose(q, GateSetSpec::s2_3(), AncillaBudget::none()), Error);
  EXPECT_THROW(decompose(Gate::single(SingleOp::X, 0), GateSetSpec::s2_3(), AncillaBudget::none()), Error);
}

// Property: random gate, gate set and budget; the output stays inside the
// gate set and matches the ideal gate under the budget's contract.
TEST(Decompose, RandomGatesRespectGateSetAndContract) {
  Gen gen(424242);
  const std::vector<GateSetSpec> sets{GateSetSpec::s2_2(), GateSetSpec::s2_3(), GateSetSpec::s2_m(4)};
  const AncillaRegime regimes[] = {AncillaRegime::Zeroed, AncillaRegime::Borrowed, AncillaRegime::Burnable};
  for (int trial = 0; trial < 60; ++trial) {
    const GateSetSpec& gs = sets[static_cast<std::size_t>(gen.integer(0, 2))];
    const int n = gen.integer(1, 5);
    const bool rx = gen.coin();
    const int which = gen.integer(0, 2);
    AncillaBudget b = which == 0 ? AncillaBudget::none()
                                 : AncillaBudget{which == 1 ? AncillaCount::One : AncillaCount::NPerControls,
                                                 regimes[gen.integer(0, 2)]};
    if (!rx && b.count == AncillaCount::Zero && n > gs.max_controls()) b = AncillaBudget::one(AncillaRegime::Zeroed);
    std::vector<Control> ctl;
    for (int i = 0; i < n; ++i) ctl.push_back({i, gen.coin(0.3) ? Polarity::NegativeOn0 : Polarity::PositiveOn1});
    const double t = gen.angle();
    const Gate g = rx ? Gate::mcrx(ctl, n, t) : Gate::mcx(ctl, n);
    const Circuit c = decompose(g, gs, b);
    for (const auto& out : c.gates()) {
      if (out.kind == GateKind::SingleQudit) continue;
      EXPECT_EQ(out.kind, GateKind::MultiControlledX);
      EXPECT_LE(static_cast<int>(out.controls.size()), gs.max_controls());
      for (const auto& cc : out.controls) EXPECT_EQ(cc.polarity, Polarity::PositiveOn1);
    }
    const double dev = b.regime == AncillaRegime::Burnable && b.count != AncillaCount::Zero ? burnable_deviation(c, g)
                                                                                            : contract_deviation(c, g);
    EXPECT_LT(dev, 1e-8) << "trial " << trial << " " << gs.name() << " " << budget_name(b) << " n=" << n;
  }
}

TEST(Decompose, InsertingSinglesKeepsHistogram) {
  Gen gen(9);
  Circuit c = decompose(Gate::mcrx(iota_lines(0, 4), 4, 0.3), GateSetSpec::s2_3(),
                        AncillaBudget::one(AncillaRegime::Zeroed));
  const auto before = entangling_gate_histogram(c);
  auto& gates = c.mutable_gates();
  for (int k = 0; k < 10; ++k) {
    const auto pos = gates.begin() + gen.integer(0, static_cast<int>(gates.size()));
    gates.insert(pos, Gate::single(SingleOp::Rz, gen.integer(0, c.width() - 1), gen.angle()));
  }
  EXPECT_EQ(entangling_gate_histogram(c), before);
}

TEST(DecomposeCircuit, RewritesOnlyGatesOutsideTheSet) {
  Gen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit in(5);
    for (int k = 0; k < 4; ++k) {
      const auto ls = gen.lines(5, gen.integer(1, 5));
      if (ls.size() == 1) {
        in.append(Gate::single(SingleOp::H, ls[0]));
      } else {
        std::vector<int> ctl(ls.begin() + 1, ls.end());
        in.append(gen.coin() ? Gate::mcx(ctl, ls[0]) : Gate::mcrx(ctl, ls[0], gen.angle()));
      }
    }
    const Circuit out = decompose_circuit(in, GateSetSpec::s2_3(), AncillaBudget::one(AncillaRegime::Zeroed));
    for (const auto& g : out.gates()) EXPECT_TRUE(in_gateset(g, GateSetSpec::s2_3()));
    std::vector<std::uint64_t> inputs = inputs_with_zeroed(out.width(), {5});
    Circuit wide = in;
    wide.widen(out.width());
    EXPECT_LT(deviation_on_inputs(out, wide, inputs), 1e-8) << trial;
  }
}

TEST(ToffoliToCnot, SingleToffoliIsExactWithSixCnots) {
  Circuit t(3);
  t.append(Gate::mcx({0, 1}, 2));
  const Circuit c = toffoli_to_cnot(t);
  EXPECT_LE(arity_count(c, 2), 8);
  EXPECT_EQ(entangling_total(c), arity_count(c, 2));
  EXPECT_LT(testing::phase_free_distance(testing::oracle_circuit(c), testing::oracle_circuit(t)), 1e-12);
}

TEST(ToffoliToCnot, RelativePhaseToffoliDiffersOnlyByDiagonal) {
  Circuit t(3);
  t.append(Gate::mcx({0, 1}, 2, true));
  const Circuit c = toffoli_to_cnot(t);
  EXPECT_EQ(arity_count(c, 2), 3);
  const auto got = testing::oracle_circuit(c);
  Circuit exact(3);
  exact.append(Gate::mcx({0, 1}, 2));
  const auto want = testing::oracle_circuit(exact);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t col = 0; col < 8; ++col) {
      EXPECT_NEAR(std::abs(got[r][col]), std::abs(want[r][col]), 1e-12);
    }
  }
}

TEST(ToffoliToCnot, PeepholeKeepsUnitary) {
  Gen gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4);
    for (int k = 0; k < 16; ++k) {
      const auto ls = gen.lines(4, gen.integer(1, 3));
      if (ls.size() == 1) {
        c.append(Gate::single(gen.coin() ? SingleOp::T : SingleOp::H, ls[0]));
      } else {
        c.append(Gate::mcx(std::vector<int>(ls.begin() + 1, ls.end()), ls[0]));
        if (gen.coin()) c.append(Gate::mcx(std::vector<int>(ls.begin() + 1, ls.end()), ls[0]));
      }
    }
    const Circuit reduced = cancel_inverse_pairs(c);
    EXPECT_LE(reduced.size(), c.size());
    EXPECT_LT(testing::phase_free_distance(testing::oracle_circuit(reduced), testing::oracle_circuit(c)), 1e-12);
  }
}

TEST(PairedMixer, RestoresBurnableAncillas) {
  Gen gen(4);
  for (int n = 3; n <= 5; ++n) {
    for (const auto& gs : {GateSetSpec::s2_2(), GateSetSpec::s2_3()}) {
      const double t = gen.angle();
      const Circuit c = paired_mixer(n, t, gs, AncillaBudget::per_control(AncillaRegime::Burnable));
      EXPECT_LT(contract_deviation(c, Gate::mcrx(iota_lines(0, n), n, t)), 1e-9) << n;
    }
  }
}

}  // namespace
}  // namespace mcqaoa
