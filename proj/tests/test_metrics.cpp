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

#include <cmath>

#include "mcqaoa/metrics.hpp"
#include "test_support.hpp"

namespace mcqaoa {
namespace {

using testing::Gen;

TEST(ExactCount, PinnedValues) {
  EXPECT_EQ(exact_count_zeroed(3, GateFamily::S2_2, AncillaCount::One), 18);
  EXPECT_EQ(exact_count_zeroed(5, GateFamily::S3_2, AncillaCount::Zero), 26);
  for (auto [f, c] : {std::pair{GateFamily::S2_2, AncillaCount::One}, std::pair{GateFamily::S2_3, AncillaCount::One},
                      std::pair{GateFamily::S2_2, AncillaCount::NPerControls},
                      std::pair{GateFamily::S2_3, AncillaCount::NPerControls},
                      std::pair{GateFamily::S3_2, AncillaCount::Zero}}) {
    EXPECT_EQ(exact_count_zeroed(1, f, c), 2);
  }
}

TEST(ExactCount, QutritParityModes) {
  EXPECT_EQ(exact_count_zeroed(4, GateFamily::S3_2, AncillaCount::Zero, ParityMode::Exact), 16);
  EXPECT_EQ(exact_count_zeroed(4, GateFamily::S3_2, AncillaCount::Zero, ParityMode::Larger), 20);
  EXPECT_EQ(exact_count_zeroed(5, GateFamily::S3_2, AncillaCount::Zero, ParityMode::Larger), 26);
}

TEST(ExactCount, RejectsUnsupportedColumns) {
  EXPECT_THROW(exact_count_zeroed(0, GateFamily::S2_2, AncillaCount::One), Error);
  EXPECT_THROW(exact_count_zeroed(4, GateFamily::S2_2, AncillaCount::Zero), Error);
  EXPECT_THROW(exact_count_zeroed(4, GateFamily::S2_m, AncillaCount::One), Error);
}

TEST(BurnableCount, PinnedTuples) {
  const auto none = asymptotic_count_burnable(10, Workload::Rx, GateSetSpec::s2_2(), AncillaCount::Zero);
  EXPECT_EQ(none.tuple, (std::vector<long long>{256, 220}));
  const auto x = asymptotic_count_burnable(10, Workload::X, GateSetSpec::s2_3(), AncillaCount::One);
  EXPECT_EQ(x.tuple, (std::vector<long long>{0, 0, 28}));
  const auto one = asymptotic_count_burnable(10, Workload::Rx, GateSetSpec::s2_2(), AncillaCount::One);
  EXPECT_EQ(one.tuple, (std::vector<long long>{180, 154}));
  const auto nrx = asymptotic_count_burnable(10, Workload::Rx, GateSetSpec::s2_3(), AncillaCount::NPerControls);
  EXPECT_EQ(nrx.tuple, (std::vector<long long>{6, 2, 8}));
  const auto q = asymptotic_count_burnable(10, Workload::Rx, GateSetSpec::s3_2(), AncillaCount::Zero);
  EXPECT_EQ(q.tuple, (std::vector<long long>{90, 56}));
}

TEST(BurnableCount, EmptyCellsFallBackToRotationRow) {
  const auto x = asymptotic_count_burnable(20, Workload::X, GateSetSpec::s2_2(), AncillaCount::NPerControls);
  const auto rx = asymptotic_count_burnable(20, Workload::Rx, GateSetSpec::s2_2(), AncillaCount::NPerControls);
  EXPECT_EQ(x.tuple, rx.tuple);
  const auto x0 = asymptotic_count_burnable(20, Workload::X, GateSetSpec::s2_3(), AncillaCount::Zero);
  const auto rx0 = asymptotic_count_burnable(20, Workload::Rx, GateSetSpec::s2_3(), AncillaCount::Zero);
  EXPECT_EQ(x0.tuple, rx0.tuple);
}

TEST(BurnableCount, WideGateSetsReportLeadingCoefficient) {
  const auto c = asymptotic_count_burnable(50, Workload::Rx, GateSetSpec::s2_m(5), AncillaCount::One);
  EXPECT_FALSE(c.exact);
  EXPECT_NEAR(c.leading, 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(asymptotic_count_burnable(50, Workload::X, GateSetSpec::s2_m(6), AncillaCount::One).leading, 1.0, 1e-12);
  EXPECT_NEAR(asymptotic_count_burnable(50, Workload::Rx, GateSetSpec::s2_m(4), AncillaCount::Zero).leading, 8.0,
              1e-12);
}

TEST(Gdc, DirectEvaluation) {
  EXPECT_DOUBLE_EQ(gdc({{1, 40}, {2, 12}}, {{1, 1.0}, {2, 1.0}}), 0.0);
  EXPECT_NEAR(gdc({{2, 10}}, {{2, 0.99}}), 10 * -std::log(0.99), 1e-15);
  EXPECT_NEAR(gdc({{2, 10}}, {{2, 0.99}}), 0.1005, 1e-4);
}

TEST(Gdc, RejectsBadInput) {
  EXPECT_THROW(gdc({{2, 1}}, {{2, 0.0}}), Error);
  EXPECT_THROW(gdc({{2, 1}}, {{2, 1.5}}), Error);
  EXPECT_THROW(gdc({{3, 1}}, {{2, 0.9}}), Error);
  EXPECT_THROW(gdc({{2, -1}}, {{2, 0.9}}), Error);
  // Zero counts need no fidelity.
  EXPECT_DOUBLE_EQ(gdc({{3, 0}}, {{2, 0.9}}), 0.0);
}

TEST(Gdc, LinearAdditiveAndMonotone) {
  Gen gen(19);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<int, long long> a, b, sum, twice;
    std::map<int, double> f;
    for (int arity = 1; arity <= 3; ++arity) {
      a[arity] = gen.integer(0, 500);
      b[arity] = gen.integer(0, 500);
      sum[arity] = a[arity] + b[arity];
      twice[arity] = 2 * a[arity];
      f[arity] = gen.real(0.5, 1.0);
    }
    EXPECT_NEAR(gdc(sum, f), gdc(a, f) + gdc(b, f), 1e-9);
    EXPECT_NEAR(gdc(twice, f), 2 * gdc(a, f), 1e-9);
    const int k = gen.integer(1, 3);
    auto better = f;
    better[k] = std::min(1.0, f[k] + gen.real(1e-6, 0.1));
    EXPECT_LE(gdc(a, better), gdc(a, f) + 1e-12);
    if (a[k] > 0) EXPECT_LT(gdc(a, better), gdc(a, f));
  }
}

TEST(Threshold, RequirementTexts) {
  EXPECT_EQ(threshold_requirement(3).text(), "F3 > F1^2 F2^2");
  EXPECT_EQ(threshold_requirement(4).text(), "F4 > F3^2");
  EXPECT_EQ(threshold_requirement(5).text(), "F5^2 > F4^3");
  EXPECT_EQ(threshold_requirement(8).text(), "F8^5 > F7^6");
  EXPECT_THROW(threshold_requirement(2), Error);
}

TEST(Threshold, CenterAndFirstColumns) {
  const auto c = threshold_chain(0.999, 0.99);
  EXPECT_NEAR(100 * c.at(3), 97.8, 0.05);
  EXPECT_NEAR(100 * c.at(4), 95.7, 0.05);
  EXPECT_NEAR(100 * c.at(5), 93.6, 0.05);
  // The chain gives 91.5 for the six-line gate.
  EXPECT_NEAR(100 * c.at(6), 91.5, 0.05);
  const auto low = threshold_chain(0.95, 0.90);
  const double want[] = {73, 53, 39, 29, 21, 15};
  for (int m = 3; m <= 8; ++m) EXPECT_NEAR(100 * low.at(m), want[m - 3], 0.5) << m;
  const auto one = threshold_chain(1.0, 1.0);
  for (int m = 3; m <= 8; ++m) EXPECT_DOUBLE_EQ(one.at(m), 1.0);
}

TEST(Threshold, ClosedFormAndMonotone) {
  Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const double f1 = gen.real(0.8, 0.99999), f2 = gen.real(0.8, 0.99999);
    const auto c = threshold_chain(f1, f2, 10);
    for (int m = 4; m <= 10; ++m) {
      const double closed = std::pow(f1 * f2, 2.0 * (m - 2));
      EXPECT_NEAR(c.at(m) / closed, 1.0, 1e-12);
      EXPECT_LT(c.at(m), c.at(m - 1));
      EXPECT_GT(c.at(m), 0.0);
    }
  }
}

TEST(Threshold, ChainSitsOnRequirementBoundary) {
  const auto c = threshold_chain(0.99, 0.95, 8);
  std::map<int, double> f{{1, 0.99}, {2, 0.95}};
  for (int m = 3; m <= 8; ++m) {
    f[m - 1] = m == 3 ? f[2] : c.at(m - 1);
    f[m] = c.at(m) * (1 + 1e-9);
    EXPECT_TRUE(threshold_requirement(m).satisfied(f)) << m;
    f[m] = c.at(m) * (1 - 1e-9);
    EXPECT_FALSE(threshold_requirement(m).satisfied(f)) << m;
  }
}

TEST(Threshold, RejectsBadFidelities) {
  EXPECT_THROW(threshold_chain(0.0, 0.9), Error);
  EXPECT_THROW(threshold_chain(0.9, 1.1), Error);
  EXPECT_THROW(threshold_chain(0.9, 0.9, 2), Error);
}

TEST(Dominance, PinnedExamples) {
  const auto s22 = GateSetSpec::s2_2(0.999, 0.99);
  EXPECT_TRUE(gateset_dominates(GateSetSpec::s2_3(0.999, 0.99, 0.99), s22, Workload::Rx, AncillaCount::One));
  EXPECT_FALSE(gateset_dominates(GateSetSpec::s2_3(0.999, 0.99, 0.97), s22, Workload::Rx, AncillaCount::One));
  EXPECT_FALSE(gateset_dominates(s22, s22, Workload::Rx, AncillaCount::One));
}

TEST(Dominance, FlipsAtThreshold) {
  Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const double f1 = gen.real(0.9, 0.9999), f2 = gen.real(0.9, 0.9999);
    const auto s22 = GateSetSpec::s2_2(f1, f2);
    const double t = threshold_chain(f1, f2).at(3);
    const auto above = GateSetSpec::s2_3(f1, f2, std::min(1.0, t * (1 + 1e-6)));
    const auto below = GateSetSpec::s2_3(f1, f2, t * (1 - 1e-6));
    EXPECT_TRUE(gateset_dominates(above, s22, Workload::Rx, AncillaCount::One));
    EXPECT_FALSE(gateset_dominates(below, s22, Workload::Rx, AncillaCount::One));
    EXPECT_FALSE(gateset_dominates(s22, above, Workload::Rx, AncillaCount::One));
  }
}

}  // namespace
}  // namespace mcqaoa
