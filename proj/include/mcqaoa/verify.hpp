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

#ifndef MCQAOA_VERIFY_HPP
#define MCQAOA_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mcqaoa/decomposer.hpp"
#include "mcqaoa/equivalence.hpp"
#include "mcqaoa/ir.hpp"
#include "mcqaoa/qaoa.hpp"

namespace mcqaoa {

struct VerifyOptions {
  int min_controls = 1;
  int max_controls = 5;
  // Random angles per rotation case; X cases run once.
  int angles = 3;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  // Scheme whose circuits lose their middle gate (negative control).
  std::string fault;
};

struct VerifyOutcome {
  std::string scheme;
  int n = 0;
  double deviation = 0.0;
  bool pass = false;
};

// Largest control count the oracle accepts.
inline constexpr int kMaxVerifyControls = 6;

namespace detail {

enum class Contract : std::uint8_t { Exact, Burnable };

struct VerifyCase {
  std::string scheme;
  int min_n = 1;
  bool rotation = true;
  Contract contract = Contract::Exact;
  // Returns the circuit and the ideal gate on its lines.
  std::function<std::pair<Circuit, Gate>(int n, double theta)> build;
};

inline Gate ideal_rx(int n, double theta) { return Gate::mcrx(iota_lines(0, n), n, theta); }
inline Gate ideal_x(int n) { return Gate::mcx(iota_lines(0, n), n); }

// A star graph's centre has every other node as a neighbour.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < leaves; ++v) e.emplace_back(v, leaves);
  return Graph(leaves + 1, e);
}

inline std::vector<VerifyCase> verify_cases() {
  std::vector<VerifyCase> cs;
  cs.push_back({"su2_split", 1, true, Contract::Exact,
                [](int n, double t) { return std::pair{su2_split(n, t), ideal_rx(n, t)}; }});
  cs.push_back({"half_split_zeroed", 2, true, Contract::Exact,
                [](int n, double t) { return std::pair{half_split_zeroed(n, t), ideal_rx(n, t)}; }});
  cs.push_back({"borrowed_ladder", 3, false, Contract::Exact, [](int n, double) {
                  return std::pair{borrowed_ladder(n, iota_lines(n + 1, n - 2)), ideal_x(n)};
                }});
  cs.push_back({"generalized_ladder_m4", 3, false, Contract::Exact, [](int n, double) {
                  return std::pair{generalized_ladder(n, 4, iota_lines(n + 1, std::max(ladder_borrow_need(n, 3), 1))),
                                   ideal_x(n)};
                }});
  cs.push_back({"n_ancilla_ladder", 3, true, Contract::Exact,
                [](int n, double t) { return std::pair{n_ancilla_ladder(n, t), ideal_rx(n, t)}; }});
  cs.push_back({"half_split_borrowed_x", 3, false, Contract::Exact,
                [](int n, double) { return std::pair{half_split_borrowed_x(n), ideal_x(n)}; }});
  cs.push_back({"burnable_ladder", 3, false, Contract::Burnable,
                [](int n, double) { return std::pair{burnable_ladder(n), ideal_x(n)}; }});
  cs.push_back({"partial_mixer", 1, true, Contract::Exact, [](int n, double t) {
                  const Graph g = star_graph(n);
                  return std::pair{partial_mixer(g, n, t), compact_partial_mixer(g, n, t)};
                }});

  const std::vector<GateSetSpec> sets{GateSetSpec::s2_2(), GateSetSpec::s2_3(), GateSetSpec::s2_m(4)};
  std::vector<AncillaBudget> budgets{AncillaBudget::none()};
  for (auto r : {AncillaRegime::Zeroed, AncillaRegime::Borrowed, AncillaRegime::Burnable}) {
    budgets.push_back(AncillaBudget::one(r));
    budgets.push_back(AncillaBudget::per_control(r));
  }
  for (const auto& gs : sets) {
    for (const auto& b : budgets) {
      const std::string tag = gs.name() + "/" + budget_name(b);
      const Contract contract = b.regime == AncillaRegime::Burnable ? Contract::Burnable : Contract::Exact;
      cs.push_back({"decompose[" + tag + "/rx]", 1, true, contract, [gs, b](int n, double t) {
                      return std::pair{decompose(ideal_rx(n, t), gs, b), ideal_rx(n, t)};
                    }});
      if (b.count != AncillaCount::Zero) {
        cs.push_back({"decompose[" + tag + "/x]", 1, false, contract, [gs, b](int n, double) {
                        return std::pair{decompose(ideal_x(n), gs, b), ideal_x(n)};
                      }});
        cs.push_back({"paired_mixer[" + tag + "]", 1, true, Contract::Exact, [gs, b](int n, double t) {
                        return std::pair{paired_mixer(n, t, gs, b), ideal_rx(n, t)};
                      }});
      }
    }
  }
  return cs;
}

}  // namespace detail

inline std::vector<std::string> verify_scheme_names() {
  std::vector<std::string> out;
  for (const auto& c : detail::verify_cases()) out.push_back(c.scheme);
  return out;
}

// Checks every scheme for control counts in [min_controls, max_controls]
// against the ideal gate under the scheme's ancilla contract.
inline std::vector<VerifyOutcome> run_verification(const VerifyOptions& opt) {
  if (opt.max_controls > kMaxVerifyControls) {
    throw Error(ErrorCode::kInvalidArgument,
                "max controls must be <= " + std::to_string(kMaxVerifyControls) + " (oracle size)");
  }
  if (opt.min_controls < 1 || opt.min_controls > opt.max_controls) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= min controls <= max controls");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  std::vector<VerifyOutcome> out;
  for (const auto& vc : detail::verify_cases()) {
    for (int n = std::max(opt.min_controls, vc.min_n); n <= opt.max_controls; ++n) {
      VerifyOutcome o{vc.scheme, n, 0.0, true};
      const int reps = vc.rotation ? std::max(opt.angles, 1) : 1;
      for (int r = 0; r < reps; ++r) {
        auto [c, ideal] = vc.build(n, angle(rng));
        if (opt.fault == vc.scheme && !c.empty()) {
          auto& gates = c.mutable_gates();
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(gates.size() / 2));
        }
        const double dev = vc.contract == detail::Contract::Burnable ? burnable_deviation(c, ideal)
                                                                     : contract_deviation(c, ideal);
        o.deviation = std::max(o.deviation, dev);
      }
      o.pass = o.deviation <= opt.tol;
      out.push_back(o);
    }
  }
  return out;
}

}  // namespace mcqaoa

#endif  // MCQAOA_VERIFY_HPP
