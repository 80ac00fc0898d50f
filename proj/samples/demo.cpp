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

// Decomposes one partial mixer three ways, checks each against the ideal
// gate, then runs DQVA on the Petersen graph.

#include <iostream>

#include "mcqaoa/decomposer.hpp"
#include "mcqaoa/equivalence.hpp"
#include "mcqaoa/graphs.hpp"
#include "mcqaoa/metrics.hpp"
#include "mcqaoa/qaoa.hpp"
#include "mcqaoa/validate.hpp"

int main() {
  using namespace mcqaoa;
  const int n = 4;
  const Gate ideal = Gate::mcrx(iota_lines(0, n), n, 0.9);
  const std::map<int, double> fid{{1, 0.999}, {2, 0.99}, {3, 0.97}};
  for (const auto& [name, gs] : {std::pair{"s2_2", GateSetSpec::s2_2()}, std::pair{"s2_3", GateSetSpec::s2_3()}}) {
    const Circuit c = decompose(ideal, gs, AncillaBudget::one(AncillaRegime::Zeroed));
    const auto h = entangling_gate_histogram(c);
    auto withsingles = h;
    withsingles[1] = single_count(c);
    std::cout << name << " one zeroed ancilla: " << entangling_total(c) << " entangling, gdc "
              << gdc(withsingles, fid) << ", deviation " << contract_deviation(c, ideal) << "\n";
  }

  const Graph g = petersen_graph();
  DqvaOptions opt;
  const DqvaResult r = dqva_outer_loop(g, 5, opt, 2026);
  std::cout << "petersen: dqva found " << r.best_set.size() << " of "
            << brute_force_mis(g).size << " after " << r.rounds << " rounds\n";
  return 0;
}
