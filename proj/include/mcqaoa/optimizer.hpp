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

#ifndef MCQAOA_OPTIMIZER_HPP
#define MCQAOA_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "mcqaoa/ir.hpp"

namespace mcqaoa {

struct OptimizeOptions {
  // 0 means 500 * dimension.
  long max_evals = 0;
  double tol = 1e-4;
  double initial_step = 0.5;
};

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  long evals = 0;
  bool budget_exhausted = false;
};

// Nelder-Mead maximization. Stops when the spread of simplex values falls
// below tol or the evaluation budget runs out.
inline OptimizeResult optimize(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& x0, OptimizeOptions opt = {}) {
  const std::size_t n = x0.size();
  const long budget = opt.max_evals > 0 ? opt.max_evals : 500L * static_cast<long>(std::max<std::size_t>(n, 1));
  OptimizeResult res;
  auto eval = [&](const std::vector<double>& x) {
    ++res.evals;
    const double v = f(x);
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "objective returned non-finite value");
    return -v;  // minimize internally
  };
  if (n == 0) {
    res.x = x0;
    res.value = -eval(x0);
    return res;
  }

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
  };
  auto point = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = c[i] + t * (w[i] - c[i]);
    return p;
  };

  while (true) {
    sort_simplex();
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::abs(vals[worst] - vals[best]) < opt.tol) break;
    if (res.evals >= budget) {
      res.budget_exhausted = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[order[k]][i] / static_cast<double>(n);
    }
    const auto xr = point(centroid, pts[worst], -1.0);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const auto xe = point(centroid, pts[worst], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const auto xc = outside ? point(centroid, xr, 0.5) : point(centroid, pts[worst], 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t i = order[k];
      pts[i] = point(pts[best], pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }
  sort_simplex();
  res.x = pts[order.front()];
  res.value = -vals[order.front()];
  return res;
}

}  // namespace mcqaoa

#endif  // MCQAOA_OPTIMIZER_HPP
