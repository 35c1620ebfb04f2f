// SPDX-License-Identifier: Apache-2.0
//
// vlcoris: reflector-assisted indoor visible light communication simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace vlcoris {

// minimize  c^T x   subject to  A x <= b,  0 <= x <= upper.
struct LinearProgram {
  int vars = 0;
  std::vector<double> objective;
  std::vector<double> a;  // row-major, rows() x vars
  std::vector<double> b;
  std::vector<double> upper;

  LinearProgram() = default;
  explicit LinearProgram(int n)
      : vars(n), objective(n, 0.0), upper(n, std::numeric_limits<double>::infinity()) {}

  int rows() const { return static_cast<int>(b.size()); }
  void add_row(std::span<const double> coeffs, double rhs);
  std::span<const double> row(int i) const {
    return {a.data() + static_cast<std::size_t>(i) * vars, static_cast<std::size_t>(vars)};
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double value = 0.0;
  int pivots = 0;
};

struct LpOptions {
  double tolerance = 1e-9;
  int max_pivots = 200000;
};

// Two-phase dense simplex on a condensed tableau. Dantzig pricing, switching
// to Bland's rule after 2 * (rows + cols) pivots without objective progress.
// Throws std::runtime_error if the returned vertex fails its own optimality
// certificate.
LpSolution lp_solve(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace vlcoris
