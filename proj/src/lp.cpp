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

#include "vlcoris/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlcoris {

void LinearProgram::add_row(std::span<const double> coeffs, double rhs) {
  if (static_cast<int>(coeffs.size()) != vars) throw std::invalid_argument("row width mismatch");
  a.insert(a.end(), coeffs.begin(), coeffs.end());
  b.push_back(rhs);
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "infeasible";
}

namespace {

// Dictionary  x_B(i) = rhs_i - sum_j t(i, j) x_N(j),  z = z0 + sum_j cost_j x_N(j)  (maximized).
class Dictionary {
 public:
  Dictionary(int rows, int cols) : m_(rows), n_(cols), t_(std::size_t(rows) * cols, 0.0),
                                   rhs_(rows, 0.0), cost_(cols, 0.0), basic_(rows), nonbasic_(cols) {}

  int rows() const { return m_; }
  int cols() const { return n_; }
  double& t(int i, int j) { return t_[std::size_t(i) * n_ + j]; }
  double t(int i, int j) const { return t_[std::size_t(i) * n_ + j]; }
  double& rhs(int i) { return rhs_[i]; }
  double& cost(int j) { return cost_[j]; }
  double& z0() { return z0_; }
  int& basic(int i) { return basic_[i]; }
  int& nonbasic(int j) { return nonbasic_[j]; }

  void pivot(int r, int s) {
    const double p = t(r, s);
    const double inv = 1.0 / p;
    for (int j = 0; j < n_; ++j) t(r, j) *= inv;
    t(r, s) = inv;
    rhs_[r] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = t(i, s);
      if (f == 0.0) continue;
      for (int j = 0; j < n_; ++j) t(i, j) -= f * t(r, j);
      t(i, s) = -f * inv;
      rhs_[i] -= f * rhs_[r];
    }
    const double c = cost_[s];
    if (c != 0.0) {
      for (int j = 0; j < n_; ++j) cost_[j] -= c * t(r, j);
      cost_[s] = -c * inv;
      z0_ += c * rhs_[r];
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Drops nonbasic column s.
  void remove_column(int s) {
    std::vector<double> nt(std::size_t(m_) * (n_ - 1));
    for (int i = 0; i < m_; ++i)
      for (int j = 0, jj = 0; j < n_; ++j)
        if (j != s) nt[std::size_t(i) * (n_ - 1) + jj++] = t(i, j);
    t_ = std::move(nt);
    cost_.erase(cost_.begin() + s);
    nonbasic_.erase(nonbasic_.begin() + s);
    --n_;
  }

 private:
  int m_;
  int n_;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<double> cost_;
  double z0_ = 0.0;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
};

enum class Outcome { optimal, unbounded, stalled };

Outcome run_simplex(Dictionary& d, const LpOptions& opt, int& pivots) {
  const double tol = opt.tolerance;
  const int stall_limit = 2 * (d.rows() + d.cols());
  bool bland = false;
  int stall = 0;
  double best = d.z0();
  while (true) {
    int s = -1;
    if (bland) {
      int label = -1;
      for (int j = 0; j < d.cols(); ++j)
        if (d.cost(j) > tol && (label < 0 || d.nonbasic(j) < label)) {
          s = j;
          label = d.nonbasic(j);
        }
    } else {
      double top = tol;
      for (int j = 0; j < d.cols(); ++j)
        if (d.cost(j) > top) {
          top = d.cost(j);
          s = j;
        }
    }
    if (s < 0) return Outcome::optimal;

    int r = -1;
    double ratio = 0.0;
    for (int i = 0; i < d.rows(); ++i) {
      const double a = d.t(i, s);
      if (a <= tol) continue;
      const double q = std::max(d.rhs(i), 0.0) / a;
      if (r < 0 || q < ratio - 1e-12 * (1.0 + ratio) ||
          (q <= ratio + 1e-12 * (1.0 + ratio) && d.basic(i) < d.basic(r))) {
        r = i;
        ratio = q;
      }
    }
    if (r < 0) return Outcome::unbounded;

    d.pivot(r, s);
    if (++pivots > opt.max_pivots) return Outcome::stalled;
    if (d.z0() > best + tol * (1.0 + std::abs(best))) {
      best = d.z0();
      stall = 0;
    } else if (++stall >= stall_limit) {
      bland = true;
    }
  }
}

}  // namespace

LpSolution lp_solve(const LinearProgram& lp, const LpOptions& options) {
  const int n = lp.vars;
  const double tol = options.tolerance;

  // Gather rows, including finite upper bounds, each scaled to unit max coefficient.
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (int i = 0; i < lp.rows(); ++i) {
    auto r = lp.row(i);
    rows.emplace_back(r.begin(), r.end());
    rhs.push_back(lp.b[i]);
  }
  for (int j = 0; j < n; ++j) {
    if (j < static_cast<int>(lp.upper.size()) && std::isfinite(lp.upper[j])) {
      std::vector<double> r(n, 0.0);
      r[j] = 1.0;
      rows.push_back(std::move(r));
      rhs.push_back(lp.upper[j]);
    }
  }
  const int m = static_cast<int>(rows.size());
  for (int i = 0; i < m; ++i) {
    double big = 0.0;
    for (double v : rows[i]) big = std::max(big, std::abs(v));
    if (big > 0.0) {
      for (double& v : rows[i]) v /= big;
      rhs[i] /= big;
    }
  }

  // Labels: 0..n-1 structural, n..n+m-1 slack, n+m auxiliary.
  const int aux = n + m;
  Dictionary d(m, n + 1);
  for (int j = 0; j < n; ++j) d.nonbasic(j) = j;
  d.nonbasic(n) = aux;
  int worst = -1;
  for (int i = 0; i < m; ++i) {
    d.basic(i) = n + i;
    for (int j = 0; j < n; ++j) d.t(i, j) = rows[i][j];
    d.t(i, n) = -1.0;
    d.rhs(i) = rhs[i];
    if (rhs[i] < 0.0 && (worst < 0 || rhs[i] < rhs[worst])) worst = i;
  }

  LpSolution sol;
  int pivots = 0;
  if (worst >= 0) {
    d.cost(n) = -1.0;
    d.pivot(worst, n);
    ++pivots;
    const Outcome o = run_simplex(d, options, pivots);
    if (o == Outcome::stalled) throw std::runtime_error("simplex pivot limit reached in phase 1");
    if (d.z0() < -tol * 10.0) {
      sol.status = LpStatus::infeasible;
      sol.pivots = pivots;
      return sol;
    }
  }

  // Move the auxiliary variable out of the basis, then drop its column.
  for (int i = 0; i < m; ++i) {
    if (d.basic(i) != aux) continue;
    int s = -1;
    for (int j = 0; j < d.cols(); ++j)
      if (std::abs(d.t(i, j)) > tol && (s < 0 || std::abs(d.t(i, j)) > std::abs(d.t(i, s)))) s = j;
    if (s >= 0) {
      d.pivot(i, s);
      ++pivots;
    }
    break;
  }
  for (int j = 0; j < d.cols(); ++j) {
    if (d.nonbasic(j) == aux) {
      d.remove_column(j);
      break;
    }
  }

  // Phase 2 objective: maximize -c^T x in terms of the current nonbasics,
  // normalized so the pricing tolerance is relative.
  double cscale = 0.0;
  for (int j = 0; j < n; ++j) cscale = std::max(cscale, std::abs(lp.objective[j]));
  if (cscale == 0.0) cscale = 1.0;
  for (int j = 0; j < d.cols(); ++j) d.cost(j) = 0.0;
  d.z0() = 0.0;
  for (int j = 0; j < d.cols(); ++j) {
    const int v = d.nonbasic(j);
    if (v < n) d.cost(j) += -lp.objective[v] / cscale;
  }
  for (int i = 0; i < m; ++i) {
    const int v = d.basic(i);
    if (v >= n) continue;
    const double c = -lp.objective[v] / cscale;
    if (c == 0.0) continue;
    d.z0() += c * d.rhs(i);
    for (int j = 0; j < d.cols(); ++j) d.cost(j) -= c * d.t(i, j);
  }

  const Outcome o = run_simplex(d, options, pivots);
  if (o == Outcome::stalled) throw std::runtime_error("simplex pivot limit reached in phase 2");
  sol.pivots = pivots;
  if (o == Outcome::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (d.basic(i) < n) sol.x[d.basic(i)] = std::max(d.rhs(i), 0.0);
  sol.value = 0.0;
  for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];

  // Certificate: primal feasibility of the recovered point and dual feasibility
  // of the final dictionary.
  for (int i = 0; i < m; ++i) {
    double lhs = 0.0;
    double mag = std::abs(rhs[i]);
    for (int j = 0; j < n; ++j) {
      lhs += rows[i][j] * sol.x[j];
      mag += std::abs(rows[i][j] * sol.x[j]);
    }
    if (lhs - rhs[i] > 1e-6 * (1.0 + mag))
      throw std::runtime_error("simplex returned an infeasible vertex");
  }
  for (int j = 0; j < d.cols(); ++j)
    if (d.cost(j) > tol * 10.0) throw std::runtime_error("simplex returned a non-optimal vertex");

  sol.status = LpStatus::optimal;
  return sol;
}

}  // namespace vlcoris
