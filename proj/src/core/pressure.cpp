// Copyright 2026 The mfspec Authors.
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

#include "core/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "core/error.hpp"

namespace mfspec {

namespace {

constexpr double kCollatzWidth = 1e-13;
constexpr int kMaxIterations = 100000;

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -HUGE_VAL) return a;
  return a + std::log1p(std::exp(b - a));
}

struct Link {
  int other;
  double log_weight;
};

// Each row lists (column, log entry) of a nonnegative irreducible matrix.
using Rows = std::vector<std::vector<Link>>;

std::vector<double> log_apply(const Rows& rows, const std::vector<double>& lx) {
  std::vector<double> lz(rows.size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    double top = -HUGE_VAL;
    for (const Link& l : rows[s]) top = std::max(top, l.log_weight + lx[l.other]);
    double sum = 0.0;
    for (const Link& l : rows[s]) sum += std::exp(l.log_weight + lx[l.other] - top);
    lz[s] = top + std::log(sum);
  }
  return lz;
}

// Start vector from a dense eigen-decomposition; the power iteration below
// certifies whatever it is given.
std::vector<double> initial_guess(const Rows& rows, double shift) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  std::vector<double> lx(rows.size(), 0.0);
  if (n == 1) return lx;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    for (const Link& l : rows[s]) a(s, l.other) += std::exp(l.log_weight - shift);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, true);
  if (solver.info() != Eigen::Success) return lx;
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (solver.eigenvalues()(i).real() > solver.eigenvalues()(best).real()) best = i;
  }
  const Eigen::VectorXcd v = solver.eigenvectors().col(best);
  const double scale = v.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !std::isfinite(scale)) return lx;
  for (Eigen::Index s = 0; s < n; ++s) {
    lx[s] = std::log(std::max(std::abs(v(s)) / scale, 1e-300));
  }
  return lx;
}

struct LogEigen {
  double log_radius;
  std::vector<double> lx;
  int iterations;
};

LogEigen log_power_iteration(const Rows& rows, double shift) {
  std::vector<double> lx = initial_guess(rows, shift);
  double weight_scale = 0.0;
  for (const auto& row : rows) {
    for (const Link& l : row) weight_scale = std::max(weight_scale, std::abs(l.log_weight));
  }
  for (int it = 1; it <= kMaxIterations; ++it) {
    const std::vector<double> lz = log_apply(rows, lx);
    double lo = HUGE_VAL;
    double hi = -HUGE_VAL;
    double vector_scale = 0.0;
    for (std::size_t s = 0; s < lx.size(); ++s) {
      lo = std::min(lo, lz[s] - lx[s]);
      hi = std::max(hi, lz[s] - lx[s]);
      vector_scale = std::max(vector_scale, std::abs(lx[s]));
    }
    // In log scale the Collatz-Wielandt width is relative. Very large log
    // weights carry their own rounding, which bounds what can be certified.
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * (weight_scale + vector_scale);
    if (hi - lo <= kCollatzWidth + rounding) return LogEigen{0.5 * (lo + hi), lx, it};
    // Plain steps repair badly scaled start entries quickly; shifted steps
    // damp the rotation of periodic matrices.
    const bool shifted = it % 2 == 0;
    double top = -HUGE_VAL;
    for (std::size_t s = 0; s < lx.size(); ++s) {
      lx[s] = shifted ? log_add(lz[s], lo + lx[s]) : lz[s];
      top = std::max(top, lx[s]);
    }
    for (double& v : lx) v -= top;
  }
  fail(ErrorCode::NonConvergence, "power iteration did not certify the Perron root within " +
                                      std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

TransferMatrix::TransferMatrix(const Sft& sft, const Potential& phi)
    : graph_(sft, block_length_for_depth(phi.depth())) {
  if (phi.alphabet_size() != sft.alphabet_size()) {
    fail(ErrorCode::InvalidArgument, "potential alphabet does not match the shift");
  }
  log_weights_.resize(graph_.edge_count());
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    log_weights_[e] = graph_.edge_value(phi, static_cast<int>(e));
  }
}

PerronPair perron(const TransferMatrix& matrix) {
  const BlockGraph& g = matrix.graph();
  const auto& lw = matrix.log_weights();
  const double shift = *std::max_element(lw.begin(), lw.end());
  Rows right(g.state_count());
  Rows left(g.state_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    right[edge.from].push_back(Link{edge.to, lw[e]});
    left[edge.to].push_back(Link{edge.from, lw[e]});
  }
  LogEigen r = log_power_iteration(right, shift);
  LogEigen l = log_power_iteration(left, shift);
  // Normalize sum_s l_s r_s = 1.
  double top = -HUGE_VAL;
  for (std::size_t s = 0; s < r.lx.size(); ++s) top = std::max(top, l.lx[s] + r.lx[s]);
  double sum = 0.0;
  for (std::size_t s = 0; s < r.lx.size(); ++s) sum += std::exp(l.lx[s] + r.lx[s] - top);
  const double norm = top + std::log(sum);
  for (double& v : l.lx) v -= norm;
  PerronPair out;
  out.log_radius = r.log_radius;
  out.log_right = std::move(r.lx);
  out.log_left = std::move(l.lx);
  out.iterations = r.iterations + l.iterations;
  return out;
}

double pressure(const Sft& sft, const Potential& phi) {
  const TransferMatrix matrix(sft, phi);
  const BlockGraph& g = matrix.graph();
  const auto& lw = matrix.log_weights();
  Rows right(g.state_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    right[g.edges()[e].from].push_back(Link{g.edges()[e].to, lw[e]});
  }
  return log_power_iteration(right, *std::max_element(lw.begin(), lw.end())).log_radius;
}

MarkovMeasure equilibrium_markov(const Sft& sft, const Potential& phi) {
  const TransferMatrix matrix(sft, phi);
  const PerronPair pp = perron(matrix);
  const BlockGraph& g = matrix.graph();
  std::vector<double> kernel(g.edge_count());
  for (std::size_t s = 0; s < g.state_count(); ++s) {
    double row = 0.0;
    for (int e : g.out_edges(static_cast<int>(s))) {
      const auto& edge = g.edges()[e];
      kernel[e] = std::exp(matrix.log_weights()[e] + pp.log_right[edge.to] - pp.log_radius - pp.log_right[s]);
      row += kernel[e];
    }
    for (int e : g.out_edges(static_cast<int>(s))) kernel[e] /= row;
  }
  std::vector<double> stationary(g.state_count());
  double total = 0.0;
  for (std::size_t s = 0; s < stationary.size(); ++s) {
    stationary[s] = std::exp(pp.log_left[s] + pp.log_right[s]);
    total += stationary[s];
  }
  for (double& v : stationary) v /= total;
  return MarkovMeasure(sft, g.block_length(), std::move(kernel), std::move(stationary));
}

std::vector<double> pressure_gradient(const Sft& sft, const VectorPotential& xi, const Potential& xi0,
                                      std::span<const double> q) {
  const MarkovMeasure mu = equilibrium_markov(sft, xi.dot(q) + xi0);
  std::vector<double> out(xi.dim());
  for (std::size_t i = 0; i < xi.dim(); ++i) out[i] = mu.integral(xi[i]);
  return out;
}

Approximation approximate_potential(const Sft& sft, const PotentialOracle& oracle, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "approximation depth must be positive");
  if (!oracle.evaluate || !oracle.variation) fail(ErrorCode::InvalidArgument, "oracle is incomplete");
  const std::size_t m = sft.alphabet_size();
  const int horizon = std::max(oracle.horizon, depth);
  std::uint64_t size = 1;
  for (int i = 0; i < depth; ++i) size *= m;
  std::vector<double> table(size, 0.0);
  for (Word w : enumerate_words(sft, depth)) {
    const std::uint64_t code = word_code(w, m);
    while (static_cast<int>(w.size()) < horizon) w.push_back(sft.successors(w.back()).front());
    table[code] = oracle.evaluate(w);
  }
  return Approximation{Potential(m, depth, std::move(table)), oracle.variation(depth)};
}

double pressure_cover_estimate(const Sft& sft, const Potential& phi, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cover order must be at least 1");
  const auto words = enumerate_words(sft, n + phi.depth() - 1);
  std::vector<double> terms;
  terms.reserve(words.size());
  for (const Word& w : words) terms.push_back(birkhoff_sum(phi, w, n));
  std::sort(terms.begin(), terms.end());
  const double top = terms.back();
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return (std::log(sum) + top) / n;
}

}  // namespace mfspec
