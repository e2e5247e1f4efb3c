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

#include "core/conditional.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "core/error.hpp"
#include "core/spectra.hpp"

namespace mfspec {

namespace {

constexpr int kMaxNewton = 200;
constexpr double kPrimalTol = 1e-13;
constexpr double kDualTol = 1e-10;

struct Problem {
  const BlockGraph& graph;
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd xi;  // xi on edges
};

Eigen::VectorXd state_mass(const BlockGraph& g, const Eigen::VectorXd& nu) {
  Eigen::VectorXd pi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.state_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) pi(g.edges()[e].from) += nu(static_cast<Eigen::Index>(e));
  return pi;
}

// Gradient of F(nu) = sum nu log(nu / pi) - sum nu xi, the negated objective.
Eigen::VectorXd gradient(const Problem& p, const Eigen::VectorXd& nu) {
  const Eigen::VectorXd pi = state_mass(p.graph, nu);
  Eigen::VectorXd g(nu.size());
  for (Eigen::Index e = 0; e < nu.size(); ++e) {
    g(e) = std::log(nu(e) / pi(p.graph.edges()[e].from)) - p.xi(e);
  }
  return g;
}

double residual_norm(const Problem& p, const Eigen::VectorXd& nu, const Eigen::VectorXd& lambda) {
  const Eigen::VectorXd dual = gradient(p, nu) + p.a.transpose() * lambda;
  const Eigen::VectorXd primal = p.a * nu - p.b;
  return std::sqrt(dual.squaredNorm() + primal.squaredNorm());
}

}  // namespace

ConditionalSolution maximize_conditional(const Sft& sft, const VectorPotential& level, const Potential& xi,
                                         int order) {
  const int depth = std::max(level.depth(), xi.depth());
  if (order < 1) fail(ErrorCode::InvalidArgument, "Markov order must be positive");
  if (depth > order + 1) {
    fail(ErrorCode::DepthMismatch, "order-" + std::to_string(order) + " measures cannot see depth-" +
                                       std::to_string(depth) + " potentials");
  }
  const BlockGraph g(sft, order);
  const auto E = static_cast<Eigen::Index>(g.edge_count());
  const auto S = static_cast<Eigen::Index>(g.state_count());
  const auto d = static_cast<Eigen::Index>(level.dim());

  // Rows: total mass, flow balance for all states but the last, level integrals.
  const Eigen::Index rows = 1 + (S - 1) + d;
  Problem p{g, Eigen::MatrixXd::Zero(rows, E), Eigen::VectorXd::Zero(rows), Eigen::VectorXd(E)};
  p.a.row(0).setOnes();
  p.b(0) = 1.0;
  for (Eigen::Index e = 0; e < E; ++e) {
    const auto& edge = g.edges()[e];
    if (edge.to < S - 1) p.a(1 + edge.to, e) += 1.0;
    if (edge.from < S - 1) p.a(1 + edge.from, e) -= 1.0;
    for (Eigen::Index i = 0; i < d; ++i) p.a(S + i, e) = g.edge_value(level[i], static_cast<int>(e));
    p.xi(e) = g.edge_value(xi, static_cast<int>(e));
  }

  Eigen::VectorXd nu = Eigen::VectorXd::Constant(E, 1.0 / static_cast<double>(E));
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(rows);
  ConditionalSolution out;
  double res = residual_norm(p, nu, lambda);
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(E + rows, E + rows);
  for (; out.iterations < kMaxNewton; ++out.iterations) {
    const Eigen::VectorXd grad = gradient(p, nu);
    const Eigen::VectorXd primal = p.a * nu - p.b;
    const Eigen::VectorXd dual = grad + p.a.transpose() * lambda;
    if (primal.lpNorm<Eigen::Infinity>() <= kPrimalTol && dual.lpNorm<Eigen::Infinity>() <= kDualTol) {
      out.converged = true;
      break;
    }
    // Hessian: diag(1/nu) minus (1/pi_s) on pairs of edges leaving state s.
    const Eigen::VectorXd pi = state_mass(g, nu);
    kkt.setZero();
    for (Eigen::Index e = 0; e < E; ++e) {
      kkt(e, e) = 1.0 / nu(e);
      for (int f : g.out_edges(g.edges()[e].from)) kkt(e, f) -= 1.0 / pi(g.edges()[e].from);
    }
    kkt.topRightCorner(E, rows) = p.a.transpose();
    kkt.bottomLeftCorner(rows, E) = p.a;
    Eigen::VectorXd rhs(E + rows);
    rhs.head(E) = -dual;
    rhs.tail(rows) = -primal;
    const Eigen::VectorXd step = kkt.completeOrthogonalDecomposition().solve(rhs);
    const Eigen::VectorXd dnu = step.head(E);
    const Eigen::VectorXd dlambda = step.tail(rows);

    double t = 1.0;
    for (Eigen::Index e = 0; e < E; ++e) {
      if (dnu(e) < 0.0) t = std::min(t, 0.99 * nu(e) / -dnu(e));
    }
    bool moved = false;
    for (int k = 0; k < 60; ++k, t *= 0.5) {
      const Eigen::VectorXd trial = nu + t * dnu;
      if ((trial.array() <= 0.0).any()) continue;
      const double r = residual_norm(p, trial, lambda + t * dlambda);
      if (r <= (1.0 - 0.01 * t) * res || (k > 40 && r <= res)) {
        nu = trial;
        lambda += t * dlambda;
        res = r;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  const Eigen::VectorXd pi = state_mass(g, nu);
  double h = 0.0;
  double integral_xi = 0.0;
  for (Eigen::Index e = 0; e < E; ++e) {
    h -= nu(e) * std::log(nu(e) / pi(g.edges()[e].from));
    integral_xi += nu(e) * p.xi(e);
  }
  out.entropy = h;
  out.value = h + integral_xi;
  out.primal_residual = (p.a * nu - p.b).lpNorm<Eigen::Infinity>();
  out.dual_residual = (gradient(p, nu) + p.a.transpose() * lambda).lpNorm<Eigen::Infinity>();

  if (out.primal_residual <= 1e-10) {
    std::vector<double> kernel(static_cast<std::size_t>(E));
    std::vector<double> stationary(static_cast<std::size_t>(S));
    const double total = pi.sum();
    for (Eigen::Index s = 0; s < S; ++s) stationary[s] = pi(s) / total;
    for (Eigen::Index e = 0; e < E; ++e) kernel[e] = nu(e) / pi(g.edges()[e].from);
    try {
      out.measure.emplace(sft, order, std::move(kernel), std::move(stationary));
    } catch (const Error&) {
      out.measure.reset();
    }
  }
  return out;
}

SpectrumPoint conditional_variational(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                      const Potential& xi, std::span<const double> alpha, int order) {
  const ConditionReport q = check_condition_q(sft, phi, psi);
  if (!q.passed) fail(ErrorCode::ConditionQViolated, q.reason);
  const int depth = std::max({phi.depth(), psi.depth(), xi.depth()});
  if (depth > order + 1) {
    fail(ErrorCode::DepthMismatch, "order-" + std::to_string(order) + " measures cannot see depth-" +
                                       std::to_string(depth) + " potentials");
  }
  const LevelGeometry geo = level_geometry(sft, phi, psi, alpha);
  SpectrumPoint pt;
  pt.alpha.assign(alpha.begin(), alpha.end());
  pt.status = geo.status;
  if (geo.status == PointStatus::Outside) {
    pt.value = ExtendedReal::neg_inf();
    return pt;
  }
  const ConditionalSolution sol = maximize_conditional(sft, phi.minus_scaled(alpha, psi), xi, order);
  pt.iterations = sol.iterations;
  if (sol.primal_residual > 1e-8) {
    pt.value = ExtendedReal::neg_inf();
    pt.status = PointStatus::Outside;
    return pt;
  }
  if (!sol.converged && pt.status == PointStatus::Interior) {
    fail(ErrorCode::NonConvergence, "constrained entropy maximization did not converge");
  }
  pt.value = ExtendedReal(sol.value);
  return pt;
}

}  // namespace mfspec
