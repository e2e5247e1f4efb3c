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

#include "core/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "core/conditional.hpp"
#include "core/cycles.hpp"
#include "core/error.hpp"
#include "core/optimize.hpp"
#include "core/pressure.hpp"

namespace mfspec {

namespace {

constexpr double kRootWidth = 1e-13;
constexpr int kMaxDoublings = 60;
// Search radius for q when no inradius bound applies.
constexpr double kOpenRadius = 1e6;

double as_double(const ExtendedReal& x) { return x.value(); }

struct ReducedMinimum {
  Eigen::VectorXd q;
  double value;
  int evaluations;
};

// Minimizes a convex f over q = basis * y, |y| <= radius.
ReducedMinimum minimize_reduced(const Eigen::MatrixXd& basis, double radius,
                                const std::function<double(const Eigen::VectorXd&)>& f,
                                const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& grad, bool polish) {
  const Eigen::Index r = basis.cols();
  int evaluations = 0;
  auto fy = [&](const Eigen::VectorXd& y) {
    ++evaluations;
    return f(basis * y);
  };
  if (r == 0) {
    const Eigen::VectorXd q = Eigen::VectorXd::Zero(basis.rows());
    return ReducedMinimum{q, f(q), 1};
  }
  if (r == 1) {
    auto f1 = [&](double s) { return fy(Eigen::VectorXd::Constant(1, s)); };
    const ScalarMinimum m = minimize_convex(f1, radius, 1e-11);
    double s = m.x;
    double value = m.fx;
    if (polish && value < HUGE_VAL) {
      auto g = [&](double v) {
        const Eigen::VectorXd q = basis * Eigen::VectorXd::Constant(1, v);
        return (basis.transpose() * grad(q))(0);
      };
      const double t = newton_polish(g, s, std::max(m.lo, -radius), std::min(m.hi, radius), 1e-9).x;
      const double ft = f1(t);
      if (ft <= value) {
        s = t;
        value = ft;
      }
    }
    return ReducedMinimum{basis * Eigen::VectorXd::Constant(1, s), value, evaluations + m.evaluations};
  }
  auto obj = [&](const Eigen::VectorXd& y, Eigen::VectorXd* g) {
    const Eigen::VectorXd q = basis * y;
    if (g != nullptr) *g = basis.transpose() * grad(q);
    ++evaluations;
    return f(q);
  };
  const DescentResult res = minimize_smooth(obj, Eigen::VectorXd::Zero(r), radius, 1e-9);
  return ReducedMinimum{basis * res.x, res.fx, evaluations};
}

std::span<const double> as_span(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void require_p(const Sft& sft, const Potential& u) {
  const ConditionReport p = check_condition_p(sft, u);
  if (!p.passed) {
    fail(ErrorCode::ConditionPViolated,
         p.reason + (p.witness ? " (witness cycle " + format_word(*p.witness, sft.alphabet_size()) + ")" : ""));
  }
}

void require_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi) {
  const ConditionReport q = check_condition_q(sft, phi, psi);
  if (!q.passed) {
    fail(ErrorCode::ConditionQViolated,
         q.reason + (q.witness ? " (witness cycle " + format_word(*q.witness, sft.alphabet_size()) + ")" : ""));
  }
}

SpectrumPoint with_alpha(std::span<const double> alpha, const LevelGeometry& geo) {
  SpectrumPoint pt;
  pt.alpha.assign(alpha.begin(), alpha.end());
  pt.status = geo.status;
  if (geo.status == PointStatus::Outside) pt.value = ExtendedReal::neg_inf();
  return pt;
}

double search_radius(const LevelGeometry& geo) {
  return geo.status == PointStatus::Interior ? kOpenRadius : 30.0 / std::max(geo.scale, 1e-300);
}

}  // namespace

PiecewiseLinearMap PiecewiseLinearMap::full_branch(std::vector<double> slopes) {
  const std::size_t m = slopes.size();
  return PiecewiseLinearMap{std::move(slopes), std::vector<std::vector<int>>(m, std::vector<int>(m, 1))};
}

std::optional<int> PiecewiseLinearMap::indifferent_branch() const {
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i] == 1.0) return static_cast<int>(i);
  }
  return std::nullopt;
}

CodedMap code_as_sft(const PiecewiseLinearMap& map) {
  if (map.slopes.empty() || map.transitions.size() != map.slopes.size()) {
    fail(ErrorCode::InvalidArgument, "slopes and transitions disagree on the number of branches");
  }
  int unit = 0;
  for (std::size_t i = 0; i < map.slopes.size(); ++i) {
    const double s = map.slopes[i];
    if (!(s >= 1.0) || !std::isfinite(s)) fail(ErrorCode::InvalidArgument, "branch slopes must be at least 1");
    if (s == 1.0) {
      ++unit;
      if (map.transitions[i].size() != map.slopes.size() || map.transitions[i][i] == 0) {
        fail(ErrorCode::InvalidArgument, "a slope-1 branch must contain its fixed point");
      }
    }
  }
  if (unit > 1) fail(ErrorCode::InvalidArgument, "at most one branch may have slope 1");
  std::optional<Sft> sft;
  try {
    sft.emplace(validate_sft(map.transitions));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotIrreducible || e.code() == ErrorCode::EmptyRow) {
      fail(ErrorCode::NotMarkov, e.what());
    }
    throw;
  }
  std::vector<double> u(map.slopes.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::log(map.slopes[i]);
  return CodedMap{*sft, Potential::symbolwise(u)};
}

ConditionReport check_condition_p(const Sft& sft, const Potential& u) {
  ConditionReport report;
  const ValueRange range = potential_range(sft, u);
  const double tol = 1e-12 * (1.0 + std::max(std::abs(range.min), std::abs(range.max)));
  if (range.min < -tol) {
    report.passed = false;
    report.reason = "u takes negative values";
    return report;
  }
  const BlockGraph graph(sft, block_length_for_depth(u.depth()));
  for (const Cycle& c : simple_cycles(graph)) {
    if (c.length() > 1 && std::abs(cycle_mean(graph, c, u)) <= tol) {
      report.passed = false;
      report.witness = c.symbols;
      report.reason = "u vanishes along a cycle that is not a fixed point";
      return report;
    }
  }
  return report;
}

ExtendedReal bowen_root(const Sft& sft, const Potential& eta, const Potential& u) {
  require_p(sft, u);
  // Measures on zero-u cycles keep P(eta - t u) at or above their eta-mean.
  const BlockGraph graph(sft, block_length_for_depth(std::max(eta.depth(), u.depth())));
  const double tol = 1e-12 * (1.0 + sup_norm(sft, u));
  for (const Cycle& c : simple_cycles(graph)) {
    if (std::abs(cycle_mean(graph, c, u)) <= tol && cycle_mean(graph, c, eta) >= -1e-14) {
      return ExtendedReal::pos_inf();
    }
  }
  auto p = [&](double t) { return pressure(sft, eta - t * u); };
  double lo, hi;
  if (p(0.0) > 0.0) {
    lo = 0.0;
    hi = 1.0;
    int j = 0;
    while (p(hi) > 0.0) {
      if (++j > kMaxDoublings) return ExtendedReal::pos_inf();
      lo = hi;
      hi *= 2.0;
    }
  } else {
    hi = 0.0;
    lo = -1.0;
    int j = 0;
    while (p(lo) <= 0.0) {
      if (++j > kMaxDoublings) return ExtendedReal::neg_inf();
      hi = lo;
      lo *= 2.0;
    }
  }
  // Invariant: p(lo) > 0 >= p(hi).
  while (hi - lo > kRootWidth * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (p(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ExtendedReal(0.5 * (lo + hi));
}

ExtendedReal t_u_of_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi, const Potential& u,
                      std::span<const double> alpha, std::span<const double> q) {
  return bowen_root(sft, phi.minus_scaled(alpha, psi).dot(q), u);
}

SpectrumPoint u_dimension_spectrum(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                   const Potential& u, std::span<const double> alpha) {
  require_q(sft, phi, psi);
  require_p(sft, u);
  const LevelGeometry geo = level_geometry(sft, phi, psi, alpha);
  SpectrumPoint pt = with_alpha(alpha, geo);
  if (geo.status == PointStatus::Outside) return pt;
  const VectorPotential level = phi.minus_scaled(alpha, psi);
  auto t_of = [&](const Eigen::VectorXd& q) { return as_double(bowen_root(sft, level.dot(as_span(q)), u)); };
  // dT/dq = int level d(mu) / int u d(mu) at the equilibrium state of <q, level> - T u.
  auto grad = [&](const Eigen::VectorXd& q) {
    const double t = t_of(q);
    const MarkovMeasure mu = equilibrium_markov(sft, level.dot(as_span(q)) - t * u);
    const double denom = mu.integral(u);
    Eigen::VectorXd g(static_cast<Eigen::Index>(level.dim()));
    for (std::size_t i = 0; i < level.dim(); ++i) g(static_cast<Eigen::Index>(i)) = mu.integral(level[i]) / denom;
    return g;
  };
  const ReducedMinimum m = minimize_reduced(geo.origin.basis, search_radius(geo), t_of, grad,
                                            geo.status == PointStatus::Interior);
  pt.iterations = m.evaluations;
  pt.value = m.value == HUGE_VAL ? ExtendedReal::pos_inf() : ExtendedReal(m.value);
  pt.argmin_q = std::vector<double>(m.q.data(), m.q.data() + m.q.size());
  return pt;
}

SpectrumPoint entropy_birkhoff_spectrum(const Sft& sft, const Potential& phi, double alpha) {
  const double a[] = {alpha};
  return predicted(sft, VectorPotential{phi}, VectorPotential{Potential::constant(sft.alphabet_size(), 1.0)},
                   Potential::constant(sft.alphabet_size(), 0.0), a);
}

SpectrumPoint lyapunov_spectrum(const PiecewiseLinearMap& map, double alpha) {
  const CodedMap coded = code_as_sft(map);
  SpectrumPoint pt = entropy_birkhoff_spectrum(coded.sft, coded.log_derivative, alpha);
  if (pt.status == PointStatus::Outside) return pt;
  if (std::abs(alpha) <= kBoundaryTolerance) {
    // Zero exponent: the ratio h / alpha has no finite value to report.
    pt.status = PointStatus::Boundary;
    pt.value = ExtendedReal::pos_inf();
    return pt;
  }
  pt.value = ExtendedReal(pt.value.value() / alpha);
  return pt;
}

SpectrumPoint birkhoff_dimension_spectrum(const PiecewiseLinearMap& map, const Potential& phi, double alpha) {
  const CodedMap coded = code_as_sft(map);
  if (const auto p = map.indifferent_branch()) {
    const Word fixed(static_cast<std::size_t>(phi.depth()), *p);
    const double at_p = phi(fixed);
    if (std::abs(alpha - at_p) <= kBoundaryTolerance) {
      fail(ErrorCode::ExcludedAlpha, "alpha equals the value of phi at the indifferent fixed point");
    }
  }
  const double a[] = {alpha};
  return u_dimension_spectrum(coded.sft, VectorPotential{phi},
                              VectorPotential{Potential::constant(coded.sft.alphabet_size(), 1.0)},
                              coded.log_derivative, a);
}

SpectrumPoint pointwise_dimension_spectrum(const PiecewiseLinearMap& map, const Potential& phi0, double alpha) {
  const CodedMap coded = code_as_sft(map);
  const Sft& sft = coded.sft;
  const Potential& u = coded.log_derivative;
  const double p0 = pressure(sft, phi0);
  const Potential phi = -(std::abs(p0) > kBoundaryTolerance ? phi0 - p0 : phi0);
  const double a[] = {alpha};
  const VectorPotential num{phi};
  const VectorPotential den{u};
  require_q(sft, num, den);
  const LevelGeometry geo = level_geometry(sft, num, den, a);
  SpectrumPoint pt = with_alpha(a, geo);
  if (geo.status == PointStatus::Outside) return pt;
  auto t_of = [&](double q) { return as_double(bowen_root(sft, q * phi, u)); };
  auto f = [&](const Eigen::VectorXd& q) {
    const double t = t_of(q(0));
    return t == HUGE_VAL ? HUGE_VAL : t - q(0) * alpha;
  };
  // T'(q) = int phi d(mu) / int u d(mu) at the equilibrium state of q phi - T u.
  auto grad = [&](const Eigen::VectorXd& q) {
    const double t = t_of(q(0));
    const MarkovMeasure mu = equilibrium_markov(sft, q(0) * phi - t * u);
    return Eigen::VectorXd::Constant(1, mu.integral(phi) / mu.integral(u) - alpha);
  };
  // J lives in the line of phi - alpha u, so q is one-dimensional here.
  const Eigen::MatrixXd basis = geo.origin.rank == 0 ? Eigen::MatrixXd(1, 0) : Eigen::MatrixXd::Identity(1, 1);
  const ReducedMinimum m = minimize_reduced(basis, search_radius(geo), f, grad, geo.status == PointStatus::Interior);
  pt.iterations = m.evaluations;
  pt.value = m.value == HUGE_VAL ? ExtendedReal::pos_inf() : ExtendedReal(m.value);
  pt.argmin_q = std::vector<double>(m.q.data(), m.q.data() + m.q.size());
  return pt;
}

SpectrumPoint local_entropy_spectrum(const Sft& sft, const VectorPotential& phi, std::span<const double> alpha) {
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    if (std::abs(pressure(sft, phi[i])) > kBoundaryTolerance) {
      fail(ErrorCode::InvalidArgument, "phi_" + std::to_string(i + 1) + " must have zero pressure");
    }
  }
  std::vector<Potential> neg;
  std::vector<Potential> ones;
  for (const auto& c : phi.components()) {
    neg.push_back(-c);
    ones.push_back(Potential::constant(sft.alphabet_size(), 1.0));
  }
  return predicted(sft, VectorPotential(neg), VectorPotential(ones), Potential::constant(sft.alphabet_size(), 0.0),
                   alpha);
}

SpectrumPoint conditional_dimension(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                    const Potential& u, std::span<const double> alpha, int order) {
  require_q(sft, phi, psi);
  require_p(sft, u);
  const LevelGeometry geo = level_geometry(sft, phi, psi, alpha);
  SpectrumPoint pt = with_alpha(alpha, geo);
  if (geo.status == PointStatus::Outside) return pt;
  const VectorPotential level = phi.minus_scaled(alpha, psi);
  double t = 0.0;
  for (int it = 0; it < 100; ++it) {
    const ConditionalSolution sol = maximize_conditional(sft, level, -t * u, order);
    pt.iterations += sol.iterations;
    if (!sol.measure) {
      pt.value = ExtendedReal::neg_inf();
      pt.status = PointStatus::Outside;
      return pt;
    }
    const double lyap = sol.measure->integral(u);
    if (!(lyap > 0.0)) fail(ErrorCode::NonConvergence, "feasible measure with zero u-integral");
    const double next = sol.entropy / lyap;
    if (std::abs(next - t) <= 1e-12 * std::max(1.0, std::abs(next))) {
      pt.value = ExtendedReal(next);
      return pt;
    }
    t = next;
  }
  fail(ErrorCode::NonConvergence, "Dinkelbach iterations did not settle");
}

}  // namespace mfspec
