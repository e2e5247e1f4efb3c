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

#include "core/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/optimize.hpp"
#include "core/pressure.hpp"

namespace mfspec {

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Interior: return "Interior";
    case PointStatus::Boundary: return "Boundary";
    case PointStatus::Outside: return "Outside";
    case PointStatus::Undefined: return "Undefined";
  }
  return "Undefined";
}

namespace {

// Cycle means of every component of Phi and Psi on the common block graph.
struct CycleTable {
  std::vector<Cycle> cycles;
  std::vector<Eigen::VectorXd> phi;
  std::vector<Eigen::VectorXd> psi;
  double tol = 0.0;
};

CycleTable cycle_table(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi) {
  if (phi.dim() != psi.dim()) fail(ErrorCode::InvalidArgument, "Phi and Psi differ in dimension");
  if (phi.alphabet_size() != sft.alphabet_size() || psi.alphabet_size() != sft.alphabet_size()) {
    fail(ErrorCode::InvalidArgument, "potential alphabet does not match the shift");
  }
  const int depth = std::max(phi.depth(), psi.depth());
  const BlockGraph graph(sft, block_length_for_depth(depth));
  CycleTable t;
  t.cycles = simple_cycles(graph);
  const auto d = static_cast<Eigen::Index>(phi.dim());
  double scale = 0.0;
  for (const Cycle& c : t.cycles) {
    Eigen::VectorXd a(d), b(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      a(i) = cycle_mean(graph, c, phi[i]);
      b(i) = cycle_mean(graph, c, psi[i]);
    }
    scale = std::max({scale, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
    t.phi.push_back(std::move(a));
    t.psi.push_back(std::move(b));
  }
  t.tol = 1e-12 * (1.0 + scale);
  return t;
}

struct Interval {
  ExtendedReal lower = ExtendedReal::pos_inf();
  ExtendedReal upper = ExtendedReal::neg_inf();
  std::optional<Word> lower_witness;
  std::optional<Word> upper_witness;
  bool unbounded = false;
};

// Ratio extremes of one component over the cycles; ties keep the earlier
// (shorter, then lexicographically smaller) cycle.
Interval ratio_interval(const CycleTable& t, Eigen::Index i) {
  Interval r;
  bool any_positive = false;
  bool up = false, down = false;
  std::optional<Word> up_witness, down_witness;
  for (std::size_t c = 0; c < t.cycles.size(); ++c) {
    const double p = t.psi[c](i);
    const double f = t.phi[c](i);
    if (p > t.tol) {
      const ExtendedReal ratio(f / p);
      if (!any_positive || ratio < r.lower) {
        r.lower = ratio;
        r.lower_witness = t.cycles[c].symbols;
      }
      if (!any_positive || ratio > r.upper) {
        r.upper = ratio;
        r.upper_witness = t.cycles[c].symbols;
      }
      any_positive = true;
    } else if (f > t.tol) {
      if (!up) up_witness = t.cycles[c].symbols;
      up = true;
    } else if (f < -t.tol) {
      if (!down) down_witness = t.cycles[c].symbols;
      down = true;
    }
  }
  if (!any_positive) return Interval{};
  if (up) {
    r.upper = ExtendedReal::pos_inf();
    r.upper_witness = up_witness;
    r.unbounded = true;
  }
  if (down) {
    r.lower = ExtendedReal::neg_inf();
    r.lower_witness = down_witness;
    r.unbounded = true;
  }
  return r;
}

std::vector<Eigen::VectorXd> level_points(const CycleTable& t, std::span<const double> alpha) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(t.cycles.size());
  const Eigen::Map<const Eigen::VectorXd> a(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
  for (std::size_t c = 0; c < t.cycles.size(); ++c) pts.push_back(t.phi[c] - a.cwiseProduct(t.psi[c]));
  return pts;
}

void require_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi) {
  const ConditionReport q = check_condition_q(sft, phi, psi);
  if (!q.passed) {
    fail(ErrorCode::ConditionQViolated,
         q.reason + (q.witness ? " (witness cycle " + format_word(*q.witness, sft.alphabet_size()) + ")" : ""));
  }
}

}  // namespace

ConditionReport check_condition_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi) {
  const CycleTable t = cycle_table(sft, phi, psi);
  ConditionReport report;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(phi.dim()); ++i) {
    std::size_t worst = 0;
    for (std::size_t c = 1; c < t.cycles.size(); ++c) {
      if (t.psi[c](i) < t.psi[worst](i)) worst = c;
    }
    if (t.psi[worst](i) < -t.tol) {
      report.passed = false;
      report.component = static_cast<int>(i);
      report.witness = t.cycles[worst].symbols;
      report.reason = "psi_" + std::to_string(i + 1) + " has a cycle with negative mean";
      return report;
    }
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    std::optional<std::size_t> nearest;
    for (std::size_t c = 0; c < t.cycles.size(); ++c) {
      if (std::abs(t.psi[c](i)) > t.tol) continue;
      const double f = t.phi[c](i);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
      if (!nearest || std::abs(f) < std::abs(t.phi[*nearest](i))) nearest = c;
    }
    if (nearest && lo <= t.tol && hi >= -t.tol) {
      report.passed = false;
      report.component = static_cast<int>(i);
      report.witness = t.cycles[*nearest].symbols;
      report.reason = "a measure with zero psi_" + std::to_string(i + 1) + " integral has zero phi_" +
                      std::to_string(i + 1) + " integral";
      return report;
    }
  }
  return report;
}

bool DomainDescription::contains(std::span<const double> alpha) const {
  if (alpha.size() != dim) fail(ErrorCode::InvalidArgument, "alpha has the wrong dimension");
  if (dim == 1) {
    const double a = alpha[0];
    const double tol = 1e-12 * (1.0 + std::abs(a));
    return ExtendedReal(a + tol) >= lower && ExtendedReal(a - tol) <= upper;
  }
  CycleTable t;
  t.phi = phi_means;
  t.psi = psi_means;
  t.cycles.resize(phi_means.size());
  return locate_origin(level_points(t, alpha)).inside;
}

DomainDescription domain(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi) {
  require_q(sft, phi, psi);
  const CycleTable t = cycle_table(sft, phi, psi);
  DomainDescription out;
  out.dim = phi.dim();
  out.phi_means = t.phi;
  out.psi_means = t.psi;
  const auto d = static_cast<Eigen::Index>(out.dim);
  for (std::size_t c = 0; c < t.cycles.size(); ++c) {
    if ((t.psi[c].array() > t.tol).all()) {
      out.ratio_points.push_back(t.phi[c].cwiseQuotient(t.psi[c]));
    } else {
      out.contains_unbounded_direction = true;
    }
  }
  if (out.dim == 1) {
    const Interval r = ratio_interval(t, 0);
    out.lower = r.lower;
    out.upper = r.upper;
    out.lower_witness = r.lower_witness;
    out.upper_witness = r.upper_witness;
    out.contains_unbounded_direction = r.unbounded;
    return out;
  }
  std::vector<char> picked(out.ratio_points.size(), 0);
  for (const auto& theta : direction_grid(static_cast<int>(d), d == 2 ? 720 : 2000)) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < out.ratio_points.size(); ++c) {
      if (theta.dot(out.ratio_points[c]) > theta.dot(out.ratio_points[best])) best = c;
    }
    if (!out.ratio_points.empty()) picked[best] = 1;
  }
  for (std::size_t c = 0; c < picked.size(); ++c) {
    if (picked[c]) out.boundary_points.push_back(out.ratio_points[c]);
  }
  return out;
}

LevelGeometry level_geometry(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                             std::span<const double> alpha) {
  if (alpha.size() != phi.dim()) fail(ErrorCode::InvalidArgument, "alpha has the wrong dimension");
  const CycleTable t = cycle_table(sft, phi, psi);
  LevelGeometry g;
  g.cycles = t.cycles;
  g.points = level_points(t, alpha);
  for (const auto& p : g.points) g.scale = std::max(g.scale, p.norm());
  g.origin = locate_origin(g.points);
  if (!g.origin.inside) {
    g.status = PointStatus::Outside;
    return g;
  }
  if (g.origin.rank == 0) {
    g.margin = HUGE_VAL;
    g.status = PointStatus::Interior;
    return g;
  }
  if (phi.dim() == 1) {
    const Interval r = ratio_interval(t, 0);
    const double a = alpha[0];
    const double below = r.lower.is_finite() ? a - r.lower.value() : HUGE_VAL;
    const double above = r.upper.is_finite() ? r.upper.value() - a : HUGE_VAL;
    g.margin = std::max(0.0, std::min(below, above));
  } else {
    g.margin = g.origin.inradius;
  }
  g.status = g.margin <= kBoundaryTolerance ? PointStatus::Boundary : PointStatus::Interior;
  return g;
}

Dichotomy dichotomy(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                    std::span<const double> alpha) {
  require_q(sft, phi, psi);
  return level_geometry(sft, phi, psi, alpha).origin.inside ? Dichotomy::NonNegative : Dichotomy::NegInfinity;
}

SpectrumPoint predicted(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                        const Potential& xi, std::span<const double> alpha) {
  require_q(sft, phi, psi);
  const LevelGeometry geo = level_geometry(sft, phi, psi, alpha);
  SpectrumPoint pt;
  pt.alpha.assign(alpha.begin(), alpha.end());
  pt.status = geo.status;
  if (geo.status == PointStatus::Outside) {
    pt.value = ExtendedReal::neg_inf();
    return pt;
  }
  const VectorPotential level = phi.minus_scaled(alpha, psi);
  const Eigen::MatrixXd& basis = geo.origin.basis;
  const Eigen::Index r = basis.cols();
  auto potential_at = [&](const Eigen::VectorXd& y) {
    const Eigen::VectorXd q = basis * y;
    return level.dot(std::span<const double>(q.data(), static_cast<std::size_t>(q.size()))) + xi;
  };
  auto value_at = [&](const Eigen::VectorXd& y) {
    ++pt.iterations;
    return pressure(sft, potential_at(y));
  };
  auto gradient_at = [&](const Eigen::VectorXd& y) {
    const MarkovMeasure mu = equilibrium_markov(sft, potential_at(y));
    Eigen::VectorXd full(static_cast<Eigen::Index>(level.dim()));
    for (std::size_t i = 0; i < level.dim(); ++i) full(static_cast<Eigen::Index>(i)) = mu.integral(level[i]);
    return Eigen::VectorXd(basis.transpose() * full);
  };

  const double p_xi = pressure(sft, xi);
  if (r == 0) {
    pt.value = ExtendedReal(p_xi);
    pt.argmin_q = std::vector<double>(alpha.size(), 0.0);
    return pt;
  }
  // Minimizers lie within (P(xi) + |xi|) / eps of the origin, eps the
  // inradius of J. Boundary points get a bounded search instead.
  const double radius = geo.status == PointStatus::Interior
                            ? (p_xi + sup_norm(sft, xi)) / geo.origin.inradius * (1.0 + 1e-6) + 1e-12
                            : 30.0 / geo.scale;
  Eigen::VectorXd y(r);
  double value = 0.0;
  if (r == 1) {
    auto f = [&](double s) { return value_at(Eigen::VectorXd::Constant(1, s)); };
    const ScalarMinimum m = minimize_convex(f, radius, 1e-10);
    double s = m.x;
    if (geo.status == PointStatus::Interior) {
      auto g = [&](double v) { return gradient_at(Eigen::VectorXd::Constant(1, v))(0); };
      s = newton_polish(g, s, std::max(m.lo, -radius), std::min(m.hi, radius), 1e-9).x;
    }
    const double fs = f(s);
    y(0) = fs <= m.fx ? s : m.x;
    value = std::min(fs, m.fx);
  } else {
    auto f = [&](const Eigen::VectorXd& v, Eigen::VectorXd* grad) {
      if (grad != nullptr) *grad = gradient_at(v);
      return value_at(v);
    };
    const DescentResult res = minimize_smooth(f, Eigen::VectorXd::Zero(r), radius, 1e-9);
    y = res.x;
    value = res.fx;
  }
  const Eigen::VectorXd q = basis * y;
  pt.argmin_q = std::vector<double>(q.data(), q.data() + q.size());
  pt.value = ExtendedReal(value);
  return pt;
}

ExtendedReal coarse(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi, const Potential& xi,
                    std::span<const double> alpha, double gamma, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  if (!(gamma > 0.0)) fail(ErrorCode::InvalidArgument, "gamma must be positive");
  if (alpha.size() != phi.dim() || psi.dim() != phi.dim()) {
    fail(ErrorCode::InvalidArgument, "alpha, Phi and Psi differ in dimension");
  }
  const int depth = std::max({phi.depth(), psi.depth(), xi.depth()});
  const auto words = enumerate_words(sft, n + depth - 1);
  std::vector<double> terms;
  for (const Word& w : words) {
    bool member = true;
    for (std::size_t i = 0; i < phi.dim() && member; ++i) {
      const double den = birkhoff_sum(psi[i], w, n);
      if (den == 0.0) {
        member = false;
        break;
      }
      const double ratio = birkhoff_sum(phi[i], w, n) / den;
      // Open box; ratios within rounding of a face count as on the face.
      const double lo = alpha[i] - gamma;
      const double hi = alpha[i] + gamma;
      member = ratio > lo + 1e-12 * std::max(1.0, std::abs(lo)) && ratio < hi - 1e-12 * std::max(1.0, std::abs(hi));
    }
    if (member) terms.push_back(birkhoff_sum(xi, w, n));
  }
  if (terms.empty()) return ExtendedReal::neg_inf();
  std::sort(terms.begin(), terms.end());
  const double top = terms.back();
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return ExtendedReal((std::log(sum) + top) / n);
}

SetSupremum spectrum_over_set(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                              const Potential& xi, const std::vector<std::vector<double>>& grid) {
  if (grid.empty()) fail(ErrorCode::InvalidArgument, "grid must be nonempty");
  SetSupremum out;
  out.value = ExtendedReal::neg_inf();
  bool first = true;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const SpectrumPoint p = predicted(sft, phi, psi, xi, grid[j]);
    if (first || p.value > out.value) {
      out.value = p.value;
      out.status = p.status;
      out.argmax = j;
      first = false;
    }
  }
  return out;
}

ExtendedReal refine_gamma(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                          const Potential& xi, std::span<const double> alpha,
                          const std::vector<std::vector<double>>& gamma_grid) {
  require_q(sft, phi, psi);
  const std::size_t d = phi.dim();
  if (alpha.size() != d) fail(ErrorCode::InvalidArgument, "alpha has the wrong dimension");
  if (gamma_grid.empty()) return ExtendedReal::neg_inf();
  std::vector<Potential> ones(2 * d, Potential::constant(sft.alphabet_size(), 1.0));
  const VectorPotential phi_t = phi.concat(psi);
  const VectorPotential psi_t(ones);

  std::vector<std::vector<double>> candidates;
  if (d == 1) {
    // Feasible gamma: the psi-means of invariant measures with
    // int (phi - alpha psi) = 0, a slice of the cycle hull.
    const CycleTable t = cycle_table(sft, phi, psi);
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    const double tol = t.tol;
    for (std::size_t a = 0; a < t.cycles.size(); ++a) {
      const double xa = t.phi[a](0) - alpha[0] * t.psi[a](0);
      if (std::abs(xa) <= tol) {
        lo = std::min(lo, t.psi[a](0));
        hi = std::max(hi, t.psi[a](0));
      }
      for (std::size_t b = 0; b < t.cycles.size(); ++b) {
        const double xb = t.phi[b](0) - alpha[0] * t.psi[b](0);
        if (xa < -tol && xb > tol) {
          const double y = t.psi[a](0) + (t.psi[b](0) - t.psi[a](0)) * (-xa) / (xb - xa);
          lo = std::min(lo, y);
          hi = std::max(hi, y);
        }
      }
    }
    if (lo > hi) return ExtendedReal::neg_inf();
    for (const auto& g : gamma_grid) {
      if (g.size() != 1) fail(ErrorCode::InvalidArgument, "gamma has the wrong dimension");
      std::vector<double> c{std::clamp(g[0], lo, hi)};
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
    }
  } else {
    candidates = gamma_grid;
  }
  ExtendedReal best = ExtendedReal::neg_inf();
  for (const auto& g : candidates) {
    if (g.size() != d) fail(ErrorCode::InvalidArgument, "gamma has the wrong dimension");
    std::vector<double> level(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      level[i] = alpha[i] * g[i];
      level[d + i] = g[i];
    }
    best = ExtendedReal::max(best, predicted(sft, phi_t, psi_t, xi, level).value);
  }
  return best;
}

}  // namespace mfspec
