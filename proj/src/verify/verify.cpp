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

#include "verify/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/conditional.hpp"
#include "core/dimension.hpp"
#include "core/error.hpp"
#include "core/pressure.hpp"
#include "core/spectra.hpp"
#include "json.hpp"

namespace mfspec::verify {

namespace {

using oracle::Report;

const double kLog2 = std::log(2.0);
const double kLog3 = std::log(3.0);

Report flag(std::string name, bool ok) { return oracle::compare(std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0); }

// passed <=> value <= limit.
Report bound(std::string name, double value, double limit) {
  Report r;
  r.quantity = std::move(name);
  r.oracle_value = limit;
  r.main_value = value;
  r.abs_error = value;
  r.tolerance = limit;
  r.passed = value <= limit;
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double entropy(double p) {
  const double a[] = {p};
  return oracle::closed_form("binary_entropy", a);
}

struct Setup {
  const System& sys;
  VectorPotential phi;
  VectorPotential psi;
  Potential xi;
};

Setup setup(const System& sys, const std::vector<std::string>& phi, const std::vector<std::string>& psi) {
  return Setup{sys, sys.vector(phi), sys.vector(psi), sys.potential("zero")};
}

ExtendedReal predicted_value(const Setup& s, double alpha) {
  const double a[] = {alpha};
  return predicted(s.sys.sft, s.phi, s.psi, s.xi, a).value;
}

// C1: entropy spectrum of the full-shift indicator against H.
void entropy_spectrum(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Setup s = setup(b.full2, {"ind1"}, {"one"});
  for (int j = 1; j <= 19; ++j) {
    const double a = 0.05 * j;
    out.checks.push_back(
        oracle::compare("full2 predicted(" + fmt(a) + ") vs H", entropy(a), predicted_value(s, a), tol["entropy"]));
  }
  out.checks.push_back(bound("runtime seconds", seconds_since(t0), 1.0));
}

// C2: conditional variational value against predicted.
void duality(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  auto sweep = [&](const System& sys, int count) {
    const Setup s = setup(sys, {"ind1"}, {"one"});
    for (int j = 1; j <= count; ++j) {
      const double a[] = {0.05 * j};
      const SpectrumPoint cvp = conditional_variational(sys.sft, s.phi, s.psi, s.xi, a, 1);
      out.checks.push_back(oracle::compare(sys.name + " cvp(" + fmt(a[0]) + ") vs predicted",
                                           predicted_value(s, a[0]), cvp.value, tol["duality"]));
    }
  };
  sweep(b.full2, 19);
  sweep(b.golden, 9);
  out.checks.push_back(bound("runtime seconds", seconds_since(t0), 30.0));
}

// C3: cvp <= predicted <- coarse chain on the full-shift indicator.
void inequality_chain(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const Setup s = setup(b.full2, {"ind1"}, {"one"});
  const int ns[] = {8, 10, 12, 14};
  for (double alpha : {0.25, 0.5}) {
    const double a[] = {alpha};
    const ExtendedReal pred = predicted_value(s, alpha);
    const SpectrumPoint cvp = conditional_variational(b.full2.sft, s.phi, s.psi, s.xi, a, 1);
    out.checks.push_back(bound("cvp - predicted at " + fmt(alpha), cvp.value.value() - pred.value(), tol["dominance"]));
    for (double gamma : {0.1, 0.05}) {
      std::vector<double> gaps;
      std::string trace;
      for (int n : ns) {
        const ExtendedReal c = coarse(b.full2.sft, s.phi, s.psi, s.xi, a, gamma, n);
        gaps.push_back(c.is_finite() ? std::abs(c.value() - pred.value()) : HUGE_VAL);
        trace += (trace.empty() ? "" : " ") + fmt(gaps.back());
      }
      bool decreasing = true;
      for (std::size_t i = 1; i < gaps.size(); ++i) decreasing = decreasing && gaps[i] <= gaps[i - 1];
      out.checks.push_back(
          flag("gap decreasing in n, alpha " + fmt(alpha) + " gamma " + fmt(gamma) + " [" + trace + "]", decreasing));
      if (gamma == 0.05) {
        out.checks.push_back(
            bound("final gap n=14 alpha " + fmt(alpha) + " gamma 0.05", gaps.back(), tol["final_gap"]));
      }
    }
  }
  const double a[] = {0.5};
  out.checks.push_back(oracle::compare("coarse(0.5, 0.1, 10) vs log(252)/10", std::log(252.0) / 10.0,
                                       coarse(b.full2.sft, s.phi, s.psi, s.xi, a, 0.1, 10), 0.0));
}

// C4: Ruelle gradient against central differences.
void gradient_identity(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  constexpr double h = 1e-5;
  auto run = [&](const System& sys, const VectorPotential& xi, int d) {
    const Potential& xi0 = sys.potential("zero");
    for (int j = 0; j < 20; ++j) {
      std::vector<double> q(static_cast<std::size_t>(d));
      if (d == 1) {
        q[0] = -3.0 + 6.0 * (j + 0.5) / 20.0;
      } else {
        // Additive recurrence with the plastic-number weights.
        const double w[] = {0.7548776662466927, 0.5698402909980532};
        for (int i = 0; i < d; ++i) q[i] = -3.0 + 6.0 * std::fmod(0.5 + (j + 1) * w[i], 1.0);
      }
      const std::vector<double> g = pressure_gradient(sys.sft, xi, xi0, q);
      double err = 0.0;
      double scale = 0.0;
      for (int i = 0; i < d; ++i) {
        std::vector<double> qp = q;
        std::vector<double> qm = q;
        qp[i] += h;
        qm[i] -= h;
        const double fd =
            (pressure(sys.sft, xi.dot(qp) + xi0) - pressure(sys.sft, xi.dot(qm) + xi0)) / (2.0 * h);
        err = std::max(err, std::abs(fd - g[i]));
        scale = std::max(scale, std::abs(g[i]));
      }
      std::string where;
      for (double v : q) where += (where.empty() ? "" : ",") + fmt(v);
      out.checks.push_back(bound(sys.name + " relative gradient error at q=(" + where + ")", err / scale,
                                 tol["gradient"]));
    }
  };
  run(b.golden, b.golden.vector({"ind1"}), 1);
  run(b.full2, b.full2.vector({"ind1", "ind11"}), 2);
}

// C5: Bowen roots against scalar bisection.
void bowen_moran(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const double ratios[] = {0.5, 1.0 / 3.0};
  out.checks.push_back(oracle::compare(
      "slopes23 bowen_root vs Moran bisection", oracle::closed_form("moran_root", ratios),
      bowen_root(b.slopes23.sft, b.slopes23.potential("zero"), b.slopes23.potential("log_derivative")),
      tol["bowen"]));
  out.checks.push_back(oracle::compare(
      "doubling bowen_root vs 1", 1.0,
      bowen_root(b.doubling.sft, b.doubling.potential("zero"), b.doubling.potential("log_derivative")),
      tol["bowen_uniform"]));
}

// C6: Lyapunov spectrum by both routes.
void lyapunov(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const System& sys = b.slopes23;
  const Potential& u = sys.potential("log_derivative");
  const VectorPotential phi{u};
  const VectorPotential psi{sys.potential("one")};
  auto u_route = [&](double alpha) {
    const double a[] = {alpha};
    return u_dimension_spectrum(sys.sft, phi, psi, u, a).value;
  };
  const double a0 = 0.5 * (kLog2 + kLog3);
  out.checks.push_back(oracle::compare("Legendre route at the closed point", kLog2 / a0,
                                       lyapunov_spectrum(*sys.map, a0).value, tol["lyapunov"]));
  out.checks.push_back(oracle::compare("T_u route at the closed point", kLog2 / a0, u_route(a0), tol["lyapunov"]));
  for (int j = 1; j <= 9; ++j) {
    const double a = kLog2 + j * (kLog3 - kLog2) / 10.0;
    out.checks.push_back(oracle::compare("routes agree at " + fmt(a), lyapunov_spectrum(*sys.map, a).value,
                                         u_route(a), tol["lyapunov"]));
  }
}

// C7: indifferent fixed point.
void indifferent(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const System& sys = b.slopes12;
  const Potential& u = sys.potential("log_derivative");
  const VectorPotential one{sys.potential("one")};
  const VectorPotential uv{u};
  out.checks.push_back(flag("condition P", check_condition_p(sys.sft, u).passed));
  out.checks.push_back(flag("condition Q with phi = 1", check_condition_q(sys.sft, one, uv).passed));
  const DomainDescription dom = domain(sys.sft, one, uv);
  out.checks.push_back(flag("ratio interval unbounded", dom.upper.is_pos_inf()));
  out.checks.push_back(flag("bowen_root(0, u) = +inf", bowen_root(sys.sft, sys.potential("zero"), u).is_pos_inf()));
  const Potential& ind = sys.potential("ind1");
  bool excluded = false;
  try {
    birkhoff_dimension_spectrum(*sys.map, ind, 0.0);
  } catch (const Error& e) {
    excluded = e.code() == ErrorCode::ExcludedAlpha;
  }
  out.checks.push_back(flag("alpha = phi(p) rejected with ExcludedAlpha", excluded));
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double al[] = {a};
    const SpectrumPoint bd = birkhoff_dimension_spectrum(*sys.map, ind, a);
    const SpectrumPoint cd = conditional_dimension(sys.sft, VectorPotential{ind}, one, u, al, 1);
    out.checks.push_back(flag("finite at " + fmt(a), bd.value.is_finite()));
    out.checks.push_back(
        oracle::compare("birkhoff vs conditional dimension at " + fmt(a), cd.value, bd.value, tol["duality"]));
  }
}

// C8: dichotomy and the -inf sentinel against domain membership.
void dichotomy_domain(const Bundle& b, const Tolerances&, CriterionResult& out) {
  const Setup setups[] = {setup(b.full2, {"ind1"}, {"one"}), setup(b.golden, {"ind1"}, {"one"}),
                          setup(b.slopes23, {"ind1"}, {"log_derivative"})};
  for (const Setup& s : setups) {
    const DomainDescription dom = domain(s.sys.sft, s.phi, s.psi);
    const double lo = dom.lower.value();
    const double hi = dom.upper.value();
    const double w = hi - lo;
    int dich_mismatch = 0;
    int sentinel_mismatch = 0;
    for (int j = 0; j < 50; ++j) {
      const double a[] = {lo - 0.5 * w + 2.0 * w * j / 49.0};
      const bool inside = dom.contains(a);
      const bool nonneg = dichotomy(s.sys.sft, s.phi, s.psi, a) == Dichotomy::NonNegative;
      const bool neg_inf = predicted(s.sys.sft, s.phi, s.psi, s.xi, a).value.is_neg_inf();
      dich_mismatch += nonneg != inside;
      sentinel_mismatch += neg_inf == inside;
    }
    out.checks.push_back(
        oracle::compare(s.sys.name + " dichotomy mismatches over 50 alpha", 0.0, dich_mismatch, 0.0));
    out.checks.push_back(
        oracle::compare(s.sys.name + " -inf sentinel mismatches over 50 alpha", 0.0, sentinel_mismatch, 0.0));
  }
}

// C9: concavity, set suprema and the gamma refinement.
void concavity_sets(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  auto concave = [&](const System& sys, double step) {
    const Setup s = setup(sys, {"ind1"}, {"one"});
    std::vector<double> f;
    for (int j = 1; j <= 19; ++j) f.push_back(predicted_value(s, step * j).value());
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t k = i + 2; k < f.size(); k += 2) {
        worst = std::max(worst, 0.5 * (f[i] + f[k]) - f[(i + k) / 2]);
      }
    }
    out.checks.push_back(bound(sys.name + " worst midpoint concavity defect", worst, tol["concavity"]));
  };
  concave(b.full2, 0.05);
  concave(b.golden, 0.025);

  const Setup s = setup(b.full2, {"ind1"}, {"one"});
  std::vector<std::vector<double>> grid;
  double best = -HUGE_VAL;
  for (int j = 0; j < 21; ++j) {
    grid.push_back({0.2 + 0.03 * j});
    best = std::max(best, predicted_value(s, grid.back()[0]).value());
  }
  out.checks.push_back(oracle::compare("set supremum over 21 points vs pointwise max", best,
                                       spectrum_over_set(b.full2.sft, s.phi, s.psi, s.xi, grid).value, 0.0));

  const Setup r = setup(b.slopes23, {"ind1"}, {"log_derivative"});
  std::vector<std::vector<double>> gammas;
  for (double g = kLog2; g <= kLog3; g += 1e-3) gammas.push_back({g});
  const double a[] = {0.5};
  out.checks.push_back(oracle::compare("slopes23 refine_gamma vs predicted at 0.5", predicted_value(r, 0.5),
                                       refine_gamma(b.slopes23.sft, r.phi, r.psi, r.xi, a, gammas), tol["refine"]));
}

// C10: pointwise dimensions of the Bernoulli(1/4) measure on the doubling map.
void pointwise(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const System& sys = b.doubling;
  const Potential& phi0 = sys.potential("bernoulli_quarter");
  const Potential& u = sys.potential("log_derivative");
  const double a_star = (std::log(4.0) + std::log(4.0 / 3.0)) / (2.0 * kLog2);
  out.checks.push_back(oracle::compare("spectrum at alpha*", 1.0, pointwise_dimension_spectrum(*sys.map, phi0, a_star).value,
                                       tol["pointwise"]));
  const VectorPotential neg{-phi0};
  const VectorPotential uv{u};
  const DomainDescription dom = domain(sys.sft, neg, uv);
  out.checks.push_back(
      oracle::compare("domain lower end", -std::log(0.75) / kLog2, dom.lower, tol["endpoints"]));
  out.checks.push_back(oracle::compare("domain upper end", 2.0, dom.upper, tol["endpoints"]));
  for (int j = 0; j < 10; ++j) {
    const double q = -2.0 + 4.0 * j / 9.0;
    const double alpha = 0.5 + 1.4 * j / 9.0;
    const double qa[] = {q};
    const double aa[] = {alpha};
    const ExtendedReal t = bowen_root(sys.sft, -q * phi0, u);
    const ExtendedReal tu = t_u_of_q(sys.sft, neg, uv, u, aa, qa);
    out.checks.push_back(oracle::compare("T(q) - T_u(q) - alpha q at (" + fmt(q) + ", " + fmt(alpha) + ")",
                                         t.value(), tu.value() + alpha * q, tol["shift"]));
  }
}

// C11: oracle agreement and the derived reference values.
void oracle_agreement(const Bundle& b, const Tolerances& tol, CriterionResult& out) {
  const double o = tol["oracle"];
  for (const System* sys : {&b.full2, &b.golden, &b.slopes23, &b.slopes12, &b.doubling}) {
    int mismatches = 0;
    int compared = 0;
    for (const auto& [name, phi] : sys->potentials) {
      for (int n = 1; n <= 12; ++n) {
        const double brute = oracle::brute_pressure(sys->sft, phi, n);
        const double main = pressure_cover_estimate(sys->sft, phi, n);
        mismatches += std::abs(brute - main) > o;
        ++compared;
      }
    }
    out.checks.push_back(oracle::compare(sys->name + " brute vs cover pressure mismatches (" +
                                             std::to_string(compared) + " pairs, n <= 12)",
                                         0.0, mismatches, 0.0));
  }

  const double ref = 1e-12;
  const System& f = b.full2;
  const System& g = b.golden;
  const Potential& ind = f.potential("ind1");
  const Setup fi = setup(f, {"ind1"}, {"one"});
  const Setup gi = setup(g, {"ind1"}, {"one"});
  const double quarter[] = {0.25};
  const double half[] = {0.5};
  const double one[] = {1.0};
  const double zero[] = {0.0};
  const double none[] = {0.0};
  const double parry = oracle::closed_form("parry_golden", std::span<const double>(none, 0));
  const double l1 = oracle::closed_form("logistic_pressure", one);

  out.checks.push_back(oracle::compare("golden 3-word count", static_cast<double>(oracle::brute_word_count(g.sft, 3)),
                                       static_cast<double>(count_words(g.sft, 3)), 0.0));
  const double bern[] = {0.75, 0.25};
  const MarkovStats st = markov_stats(MarkovMeasure::bernoulli(f.sft, bern), ind);
  out.checks.push_back(oracle::compare("Bernoulli(1/4) entropy", entropy(0.25), st.entropy, ref));
  out.checks.push_back(oracle::compare("Bernoulli(1/4) indicator integral", 0.25, st.integral, ref));
  const MarkovMeasure parry_mu = equilibrium_markov(g.sft, g.potential("zero"));
  out.checks.push_back(oracle::compare("Parry entropy", parry, parry_mu.entropy(), ref));
  for (std::size_t e = 0; e < parry_mu.graph().edge_count(); ++e) {
    if (parry_mu.graph().edges()[e].from == 1) {
      out.checks.push_back(oracle::compare("Parry transition 1 -> 0", 1.0, parry_mu.kernel()[e], ref));
    }
  }
  out.checks.push_back(oracle::compare("golden pressure vs log golden ratio", parry, pressure(g.sft, g.potential("zero")), ref));
  out.checks.push_back(oracle::compare("full2 indicator pressure vs log(1+e)", l1, pressure(f.sft, ind), ref));
  const VectorPotential xi{ind};
  out.checks.push_back(oracle::compare("gradient at q=0", oracle::closed_form("logistic", zero),
                                       pressure_gradient(f.sft, xi, f.potential("zero"), zero)[0], ref));
  out.checks.push_back(oracle::compare("gradient at q=1", oracle::closed_form("logistic", one),
                                       pressure_gradient(f.sft, xi, f.potential("zero"), one)[0], ref));
  const MarkovMeasure eq = equilibrium_markov(f.sft, ind);
  out.checks.push_back(oracle::compare("equilibrium of indicator, frequency of 1", oracle::closed_form("logistic", one),
                                       eq.integral(ind), ref));
  out.checks.push_back(oracle::compare("equilibrium of indicator, entropy",
                                       entropy(oracle::closed_form("logistic", one)), eq.entropy(), ref));

  PotentialOracle dyadic{[](std::span<const int> x) {
                           double s = 0.0;
                           for (std::size_t i = 0; i < x.size(); ++i) s += std::ldexp(x[i], -static_cast<int>(i) - 1);
                           return s;
                         },
                         [](int k) { return std::ldexp(1.0, -k); }, 64};
  double tail = 0.0;
  for (int i = 2; i < 64; ++i) tail += std::ldexp(1.0, -i - 1);
  out.checks.push_back(oracle::compare("dyadic potential depth-2 error bound", tail,
                                       approximate_potential(f.sft, dyadic, 2).error_bound, ref));

  out.checks.push_back(oracle::compare("golden cover n=10 vs log(144)/10",
                                       std::log(static_cast<double>(oracle::brute_word_count(g.sft, 10))) / 10.0,
                                       pressure_cover_estimate(g.sft, g.potential("zero"), 10), 1e-15));
  out.checks.push_back(oracle::compare("full2 indicator cover n=1 vs log(1+e)", l1, oracle::brute_pressure(f.sft, ind, 1),
                                       1e-14));

  const System& s12 = b.slopes12;
  const Potential& u12 = s12.potential("log_derivative");
  const oracle::PeriodicRatios pr12 = oracle::brute_periodic_ratios(s12.sft, s12.potential("one"), u12, 8);
  const DomainDescription d12 = domain(s12.sft, VectorPotential{s12.potential("one")}, VectorPotential{u12});
  out.checks.push_back(flag("slopes12 condition Q", check_condition_q(s12.sft, VectorPotential{s12.potential("one")},
                                                                     VectorPotential{u12}).passed &&
                                                        !pr12.zero_psi_negative_phi));
  out.checks.push_back(oracle::compare("slopes12 ratio interval lower end", pr12.min, d12.lower, ref));
  out.checks.push_back(flag("slopes12 unbounded ratio interval", pr12.zero_psi_positive_phi && d12.upper.is_pos_inf()));
  const oracle::PeriodicRatios prg = oracle::brute_periodic_ratios(g.sft, gi.phi[0], gi.psi[0], 10);
  const DomainDescription dg = domain(g.sft, gi.phi, gi.psi);
  out.checks.push_back(oracle::compare("golden ratio interval lower end", prg.min, dg.lower, ref));
  out.checks.push_back(oracle::compare("golden ratio interval upper end", prg.max, dg.upper, ref));
  const oracle::PeriodicRatios prf = oracle::brute_periodic_ratios(f.sft, ind, f.potential("one"), 6);
  const double two[] = {2.0};
  out.checks.push_back(flag("dichotomy at 2 is -inf", prf.max < 2.0 && dichotomy(f.sft, fi.phi, fi.psi, two) ==
                                                                            Dichotomy::NegInfinity));
  out.checks.push_back(flag("dichotomy at 1 is nonnegative", prf.max >= 1.0 && dichotomy(f.sft, fi.phi, fi.psi, one) ==
                                                                                   Dichotomy::NonNegative));
  out.checks.push_back(oracle::compare("predicted(0.25) vs H(1/4)", entropy(0.25), predicted_value(fi, 0.25), 1e-8));
  const double binom[] = {10.0, 5.0};
  out.checks.push_back(oracle::compare("coarse(0.5, 0.1, 10) vs log C(10,5) / 10",
                                       oracle::closed_form("log_binomial_rate", binom),
                                       coarse(f.sft, fi.phi, fi.psi, fi.xi, half, 0.1, 10), 1e-14));
  out.checks.push_back(oracle::compare("cvp(0.25) vs H(1/4)", entropy(0.25),
                                       conditional_variational(f.sft, fi.phi, fi.psi, fi.xi, quarter, 1).value, 1e-8));
  out.checks.push_back(oracle::compare("set supremum {1/4, 1/2}", std::max(entropy(0.25), entropy(0.5)),
                                       spectrum_over_set(f.sft, fi.phi, fi.psi, fi.xi, {{0.25}, {0.5}}).value, 1e-8));
  out.checks.push_back(oracle::compare("set supremum {1/4}", entropy(0.25),
                                       spectrum_over_set(f.sft, fi.phi, fi.psi, fi.xi, {{0.25}}).value, 1e-8));
  out.checks.push_back(oracle::compare("brute conditional(0.25) vs predicted",
                                       oracle::brute_conditional(f.sft, fi.phi, fi.psi, fi.xi, quarter, 1e-3),
                                       predicted_value(fi, 0.25), 2e-3));
  out.checks.push_back(oracle::compare("brute conditional(0.5) vs predicted",
                                       oracle::brute_conditional(f.sft, fi.phi, fi.psi, fi.xi, half, 1e-3),
                                       predicted_value(fi, 0.5), 2e-3));
  const double beyond[] = {1.5};
  out.checks.push_back(oracle::compare("brute conditional(1.5) vs predicted",
                                       oracle::brute_conditional(f.sft, fi.phi, fi.psi, fi.xi, beyond, 1e-2),
                                       predicted_value(fi, 1.5), 0.0));

  const System& s23 = b.slopes23;
  const Potential& u23 = s23.potential("log_derivative");
  const double ratios[] = {0.5, 1.0 / 3.0};
  const double moran = oracle::closed_form("moran_root", ratios);
  const Setup r23 = setup(s23, {"ind1"}, {"log_derivative"});
  const double a_mid[] = {0.5};
  out.checks.push_back(oracle::compare("slopes23 brute conditional(0.5) vs predicted",
                                       oracle::brute_conditional(s23.sft, r23.phi, r23.psi, r23.xi, a_mid, 1e-3),
                                       predicted_value(r23, 0.5), 2e-3));
  out.checks.push_back(oracle::compare("slopes23 bowen_root vs Moran", moran,
                                       bowen_root(s23.sft, s23.potential("zero"), u23), 1e-10));
  const double big_t[] = {-60.0 * kLog2};
  out.checks.push_back(flag("slopes12 bowen_root(0, u) = +inf",
                            oracle::closed_form("logistic_pressure", big_t) > 0.0 &&
                                bowen_root(s12.sft, s12.potential("zero"), u12).is_pos_inf()));
  const double any_alpha[] = {0.9};
  out.checks.push_back(oracle::compare("slopes23 T_u(0) vs Moran", moran,
                                       t_u_of_q(s23.sft, VectorPotential{u23}, VectorPotential{s23.potential("one")},
                                                u23, any_alpha, zero),
                                       1e-10));
  const double a0 = 0.5 * (kLog2 + kLog3);
  const double a0v[] = {a0};
  out.checks.push_back(oracle::compare("slopes23 u-dimension spectrum at the Lyapunov point", kLog2 / a0,
                                       u_dimension_spectrum(s23.sft, VectorPotential{u23},
                                                            VectorPotential{s23.potential("one")}, u23, a0v)
                                           .value,
                                       1e-8));
  out.checks.push_back(oracle::compare("slopes23 Lyapunov spectrum at the Lyapunov point", kLog2 / a0,
                                       lyapunov_spectrum(*s23.map, a0).value, 1e-8));
  out.checks.push_back(oracle::compare("entropy spectrum of the indicator at 0.25", entropy(0.25),
                                       entropy_birkhoff_spectrum(f.sft, ind, 0.25).value, 1e-8));

  const System& d = b.doubling;
  const Potential& phi0 = d.potential("bernoulli_quarter");
  out.checks.push_back(oracle::compare("doubling Birkhoff dimension at 0.25", entropy(0.25) / kLog2,
                                       birkhoff_dimension_spectrum(*d.map, d.potential("ind1"), 0.25).value, 1e-8));
  const double halves[] = {0.5, 0.5};
  const double a_star = (std::log(4.0) + std::log(4.0 / 3.0)) / (2.0 * kLog2);
  out.checks.push_back(oracle::compare("doubling pointwise dimension at alpha*", oracle::closed_form("moran_root", halves),
                                       pointwise_dimension_spectrum(*d.map, phi0, a_star).value, 1e-6));
  const oracle::PeriodicRatios prd = oracle::brute_periodic_ratios(d.sft, -phi0, d.potential("log_derivative"), 8);
  out.checks.push_back(flag("doubling pointwise dimension at 2.5 is -inf",
                            prd.max < 2.5 && pointwise_dimension_spectrum(*d.map, phi0, 2.5).value.is_neg_inf()));
  const double levels[] = {kLog2, 0.5 * (std::log(4.0) + std::log(4.0 / 3.0))};
  out.checks.push_back(oracle::compare(
      "doubling local entropy spectrum", kLog2,
      local_entropy_spectrum(d.sft, d.vector({"bernoulli_half", "bernoulli_quarter"}), levels).value, 1e-8));
}

using Runner = void (*)(const Bundle&, const Tolerances&, CriterionResult&);

struct Entry {
  const char* title;
  Runner run;
};

const Entry kCriteria[kCriterionCount] = {
    {"closed-form entropy spectrum", entropy_spectrum},
    {"strong duality", duality},
    {"inequality chain", inequality_chain},
    {"gradient identity", gradient_identity},
    {"Bowen and Moran roots", bowen_moran},
    {"Lyapunov spectrum closed point", lyapunov},
    {"indifferent fixed point", indifferent},
    {"dichotomy and domain", dichotomy_domain},
    {"concavity and set suprema", concavity_sets},
    {"pointwise-dimension spectrum", pointwise},
    {"oracle agreement", oracle_agreement},
};

}  // namespace

Bundle load_bundle(const std::string& dir) {
  auto path = [&](const char* name) { return dir + "/" + name + ".json"; };
  return Bundle{load_system(path("full2")), load_system(path("golden")), load_system(path("slopes23")),
                load_system(path("slopes12")), load_system(path("doubling"))};
}

Tolerances::Tolerances()
    : values_{{"entropy", 1e-8},   {"duality", 1e-5},       {"dominance", 1e-6},  {"final_gap", 0.06},
              {"gradient", 1e-6},  {"bowen", 1e-10},        {"bowen_uniform", 1e-12}, {"lyapunov", 1e-8},
              {"concavity", 1e-8}, {"refine", 1e-3},        {"pointwise", 1e-6},  {"endpoints", 1e-9},
              {"shift", 1e-9},     {"oracle", 0.0}} {}

double Tolerances::operator[](const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) fail(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
  return it->second;
}

void Tolerances::apply(const std::string& spec) {
  const auto eq = spec.find('=');
  const std::string number = eq == std::string::npos ? spec : spec.substr(eq + 1);
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(number, &used);
    if (used != number.size()) throw std::invalid_argument(number);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "tolerance '" + number + "' is not a number");
  }
  if (!(v >= 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  if (eq == std::string::npos) {
    for (auto& [name, value] : values_) value = v;
    return;
  }
  const std::string name = spec.substr(0, eq);
  if (!values_.count(name)) fail(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
  values_[name] = v;
}

CriterionResult run_criterion(int id, const Bundle& bundle, const Tolerances& tol) {
  if (id < 1 || id > kCriterionCount) fail(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  CriterionResult out;
  out.id = id;
  out.title = kCriteria[id - 1].title;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kCriteria[id - 1].run(bundle, tol, out);
  } catch (const std::exception& e) {
    out.checks.push_back(flag(std::string("raised ") + e.what(), false));
  }
  out.seconds = seconds_since(t0);
  out.passed = !out.checks.empty();
  for (const Report& r : out.checks) out.passed = out.passed && r.passed;
  return out;
}

std::vector<CriterionResult> run_all(const Bundle& bundle, const Tolerances& tol) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, bundle, tol));
  return out;
}

std::string format_summary(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  char line[256];
  for (const CriterionResult& r : results) {
    int failed = 0;
    for (const Report& c : r.checks) failed += !c.passed;
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %-32s %3zu checks, %d failed, %.3f s\n",
                  r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.checks.size(), failed, r.seconds);
    os << line;
    for (const Report& c : r.checks) {
      if (c.passed) continue;
      std::snprintf(line, sizeof line, "       failed: %s (oracle %.12g, main %.12g, error %.3g, tolerance %.3g)\n",
                    c.quantity.c_str(), c.oracle_value, c.main_value, c.abs_error, c.tolerance);
      os << line;
    }
  }
  return os.str();
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-3s %-72s %20s %20s %10s %10s %s\n", "id", "quantity", "oracle", "main",
                "abs_error", "tolerance", "result");
  os << line;
  for (const CriterionResult& r : results) {
    for (const Report& c : r.checks) {
      std::snprintf(line, sizeof line, "%-3d %-72s %20.12g %20.12g %10.3g %10.3g %s\n", r.id, c.quantity.c_str(),
                    c.oracle_value, c.main_value, c.abs_error, c.tolerance, c.passed ? "pass" : "FAIL");
      os << line;
    }
  }
  return os.str();
}

std::string to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CriterionResult& r : results) {
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"checks", nlohmann::json::parse(oracle::to_json(r.checks))}});
  }
  return arr.dump(2);
}

}  // namespace mfspec::verify
