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

#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"

#include "core/error.hpp"

namespace mfspec::oracle {

namespace {

// Calls visit(word) for each admissible word of length n, in lexicographic order.
void for_each_word(const Sft& sft, int n, const std::function<void(const Word&)>& visit) {
  if (n < 1) return;
  const std::uint64_t cap = max_words();
  std::uint64_t seen = 0;
  Word w(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (++seen > cap) fail(ErrorCode::ResourceLimit, "brute-force enumeration exceeds the word cap");
      visit(w);
      return;
    }
    for (int a = 0; a < static_cast<int>(sft.alphabet_size()); ++a) {
      if (pos > 0 && !sft.allowed(w[pos - 1], a)) continue;
      w[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
}

// Stationary vector of a row-stochastic matrix by Gaussian elimination on
// (P^T - I) pi = 0 with the last row replaced by sum pi = 1. Empty when singular.
std::vector<double> stationary(const std::vector<std::vector<double>>& p) {
  const std::size_t m = p.size();
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = p[j][i] - (i == j ? 1.0 : 0.0);
  }
  for (std::size_t j = 0; j <= m; ++j) a[m - 1][j] = 1.0;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-12) return {};
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<double> pi(m);
  for (std::size_t i = 0; i < m; ++i) {
    pi[i] = a[i][m] / a[i][i];
    if (pi[i] < -1e-12) return {};
    pi[i] = std::max(pi[i], 0.0);
  }
  return pi;
}

double value_on(const Potential& f, int a, int b) {
  if (f.depth() == 1) return f.at_code(static_cast<std::uint64_t>(a));
  const int w[2] = {a, b};
  return f(std::span<const int>(w, 2));
}

struct GridSearch {
  const Sft& sft;
  std::vector<Potential> level;  // phi_i - alpha_i psi_i
  const Potential& xi;
  ExtendedReal best = ExtendedReal::neg_inf();
  std::vector<std::vector<double>> best_kernel;

  // Scores a kernel; updates the best one when the residual is within tol.
  void score(const std::vector<std::vector<double>>& p, double tol) {
    const std::vector<double> pi = stationary(p);
    if (pi.empty()) return;
    const int m = static_cast<int>(sft.alphabet_size());
    double h = 0.0;
    double integral = 0.0;
    std::vector<double> lv(level.size(), 0.0);
    for (int a = 0; a < m; ++a) {
      for (int b : sft.successors(a)) {
        const double w = pi[a] * p[a][b];
        if (w <= 0.0) continue;
        h -= w * std::log(p[a][b]);
        integral += w * value_on(xi, a, b);
        for (std::size_t i = 0; i < level.size(); ++i) lv[i] += w * value_on(level[i], a, b);
      }
    }
    double residual = 0.0;
    for (double v : lv) residual = std::max(residual, std::abs(v));
    if (residual > tol) return;
    const double value = h + integral;
    if (best.is_neg_inf() || value > best.value()) {
      best = ExtendedReal(value);
      best_kernel = p;
    }
  }

  // Enumerates row choices, each row from its candidate list, depth-first.
  void sweep(const std::vector<std::vector<std::vector<double>>>& rows, double tol) {
    const std::size_t m = rows.size();
    std::uint64_t total = 1;
    for (const auto& r : rows) {
      total *= r.size();
      if (total > max_words()) fail(ErrorCode::ResourceLimit, "kernel grid exceeds the enumeration cap");
    }
    std::vector<std::vector<double>> p(m);
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
      if (a == m) {
        score(p, tol);
        return;
      }
      for (const auto& row : rows[a]) {
        p[a] = row;
        rec(a + 1);
      }
    };
    rec(0);
  }
};

// Probability rows on the successors of a symbol: compositions of `units` into
// the successor slots, each unit worth `unit`, shifted by `base` (clipped rows dropped).
std::vector<std::vector<double>> simplex_rows(const Sft& sft, int a, int units, double unit,
                                              const std::vector<double>& base, int offset) {
  const std::vector<int>& succ = sft.successors(a);
  const int m = static_cast<int>(sft.alphabet_size());
  std::vector<std::vector<double>> out;
  std::vector<int> c(succ.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == succ.size()) {
      c[i] = left;
      std::vector<double> row(static_cast<std::size_t>(m), 0.0);
      double sum = 0.0;
      for (std::size_t j = 0; j + 1 < succ.size(); ++j) {
        const double v = c[j] * unit;
        if (v < 0.0 || v > 1.0) return;
        row[succ[j]] = v;
        sum += v;
      }
      const double last = 1.0 - sum;
      if (last < -1e-15) return;
      row[succ.back()] = std::max(last, 0.0);
      out.push_back(std::move(row));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (base.empty()) {
    rec(0, units);
  } else {
    // Free coordinates range over base +- offset units independently.
    std::function<void(std::size_t)> box = [&](std::size_t i) {
      if (i + 1 >= succ.size()) {
        std::vector<double> row(static_cast<std::size_t>(m), 0.0);
        double sum = 0.0;
        for (std::size_t j = 0; j + 1 < succ.size(); ++j) {
          const double v = base[succ[j]] + (c[j] - offset) * unit;
          if (v < 0.0 || v > 1.0) return;
          row[succ[j]] = v;
          sum += v;
        }
        const double last = 1.0 - sum;
        if (last < -1e-15) return;
        row[succ.back()] = std::max(last, 0.0);
        out.push_back(std::move(row));
        return;
      }
      for (int v = 0; v <= 2 * offset; ++v) {
        c[i] = v;
        box(i + 1);
      }
    };
    box(0);
  }
  return out;
}

}  // namespace

std::uint64_t brute_word_count(const Sft& sft, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "word length must be non-negative");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  for_each_word(sft, n, [&](const Word&) { ++count; });
  return count;
}

double brute_pressure(const Sft& sft, const Potential& phi, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cover order must be at least 1");
  const int k = phi.depth();
  std::vector<double> terms;
  for_each_word(sft, n + k - 1, [&](const Word& w) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += phi(std::span<const int>(w).subspan(j, k));
    terms.push_back(s);
  });
  std::sort(terms.begin(), terms.end());
  const double top = terms.back();
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return (std::log(sum) + top) / n;
}

ExtendedReal brute_conditional(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                               const Potential& xi, std::span<const double> alpha, double grid_step) {
  if (phi.dim() != psi.dim() || alpha.size() != phi.dim()) {
    fail(ErrorCode::InvalidArgument, "dimension mismatch between Phi, Psi and alpha");
  }
  if (std::max({phi.depth(), psi.depth(), xi.depth()}) > 2) {
    fail(ErrorCode::DepthMismatch, "brute-force conditional search supports depth at most 2");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.5)) fail(ErrorCode::InvalidArgument, "grid step must lie in (0, 1/2]");
  const int units = static_cast<int>(std::lround(1.0 / grid_step));
  const double unit = 1.0 / units;

  GridSearch search{sft, {}, xi, ExtendedReal::neg_inf(), {}};
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    const int k = std::max(phi[i].depth(), psi[i].depth());
    search.level.push_back(phi[i].lifted(k) - alpha[i] * psi[i].lifted(k));
  }
  const int m = static_cast<int>(sft.alphabet_size());

  std::vector<std::vector<std::vector<double>>> rows(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) rows[a] = simplex_rows(sft, a, units, unit, {}, 0);
  search.sweep(rows, unit);
  if (search.best.is_neg_inf()) return search.best;

  const std::vector<std::vector<double>> centre = search.best_kernel;
  const ExtendedReal coarse_best = search.best;
  search.best = ExtendedReal::neg_inf();
  // Sub-steps of unit/10 around the coarse optimum; the window widens until a
  // kernel meets the tighter residual.
  constexpr int kRefine = 10;
  for (int span = 1; span <= 8 && search.best.is_neg_inf(); span *= 2) {
    for (int a = 0; a < m; ++a) rows[a] = simplex_rows(sft, a, 0, unit / kRefine, centre[a], kRefine * span);
    search.sweep(rows, unit / kRefine);
  }
  return search.best.is_neg_inf() ? coarse_best : search.best;
}

double closed_form(const std::string& name, std::span<const double> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      fail(ErrorCode::InvalidArgument, name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "binary_entropy") {
    need(1);
    const double p = params[0];
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "binary_entropy needs p in [0, 1]");
    auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
    return term(p) + term(1.0 - p);
  }
  if (name == "logistic_pressure") {
    need(1);
    const double q = params[0];
    return q > 0.0 ? q + std::log1p(std::exp(-q)) : std::log1p(std::exp(q));
  }
  if (name == "logistic") {
    need(1);
    return 1.0 / (1.0 + std::exp(-params[0]));
  }
  if (name == "moran_root") {
    if (params.empty()) fail(ErrorCode::InvalidArgument, "moran_root needs at least one ratio");
    for (double r : params) {
      if (!(r > 0.0 && r < 1.0)) fail(ErrorCode::InvalidArgument, "moran_root ratios must lie in (0, 1)");
    }
    auto f = [&](double t) {
      double s = 0.0;
      for (double r : params) s += std::pow(r, t);
      return s - 1.0;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) > 0.0) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  if (name == "parry_golden") {
    need(0);
    return std::log((1.0 + std::sqrt(5.0)) / 2.0);
  }
  if (name == "log_binomial_rate") {
    need(2);
    const double n = params[0];
    const double k = params[1];
    if (!(n >= 1.0 && k >= 0.0 && k <= n)) fail(ErrorCode::InvalidArgument, "log_binomial_rate needs 0 <= k <= n");
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / n;
  }
  fail(ErrorCode::UnknownFormula, "no closed form named '" + name + "'");
}

PeriodicRatios brute_periodic_ratios(const Sft& sft, const Potential& phi, const Potential& psi, int max_period) {
  if (max_period < 1) fail(ErrorCode::InvalidArgument, "period bound must be positive");
  const int k = std::max(phi.depth(), psi.depth());
  PeriodicRatios out;
  for (int p = 1; p <= max_period; ++p) {
    for_each_word(sft, p, [&](const Word& w) {
      if (!sft.allowed(w.back(), w.front())) return;
      Word cyc(static_cast<std::size_t>(p + k - 1));
      for (std::size_t i = 0; i < cyc.size(); ++i) cyc[i] = w[i % w.size()];
      double sp = 0.0;
      double sq = 0.0;
      for (int j = 0; j < p; ++j) {
        const std::span<const int> at = std::span<const int>(cyc).subspan(j);
        sp += phi(at);
        sq += psi(at);
      }
      if (std::abs(sq) <= 1e-12) {
        if (sp > 1e-12) out.zero_psi_positive_phi = true;
        if (sp < -1e-12) out.zero_psi_negative_phi = true;
        return;
      }
      const double r = sp / sq;
      out.min = std::min(out.min, r);
      out.max = std::max(out.max, r);
    });
  }
  return out;
}

Report compare(std::string quantity, double oracle_value, double main_value, double tolerance) {
  Report r;
  r.quantity = std::move(quantity);
  r.oracle_value = oracle_value;
  r.main_value = main_value;
  r.tolerance = tolerance;
  if (std::isinf(oracle_value) || std::isinf(main_value)) {
    r.abs_error = oracle_value == main_value ? 0.0 : HUGE_VAL;
  } else {
    r.abs_error = std::abs(oracle_value - main_value);
  }
  r.passed = r.abs_error <= tolerance;
  return r;
}

Report compare(std::string quantity, const ExtendedReal& oracle_value, const ExtendedReal& main_value,
               double tolerance) {
  return compare(std::move(quantity), oracle_value.value(), main_value.value(), tolerance);
}

Report compare(std::string quantity, double oracle_value, const ExtendedReal& main_value, double tolerance) {
  return compare(std::move(quantity), oracle_value, main_value.value(), tolerance);
}

Report compare(std::string quantity, const ExtendedReal& oracle_value, double main_value, double tolerance) {
  return compare(std::move(quantity), oracle_value.value(), main_value, tolerance);
}

std::string to_json(const std::vector<Report>& reports) {
  auto number = [](double v) -> nlohmann::json {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : reports) {
    arr.push_back({{"quantity", r.quantity},
                   {"oracle_value", number(r.oracle_value)},
                   {"main_value", number(r.main_value)},
                   {"abs_error", number(r.abs_error)},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed}});
  }
  return arr.dump(2);
}

}  // namespace mfspec::oracle
