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

#include "core/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace mfspec {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

ScalarMinimum golden_section(const std::function<double(double)>& f, double a, double b, double xtol) {
  ScalarMinimum out;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  double best_x = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  while (b - a > xtol * std::max(1.0, std::abs(a) + std::abs(b))) {
    bool keep_left;
    if (fc == HUGE_VAL && fd == HUGE_VAL) {
      keep_left = best_x < c;
    } else {
      keep_left = fc <= fd;
    }
    if (keep_left) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      if (fc < best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      if (fd < best_f) best_f = fd, best_x = d;
    }
    ++out.evaluations;
    if (out.evaluations > 400) break;
  }
  out.x = best_x;
  out.fx = best_f;
  out.lo = a;
  out.hi = b;
  return out;
}

ScalarMinimum minimize_convex(const std::function<double(double)>& f, double radius, double xtol) {
  int evaluations = 0;
  auto eval = [&](double x) {
    ++evaluations;
    return f(x);
  };
  constexpr double kFirst = 1.0 / 256.0;
  double lo, hi;
  const double f0 = eval(0.0);
  if (f0 < HUGE_VAL) {
    const double step = std::min(kFirst, radius);
    const double fp = eval(step);
    const double fm = eval(-step);
    if (fp >= f0 && fm >= f0) {
      lo = -step;
      hi = step;
    } else {
      // March downhill with doubling steps until the value rises.
      const double sign = fp < fm ? 1.0 : -1.0;
      double prev = 0.0, cur = step, fcur = std::min(fp, fm);
      for (;;) {
        const double next = std::min(2.0 * cur, radius);
        if (next == cur) break;
        const double fnext = eval(sign * next);
        if (fnext >= fcur) {
          cur = next;
          break;
        }
        prev = cur;
        cur = next;
        fcur = fnext;
      }
      lo = sign > 0 ? prev : -cur;
      hi = sign > 0 ? cur : -prev;
    }
  } else {
    // Symmetric sampling to find the finite part of the domain.
    std::vector<double> xs{0.0};
    for (double s = kFirst; s < radius; s *= 2.0) {
      xs.push_back(s);
      xs.push_back(-s);
    }
    xs.push_back(radius);
    xs.push_back(-radius);
    std::sort(xs.begin(), xs.end());
    std::vector<double> fs;
    for (double x : xs) fs.push_back(eval(x));
    const auto i = static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
    if (fs[i] == HUGE_VAL) {
      ScalarMinimum out;
      out.x = 0.0;
      out.fx = HUGE_VAL;
      out.evaluations = evaluations;
      return out;
    }
    lo = xs[i == 0 ? 0 : i - 1];
    hi = xs[i + 1 == xs.size() ? i : i + 1];
  }
  ScalarMinimum out = golden_section(f, lo, hi, xtol);
  out.evaluations += evaluations;
  return out;
}

Polish newton_polish(const std::function<double(double)>& g, double x, double lo, double hi, double gtol,
                     int max_iter) {
  double gx = g(x);
  int it = 0;
  while (std::abs(gx) > gtol && it < max_iter) {
    ++it;
    if (gx > 0.0) hi = std::min(hi, x);
    if (gx < 0.0) lo = std::max(lo, x);
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    const double slope = (g(x + h) - g(x - h)) / (2.0 * h);
    double next = slope > 0.0 ? x - gx / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
    gx = g(x);
  }
  return Polish{x, gx, it};
}

DescentResult minimize_smooth(const SmoothObjective& f, Eigen::VectorXd x0, double radius, double gtol,
                              int max_iter) {
  const Eigen::Index n = x0.size();
  auto project = [&](Eigen::VectorXd v) {
    const double norm = v.norm();
    if (norm > radius) v *= radius / norm;
    return v;
  };
  DescentResult out;
  out.x = project(std::move(x0));
  Eigen::VectorXd g(n);
  out.fx = f(out.x, &g);
  for (; out.iterations < max_iter; ++out.iterations) {
    out.gradient_norm = g.norm();
    if (out.gradient_norm <= gtol) {
      out.converged = true;
      return out;
    }
    Eigen::MatrixXd hess(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double h = 1e-5 * std::max(1.0, std::abs(out.x(j)));
      Eigen::VectorXd xp = out.x, xm = out.x, gp(n), gm(n);
      xp(j) += h;
      xm(j) -= h;
      f(xp, &gp);
      f(xm, &gm);
      hess.col(j) = (gp - gm) / (2.0 * h);
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::VectorXd dir;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive() && (ldlt.vectorD().array() > 0.0).all()) {
      dir = -ldlt.solve(g);
    }
    if (dir.size() != n || !dir.allFinite() || dir.dot(g) >= 0.0) dir = -g;

    double t = 1.0;
    bool accepted = false;
    Eigen::VectorXd x_new, g_new(n);
    double f_new = 0.0;
    for (int k = 0; k < 60; ++k, t *= 0.5) {
      x_new = project(out.x + t * dir);
      f_new = f(x_new, &g_new);
      const double decrease = g.dot(x_new - out.x);
      const bool armijo = f_new <= out.fx + 1e-4 * decrease;
      // Near the optimum, decreases fall below rounding; accept steps that
      // shrink the gradient without raising the value.
      const bool flat = g_new.norm() < g.norm() && f_new <= out.fx + 1e-14 * (1.0 + std::abs(out.fx));
      if (armijo || flat) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    if ((x_new - out.x).norm() == 0.0) {
      out.x = x_new;
      out.fx = f_new;
      g = g_new;
      break;
    }
    out.x = x_new;
    out.fx = f_new;
    g = g_new;
  }
  out.gradient_norm = g.norm();
  out.converged = out.gradient_norm <= gtol;
  return out;
}

}  // namespace mfspec
