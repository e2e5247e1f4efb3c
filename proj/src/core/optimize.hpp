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

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace mfspec {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
  int evaluations = 0;
};

// Golden-section search for a unimodal f on [a, b]; +HUGE_VAL is a legal value.
ScalarMinimum golden_section(const std::function<double(double)>& f, double a, double b, double xtol);

// Convex f on [-radius, radius] with values in R or +HUGE_VAL. Samples 0 and
// +-2^j to locate a bracket, then runs golden-section search inside it.
ScalarMinimum minimize_convex(const std::function<double(double)>& f, double radius, double xtol);

// Zero of the derivative g near a golden-section minimum, by Newton steps with
// a central-difference slope, kept inside [lo, hi].
struct Polish {
  double x;
  double gradient;
  int iterations;
};
Polish newton_polish(const std::function<double(double)>& g, double x, double lo, double hi, double gtol,
                     int max_iter = 50);

// Value and gradient of a smooth convex function of several variables.
using SmoothObjective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;

struct DescentResult {
  Eigen::VectorXd x;
  double fx = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Armijo backtracking along Newton directions (Hessian by central differences
// of the gradient, steepest descent when it is not positive definite), with
// iterates projected onto the ball of the given radius.
DescentResult minimize_smooth(const SmoothObjective& f, Eigen::VectorXd x0, double radius, double gtol,
                              int max_iter = 500);

}  // namespace mfspec
