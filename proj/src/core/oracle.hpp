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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/extended_real.hpp"
#include "core/symbolic.hpp"

namespace mfspec::oracle {

// Brute-force references. Nothing here touches transfer matrices, block
// graphs or the optimizers of the main path.

std::uint64_t brute_word_count(const Sft& sft, int n);

// (1/n) log sum over words of length n + k - 1 of exp(S_n phi), by depth-first
// enumeration, with the same sorted summation as the cover estimate.
double brute_pressure(const Sft& sft, const Potential& phi, int n);

// Maximum of h + int xi over a grid of order-1 Markov kernels whose constraint
// residual is at most the grid step, refined once around the best kernel.
// Potentials must have depth at most 2.
ExtendedReal brute_conditional(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                               const Potential& xi, std::span<const double> alpha, double grid_step);

// Named analytic expressions:
//   binary_entropy(p), logistic_pressure(q) = log(1 + e^q), logistic(q),
//   moran_root(r_1, ..., r_k) solving sum r_i^t = 1, parry_golden(),
//   log_binomial_rate(n, k) = log C(n, k) / n.
// Throws UnknownFormula otherwise.
double closed_form(const std::string& name, std::span<const double> params);

// Ratio extremes S phi / S psi over periodic words of length at most
// max_period, plus the signs of S phi on periodic words with S psi = 0.
struct PeriodicRatios {
  double min = HUGE_VAL;
  double max = -HUGE_VAL;
  bool zero_psi_positive_phi = false;
  bool zero_psi_negative_phi = false;
};
PeriodicRatios brute_periodic_ratios(const Sft& sft, const Potential& phi, const Potential& psi, int max_period);

struct Report {
  std::string quantity;
  double oracle_value = 0.0;
  double main_value = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// passed <=> |oracle - main| <= tolerance; equal infinities pass.
Report compare(std::string quantity, double oracle_value, double main_value, double tolerance);
Report compare(std::string quantity, const ExtendedReal& oracle_value, const ExtendedReal& main_value,
               double tolerance);
Report compare(std::string quantity, double oracle_value, const ExtendedReal& main_value, double tolerance);
Report compare(std::string quantity, const ExtendedReal& oracle_value, double main_value, double tolerance);

std::string to_json(const std::vector<Report>& reports);

}  // namespace mfspec::oracle
