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
#include <span>
#include <vector>

#include "core/symbolic.hpp"

namespace mfspec {

// Weighted adjacency of BlockGraph(sft, max(k-1, 1)) for a depth-k potential:
// the edge for word w carries exp(phi(w)). Weights are kept as logarithms.
class TransferMatrix {
 public:
  TransferMatrix(const Sft& sft, const Potential& phi);

  const BlockGraph& graph() const { return graph_; }
  const std::vector<double>& log_weights() const { return log_weights_; }

 private:
  BlockGraph graph_;
  std::vector<double> log_weights_;
};

// Perron root and vectors, all in log scale. Vectors are normalized so that
// max(right) = 1 and sum(left * right) = 1.
struct PerronPair {
  double log_radius = 0.0;
  std::vector<double> log_right;
  std::vector<double> log_left;
  int iterations = 0;
};

// Power iteration alternating M and the shifted M + c I, c the current lower
// bound, certified by the Collatz-Wielandt bounds
// min_i (Mx)_i / x_i <= rho <= max_i (Mx)_i / x_i reaching relative width 1e-13. Throws NonConvergence after 1e5 iterations.
PerronPair perron(const TransferMatrix& matrix);

double pressure(const Sft& sft, const Potential& phi);

// Unique equilibrium state: Markov of order max(k-1, 1) with kernel
// M_e r_to / (rho r_from) and stationary vector l * r.
MarkovMeasure equilibrium_markov(const Sft& sft, const Potential& phi);

// Gradient of q -> P(<q, xi> + xi0), which is the integral of xi against the
// equilibrium state of <q, xi> + xi0.
std::vector<double> pressure_gradient(const Sft& sft, const VectorPotential& xi, const Potential& xi0,
                                      std::span<const double> q);

// A continuous function known through its values on points and a bound on
// its oscillation inside k-cylinders.
struct PotentialOracle {
  std::function<double(std::span<const int>)> evaluate;
  std::function<double(int)> variation;
  int horizon = 64;  // length of the finite prefix passed to evaluate
};

struct Approximation {
  Potential potential;
  double error_bound;
};

// Depth-k projection onto locally constant functions. Each k-word takes the
// value at its lexicographically minimal admissible extension.
Approximation approximate_potential(const Sft& sft, const PotentialOracle& oracle, int depth);

// (1/n) log sum over admissible words w of length n + k - 1 of exp(S_n phi(w)).
// Terms are summed in ascending order after factoring out the largest.
double pressure_cover_estimate(const Sft& sft, const Potential& phi, int n);

}  // namespace mfspec
