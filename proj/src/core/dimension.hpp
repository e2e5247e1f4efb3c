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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/extended_real.hpp"
#include "core/spectra.hpp"
#include "core/symbolic.hpp"

namespace mfspec {

// Markov interval map with constant slope on each branch.
struct PiecewiseLinearMap {
  std::vector<double> slopes;
  std::vector<std::vector<int>> transitions;

  // All-ones transitions.
  static PiecewiseLinearMap full_branch(std::vector<double> slopes);
  // Branch with slope 1, if any.
  std::optional<int> indifferent_branch() const;
};

struct CodedMap {
  Sft sft;
  Potential log_derivative;  // u = log |Df|, depth 1
};

// Throws NotMarkov for reducible transitions and InvalidArgument for slopes
// below 1 or a slope-1 branch without a fixed point.
CodedMap code_as_sft(const PiecewiseLinearMap& map);

// P holds when u >= 0 and the only cycles with zero u-sum are self-loops.
ConditionReport check_condition_p(const Sft& sft, const Potential& u);

// inf{t : P(eta - t u) <= 0}; +inf when the pressure stays positive.
ExtendedReal bowen_root(const Sft& sft, const Potential& eta, const Potential& u);

ExtendedReal t_u_of_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi, const Potential& u,
                      std::span<const double> alpha, std::span<const double> q);

// inf over q of T_u(q).
SpectrumPoint u_dimension_spectrum(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                   const Potential& u, std::span<const double> alpha);

SpectrumPoint entropy_birkhoff_spectrum(const Sft& sft, const Potential& phi, double alpha);

// (1/alpha) inf over q of (P(q u) - q alpha).
SpectrumPoint lyapunov_spectrum(const PiecewiseLinearMap& map, double alpha);

// Throws ExcludedAlpha at alpha = phi(p) for the indifferent fixed point p.
SpectrumPoint birkhoff_dimension_spectrum(const PiecewiseLinearMap& map, const Potential& phi, double alpha);

// Spectrum of pointwise dimensions of the weak Gibbs measure of phi0,
// inf over q of (T(q) - q alpha) with T(q) the Bowen root of -q phi0.
SpectrumPoint pointwise_dimension_spectrum(const PiecewiseLinearMap& map, const Potential& phi0, double alpha);

// inf over q of P(<q, Phi>) + <q, alpha>, for potentials with zero pressure.
SpectrumPoint local_entropy_spectrum(const Sft& sft, const VectorPotential& phi, std::span<const double> alpha);

// Supremum of h / int u over order-`order` Markov measures with
// int (Phi - alpha * Psi) = 0, by Dinkelbach iterations.
SpectrumPoint conditional_dimension(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                    const Potential& u, std::span<const double> alpha, int order);

}  // namespace mfspec
