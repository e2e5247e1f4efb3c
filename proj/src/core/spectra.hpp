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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/cycles.hpp"
#include "core/extended_real.hpp"
#include "core/geometry.hpp"
#include "core/symbolic.hpp"

namespace mfspec {

enum class PointStatus { Interior, Boundary, Outside, Undefined };

std::string_view to_string(PointStatus status);

struct SpectrumPoint {
  std::vector<double> alpha;
  ExtendedReal value;
  std::optional<std::vector<double>> argmin_q;
  PointStatus status = PointStatus::Undefined;
  int iterations = 0;
};

// Distance below which alpha counts as a boundary point of the domain.
inline constexpr double kBoundaryTolerance = 1e-9;

struct ConditionReport {
  bool passed = true;
  int component = -1;            // offending component, -1 when passed
  std::optional<Word> witness;   // offending cycle
  std::string reason;
};

// Q holds when every psi_i has nonnegative cycle means and no cycle with zero
// psi_i-mean has zero phi_i-mean.
ConditionReport check_condition_q(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi);

struct DomainDescription {
  std::size_t dim = 1;
  // d = 1: the ratio interval and the cycles attaining its ends.
  ExtendedReal lower;
  ExtendedReal upper;
  std::optional<Word> lower_witness;
  std::optional<Word> upper_witness;
  // Ratio vectors of the cycles with positive psi-means, and the extreme
  // ones picked out by a direction grid (d >= 2).
  std::vector<Eigen::VectorXd> ratio_points;
  std::vector<Eigen::VectorXd> boundary_points;
  bool contains_unbounded_direction = false;

  // Cycle means of phi and psi, for membership tests in any dimension.
  std::vector<Eigen::VectorXd> phi_means;
  std::vector<Eigen::VectorXd> psi_means;

  bool contains(std::span<const double> alpha) const;
};

// Throws ConditionQViolated with the witness cycle in the message.
DomainDescription domain(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi);

// Cycle geometry of J(Phi, Psi, alpha): the convex hull of the cycle means of
// Phi - alpha * Psi, which is the set of integrals over invariant measures.
struct LevelGeometry {
  std::vector<Cycle> cycles;
  std::vector<Eigen::VectorXd> points;
  OriginLocation origin;
  PointStatus status = PointStatus::Undefined;
  // Distance from alpha to the domain boundary (d = 1) or the inradius of J
  // (d >= 2), measured inside the relative interior.
  double margin = 0.0;
  double scale = 0.0;  // largest |point|
};

LevelGeometry level_geometry(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                             std::span<const double> alpha);

enum class Dichotomy { NonNegative, NegInfinity };

Dichotomy dichotomy(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                    std::span<const double> alpha);

// inf over q of P(<q, Phi - alpha * Psi> + xi).
SpectrumPoint predicted(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                        const Potential& xi, std::span<const double> alpha);

// (1/n) log of the sum of exp(S_n xi(w)) over words whose ratio vector lies in
// the open box of half-width gamma around alpha.
ExtendedReal coarse(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi, const Potential& xi,
                    std::span<const double> alpha, double gamma, int n);

// Maximum of h + int xi over order-`order` Markov measures with
// int (Phi - alpha * Psi) = 0.
SpectrumPoint conditional_variational(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                                      const Potential& xi, std::span<const double> alpha, int order);

struct SetSupremum {
  ExtendedReal value;
  PointStatus status = PointStatus::Outside;
  std::size_t argmax = 0;
};

SetSupremum spectrum_over_set(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                              const Potential& xi, const std::vector<std::vector<double>>& grid);

// Supremum over gamma of the predicted spectrum of (Phi, Psi) against the
// constant denominator at level (alpha * gamma, gamma).
ExtendedReal refine_gamma(const Sft& sft, const VectorPotential& phi, const VectorPotential& psi,
                          const Potential& xi, std::span<const double> alpha,
                          const std::vector<std::vector<double>>& gamma_grid);

}  // namespace mfspec
