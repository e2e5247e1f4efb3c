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

#include "core/symbolic.hpp"

namespace mfspec {

struct ConditionalSolution {
  bool converged = false;
  double value = 0.0;     // h + int xi at the optimum
  double entropy = 0.0;
  std::optional<MarkovMeasure> measure;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

// Maximizes h(nu) + int xi d(nu) over circulations nu on the edges of
// BlockGraph(sft, order), normalized to mass 1, with int level_i d(nu) = 0.
// The entropy of the Markov measure nu / pi is concave in nu, and the problem
// is solved by infeasible-start Newton iterations on the KKT system.
ConditionalSolution maximize_conditional(const Sft& sft, const VectorPotential& level, const Potential& xi,
                                         int order);

}  // namespace mfspec
