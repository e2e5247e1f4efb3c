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

#include <cmath>

#include "core/pressure.hpp"
#include "frozen_values.hpp"
#include "test_support.hpp"

using namespace mfspec;
using mfspec::test::near;

namespace {

const Sft kFull = validate_sft({{1, 1}, {1, 1}});
const Sft kGolden = validate_sft({{1, 1}, {1, 0}});
const Potential kZero = Potential::constant(2, 0.0);
const Potential kInd = Potential::indicator(2, 1);

}  // namespace

TEST_CASE("pressure examples", "[pressure]") {
  CHECK_THAT(pressure(kFull, kZero), near(frozen::kLog2, 1e-13));
  CHECK_THAT(pressure(kGolden, kZero), near(frozen::kParryGolden, 1e-13));
  CHECK_THAT(pressure(kFull, kInd), near(frozen::kLogOnePlusE, 1e-13));
}

TEST_CASE("pressure of periodic and larger shifts", "[pressure]") {
  // Period-2 shift: one periodic orbit of length 2, entropy 0.
  CHECK_THAT(pressure(validate_sft({{0, 1}, {1, 0}}), kZero), near(0.0, 1e-13));
  // Full 3-shift with a depth-2 potential: spectral radius of [[e^a, e^b, ...]] rows.
  const Sft full3 = validate_sft({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK_THAT(pressure(full3, Potential::constant(3, 0.0)), near(std::log(3.0), 1e-13));
  const double v[] = {0.0, 1.0, 2.0};
  // Depth-1 potential on a full shift: log sum exp.
  CHECK_THAT(pressure(full3, Potential::symbolwise(v)), near(std::log(1.0 + std::exp(1.0) + std::exp(2.0)), 1e-13));
}

TEST_CASE("pressure is stable for extreme potentials", "[pressure]") {
  CHECK_THAT(pressure(kFull, 1000.0 * kInd), near(1000.0, 1e-9));
  CHECK_THAT(pressure(kFull, -1000.0 * kInd), near(0.0, 1e-12));
  CHECK_THAT(pressure(kGolden, -800.0 * kInd), near(0.0, 1e-12));
  CHECK_THAT(pressure(kFull, 1e12 * kInd) / 1e12, near(1.0, 1e-12));
}

TEST_CASE("pressure_gradient examples", "[pressure]") {
  const VectorPotential xi{kInd};
  const double q0[] = {0.0};
  const double q1[] = {1.0};
  CHECK_THAT(pressure_gradient(kFull, xi, kZero, q0)[0], near(0.5, 1e-12));
  CHECK_THAT(pressure_gradient(kFull, xi, kZero, q1)[0], near(frozen::kLogisticOne, 1e-12));
  const VectorPotential c{Potential::constant(2, 2.5)};
  for (double q : {-3.0, 0.0, 4.0}) {
    const double qq[] = {q};
    CHECK_THAT(pressure_gradient(kGolden, c, kZero, qq)[0], near(2.5, 1e-12));
  }
}

TEST_CASE("equilibrium_markov examples", "[pressure]") {
  const MarkovMeasure uniform = equilibrium_markov(kFull, kZero);
  for (double p : uniform.kernel()) CHECK_THAT(p, near(0.5, 1e-12));

  const MarkovMeasure tilted = equilibrium_markov(kFull, kInd);
  const BlockGraph& g = tilted.graph();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const double expected = g.edges()[e].symbol == 1 ? frozen::kLogisticOne : 1.0 - frozen::kLogisticOne;
    CHECK_THAT(tilted.kernel()[e], near(expected, 1e-12));
  }

  const MarkovMeasure parry = equilibrium_markov(kGolden, kZero);
  for (std::size_t e = 0; e < parry.graph().edge_count(); ++e) {
    if (parry.graph().edges()[e].from == 1) CHECK_THAT(parry.kernel()[e], near(1.0, 1e-12));
  }
  CHECK_THAT(parry.entropy(), near(frozen::kParryGolden, 1e-12));
}

TEST_CASE("equilibrium states attain the pressure", "[pressure]") {
  const Potential pair = Potential::from_words(kGolden, 2, {{{0, 0}, 0.4}, {{0, 1}, -1.1}, {{1, 0}, 0.7}});
  const Potential triple = pair.lifted(3) + 0.3 * kInd.lifted(3);
  for (const Potential* phi : {&kInd, &pair, &triple}) {
    const MarkovMeasure mu = equilibrium_markov(kGolden, *phi);
    CHECK(mu.order() == block_length_for_depth(phi->depth()));
    const MarkovStats st = markov_stats(mu, *phi);
    CHECK_THAT(st.entropy + st.integral, near(pressure(kGolden, *phi), 1e-8));
  }
}

TEST_CASE("approximate_potential examples", "[pressure]") {
  PotentialOracle dyadic{[](std::span<const int> x) {
                           double s = 0.0;
                           for (std::size_t i = 0; i < x.size(); ++i) s += std::ldexp(x[i], -static_cast<int>(i) - 1);
                           return s;
                         },
                         [](int k) { return std::ldexp(1.0, -k); }, 64};
  const Approximation a2 = approximate_potential(kFull, dyadic, 2);
  CHECK_THAT(a2.error_bound, near(0.25, 1e-15));
  CHECK(a2.potential.depth() == 2);
  // Lexicographically minimal extension of 11 is 1100..., value 3/4.
  CHECK_THAT(a2.potential(Word{1, 1}), near(0.75, 1e-15));
  CHECK(std::abs(pressure(kFull, a2.potential) - std::log(1.0 + std::exp(0.5)) - 0.25) <= 0.25 + 1e-12);

  PotentialOracle constant{[](std::span<const int>) { return 1.5; }, [](int) { return 0.0; }, 64};
  const Approximation c = approximate_potential(kGolden, constant, 1);
  CHECK(c.error_bound == 0.0);
  CHECK(c.potential(Word{1}) == 1.5);

  const Potential depth3 = 0.25 * kInd.lifted(3) + Potential::from_words(kFull, 2, {{{0, 0}, 1}, {{0, 1}, 2}, {{1, 0}, 3}, {{1, 1}, 4}}).lifted(3);
  PotentialOracle exact{[&](std::span<const int> x) { return depth3(x); }, [](int k) { return k >= 3 ? 0.0 : 10.0; },
                        64};
  const Approximation e = approximate_potential(kFull, exact, 3);
  CHECK(e.error_bound == 0.0);
  CHECK(e.potential.values() == depth3.values());
}

TEST_CASE("cover estimates", "[pressure]") {
  for (int n : {1, 5, 12}) CHECK_THAT(pressure_cover_estimate(kFull, kZero, n), near(frozen::kLog2, 1e-15));
  CHECK_THAT(pressure_cover_estimate(kGolden, kZero, 10), near(frozen::kGoldenCover10, 1e-15));
  CHECK_THAT(pressure_cover_estimate(kFull, kInd, 1), near(frozen::kLogOnePlusE, 1e-15));
}

TEST_CASE("cover estimates approach the pressure at rate 1/n", "[pressure]") {
  const Potential pair = Potential::from_words(kGolden, 2, {{{0, 0}, 0.4}, {{0, 1}, -1.1}, {{1, 0}, 0.7}});
  for (const Potential* phi : {&kZero, &kInd, &pair}) {
    const double p = pressure(kGolden, *phi);
    double previous = HUGE_VAL;
    for (int n = 4; n <= 16; ++n) {
      const double gap = std::abs(pressure_cover_estimate(kGolden, *phi, n) - p);
      CHECK(gap <= 2.0 / n);
      CHECK(gap <= previous);
      previous = gap;
    }
  }
}
