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

#include "core/oracle.hpp"
#include "core/spectra.hpp"
#include "frozen_values.hpp"
#include "test_support.hpp"

using namespace mfspec;
using mfspec::test::code_of;
using mfspec::test::near;

namespace {

const Sft kFull = validate_sft({{1, 1}, {1, 1}});
const Sft kGolden = validate_sft({{1, 1}, {1, 0}});
const Potential kZero = Potential::constant(2, 0.0);
const VectorPotential kInd{Potential::indicator(2, 1)};
const VectorPotential kOne{Potential::constant(2, 1.0)};

SpectrumPoint predicted_at(const Sft& sft, double alpha) {
  const double a[] = {alpha};
  return predicted(sft, kInd, kOne, kZero, a);
}

}  // namespace

TEST_CASE("condition Q examples", "[spectra]") {
  CHECK(check_condition_q(kFull, kInd, kOne).passed);
  const VectorPotential ind0{Potential::indicator(2, 0)};
  const ConditionReport bad = check_condition_q(kFull, ind0, ind0);
  CHECK_FALSE(bad.passed);
  CHECK(bad.component == 0);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Word{1});
  const VectorPotential negative{Potential::constant(2, -1.0)};
  CHECK_FALSE(check_condition_q(kFull, kInd, negative).passed);
  CHECK(code_of([&] { domain(kFull, ind0, ind0); }) == ErrorCode::ConditionQViolated);
}

TEST_CASE("domain examples", "[spectra]") {
  DomainDescription d = domain(kFull, kInd, kOne);
  CHECK(d.lower.value() == 0.0);
  CHECK(d.upper.value() == 1.0);
  REQUIRE(d.upper_witness.has_value());
  CHECK(*d.upper_witness == Word{1});

  d = domain(kGolden, kInd, kOne);
  CHECK(d.lower.value() == 0.0);
  CHECK_THAT(d.upper.value(), near(0.5, 1e-15));

  const double u[] = {0.0, std::log(2.0)};
  d = domain(kFull, kOne, VectorPotential{Potential::symbolwise(u)});
  CHECK_THAT(d.lower.value(), near(frozen::kInverseLog2, 1e-12));
  CHECK(d.upper.is_pos_inf());
  CHECK(d.contains_unbounded_direction);

  const double inside[] = {0.3};
  const double outside[] = {0.7};
  const DomainDescription g = domain(kGolden, kInd, kOne);
  CHECK(g.contains(inside));
  CHECK_FALSE(g.contains(outside));
}

TEST_CASE("dichotomy examples", "[spectra]") {
  for (double a : {0.0, 0.2, 0.5}) {
    const double alpha[] = {a};
    CHECK(dichotomy(kGolden, kInd, kOne, alpha) == Dichotomy::NonNegative);
  }
  for (double a : {-0.1, 0.51, 1.0}) {
    const double alpha[] = {a};
    CHECK(dichotomy(kGolden, kInd, kOne, alpha) == Dichotomy::NegInfinity);
  }
}

TEST_CASE("predicted spectrum examples", "[spectra]") {
  SpectrumPoint p = predicted_at(kFull, 0.5);
  CHECK_THAT(p.value.value(), near(frozen::kLog2, 1e-10));
  CHECK(p.status == PointStatus::Interior);
  REQUIRE(p.argmin_q.has_value());
  CHECK_THAT((*p.argmin_q)[0], near(0.0, 1e-6));

  p = predicted_at(kFull, 0.25);
  CHECK_THAT(p.value.value(), near(frozen::kEntropyQuarter, 1e-10));
  REQUIRE(p.argmin_q.has_value());
  CHECK_THAT((*p.argmin_q)[0], near(-std::log(3.0), 1e-5));

  p = predicted_at(kFull, 1.2);
  CHECK(p.value.is_neg_inf());
  CHECK(p.status == PointStatus::Outside);

  p = predicted_at(kGolden, 0.5);
  CHECK(p.status == PointStatus::Boundary);
  CHECK_THAT(p.value.value(), near(0.0, 1e-6));

  // Maximal entropy of the golden-mean shift sits at the Parry frequency.
  const double parry_freq = 1.0 / (1.0 + std::pow((1.0 + std::sqrt(5.0)) / 2.0, 2.0));
  CHECK_THAT(predicted_at(kGolden, parry_freq).value.value(), near(frozen::kParryGolden, 1e-9));
}

TEST_CASE("coarse spectrum examples", "[spectra]") {
  const double half[] = {0.5};
  const double two[] = {2.0};
  CHECK_THAT(coarse(kFull, kInd, kOne, kZero, half, 10.0, 10).value(), near(frozen::kLog2, 1e-15));
  CHECK(coarse(kFull, kInd, kOne, kZero, two, 0.1, 10).is_neg_inf());
  CHECK(coarse(kFull, kInd, kOne, kZero, half, 0.1, 10).value() == frozen::kBinomialRate10);
}

TEST_CASE("conditional variational examples", "[spectra]") {
  const double quarter[] = {0.25};
  SpectrumPoint p = conditional_variational(kFull, kInd, kOne, kZero, quarter, 1);
  CHECK_THAT(p.value.value(), near(frozen::kEntropyQuarter, 1e-8));

  const double third[] = {0.3};
  p = conditional_variational(kGolden, kInd, kOne, kZero, third, 1);
  CHECK_THAT(p.value.value(), near(predicted_at(kGolden, 0.3).value.value(), 1e-6));

  const double outside[] = {0.8};
  CHECK(conditional_variational(kGolden, kInd, kOne, kZero, outside, 1).value.is_neg_inf());
}

TEST_CASE("conditional variational agrees with the grid oracle", "[spectra]") {
  for (double a : {0.1, 0.25, 0.4}) {
    const double alpha[] = {a};
    const double main = conditional_variational(kGolden, kInd, kOne, kZero, alpha, 1).value.value();
    const double brute = oracle::brute_conditional(kGolden, kInd, kOne, kZero, alpha, 2e-3).value();
    // The grid admits kernels with residual up to step / 10.
    CHECK_THAT(brute, near(main, 1e-3));
  }
}

TEST_CASE("supremum over a set", "[spectra]") {
  const SetSupremum s = spectrum_over_set(kFull, kInd, kOne, kZero, {{0.1}, {0.5}, {0.9}, {1.5}});
  CHECK_THAT(s.value.value(), near(frozen::kLog2, 1e-10));
  CHECK(s.argmax == 1);
  CHECK(s.status == PointStatus::Interior);
  CHECK(code_of([] { spectrum_over_set(kFull, kInd, kOne, kZero, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("refine_gamma with a constant denominator", "[spectra]") {
  // Every invariant measure has psi-mean 1, so only gamma = 1 is feasible.
  for (double a : {0.25, 0.5}) {
    const double alpha[] = {a};
    const ExtendedReal r = refine_gamma(kFull, kInd, kOne, kZero, alpha, {{0.5}, {1.0}, {2.0}});
    CHECK_THAT(r.value(), near(predicted_at(kFull, a).value.value(), 1e-8));
  }
  const double alpha[] = {0.5};
  CHECK(refine_gamma(kFull, kInd, kOne, kZero, alpha, {}).is_neg_inf());
}
