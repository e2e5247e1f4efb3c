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
#include "frozen_values.hpp"
#include "test_support.hpp"

using namespace mfspec;
using mfspec::test::code_of;
using mfspec::test::near;

namespace {

const Sft kFull = validate_sft({{1, 1}, {1, 1}});
const Sft kGolden = validate_sft({{1, 1}, {1, 0}});

double closed(const std::string& name, std::initializer_list<double> params) {
  return oracle::closed_form(name, std::vector<double>(params));
}

}  // namespace

TEST_CASE("closed forms", "[oracle]") {
  CHECK_THAT(closed("binary_entropy", {0.25}), near(frozen::kEntropyQuarter, 1e-15));
  CHECK_THAT(closed("binary_entropy", {0.5}), near(frozen::kLog2, 1e-15));
  CHECK(closed("binary_entropy", {0.0}) == 0.0);
  CHECK_THAT(closed("logistic_pressure", {1.0}), near(frozen::kLogOnePlusE, 1e-15));
  CHECK_THAT(closed("logistic_pressure", {800.0}), near(800.0, 1e-12));
  CHECK_THAT(closed("logistic", {1.0}), near(frozen::kLogisticOne, 1e-15));
  CHECK_THAT(closed("moran_root", {0.5, 1.0 / 3.0}), near(frozen::kMoranRoot23, 1e-14));
  CHECK_THAT(closed("moran_root", {0.5, 0.5}), near(1.0, 1e-15));
  CHECK_THAT(closed("parry_golden", {}), near(frozen::kParryGolden, 1e-15));
  CHECK_THAT(closed("log_binomial_rate", {10, 5}), near(frozen::kBinomialRate10, 1e-15));
  CHECK(code_of([] { closed("zeta", {2.0}); }) == ErrorCode::UnknownFormula);
  CHECK(code_of([] { closed("binary_entropy", {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("brute word counts", "[oracle]") {
  CHECK(oracle::brute_word_count(kGolden, 3) == 5);
  CHECK(oracle::brute_word_count(kGolden, 10) == 144);
  CHECK(oracle::brute_word_count(kFull, 12) == 4096);
  CHECK(oracle::brute_word_count(kFull, 0) == 1);
}

TEST_CASE("brute pressure examples", "[oracle]") {
  const Potential zero = Potential::constant(2, 0.0);
  CHECK_THAT(oracle::brute_pressure(kFull, zero, 8), near(frozen::kLog2, 1e-15));
  CHECK_THAT(oracle::brute_pressure(kGolden, zero, 10), near(frozen::kGoldenCover10, 1e-15));
  CHECK_THAT(oracle::brute_pressure(kFull, Potential::indicator(2, 1), 1), near(frozen::kLogOnePlusE, 1e-15));
}

TEST_CASE("brute pressure enforces the word cap", "[oracle]") {
  ::setenv("MFSPEC_MAX_WORDS", "100", 1);
  const auto code = code_of([] { oracle::brute_pressure(kFull, Potential::constant(2, 0.0), 10); });
  ::unsetenv("MFSPEC_MAX_WORDS");
  CHECK(code == ErrorCode::ResourceLimit);
}

TEST_CASE("brute conditional examples", "[oracle]") {
  const VectorPotential ind{Potential::indicator(2, 1)};
  const VectorPotential one{Potential::constant(2, 1.0)};
  const Potential zero = Potential::constant(2, 0.0);
  const double quarter[] = {0.25};
  const double half[] = {0.5};
  const double two[] = {2.0};
  CHECK_THAT(oracle::brute_conditional(kFull, ind, one, zero, quarter, 1e-3).value(),
             near(frozen::kEntropyQuarter, 2e-3));
  CHECK_THAT(oracle::brute_conditional(kFull, ind, one, zero, half, 1e-3).value(), near(frozen::kLog2, 2e-3));
  CHECK(oracle::brute_conditional(kFull, ind, one, zero, two, 1e-2).is_neg_inf());
  // The grid never beats the true supremum by more than the residual allows.
  CHECK(oracle::brute_conditional(kFull, ind, one, zero, quarter, 1e-3).value() <= frozen::kEntropyQuarter + 2e-4);
}

TEST_CASE("brute periodic ratio ranges", "[oracle]") {
  const Potential ind = Potential::indicator(2, 1);
  const Potential one = Potential::constant(2, 1.0);
  auto r = oracle::brute_periodic_ratios(kGolden, ind, one, 10);
  CHECK(r.min == 0.0);
  CHECK(r.max == 0.5);
  r = oracle::brute_periodic_ratios(kFull, ind, one, 6);
  CHECK(r.min == 0.0);
  CHECK(r.max == 1.0);

  const double u[] = {0.0, std::log(2.0)};
  r = oracle::brute_periodic_ratios(kFull, one, Potential::symbolwise(u), 8);
  CHECK_THAT(r.min, near(frozen::kInverseLog2, 1e-15));
  CHECK(r.zero_psi_positive_phi);
  CHECK_FALSE(r.zero_psi_negative_phi);

  // -log p / log 2 for the Bernoulli(3/4, 1/4) measure.
  const double neg_log_p[] = {-std::log(0.75), -std::log(0.25)};
  const double log2[] = {std::log(2.0), std::log(2.0)};
  r = oracle::brute_periodic_ratios(kFull, Potential::symbolwise(neg_log_p), Potential::symbolwise(log2), 6);
  CHECK_THAT(r.min, near(frozen::kPointwiseLower, 1e-15));
  CHECK_THAT(r.max, near(2.0, 1e-15));
}

TEST_CASE("oracle reports", "[oracle]") {
  const oracle::Report ok = oracle::compare("x", 1.0, 1.0 + 1e-9, 1e-8);
  CHECK(ok.passed);
  CHECK_THAT(ok.abs_error, near(1e-9, 1e-15));
  CHECK_FALSE(oracle::compare("x", 1.0, 1.1, 1e-8).passed);
  CHECK(oracle::compare("x", -HUGE_VAL, -HUGE_VAL, 0.0).passed);
  CHECK_FALSE(oracle::compare("x", -HUGE_VAL, 0.0, 1e9).passed);
  const std::string json = oracle::to_json({ok, oracle::compare("y", HUGE_VAL, 0.0, 0.0)});
  CHECK(json.find("\"quantity\": \"x\"") != std::string::npos);
  CHECK(json.find("\"oracle_value\": \"inf\"") != std::string::npos);
  CHECK(json.find("\"passed\": false") != std::string::npos);
}
