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

#include "core/symbolic.hpp"
#include "frozen_values.hpp"
#include "test_support.hpp"

using namespace mfspec;
using mfspec::test::code_of;
using mfspec::test::near;

namespace {

const Sft kFull = validate_sft({{1, 1}, {1, 1}});
const Sft kGolden = validate_sft({{1, 1}, {1, 0}});

}  // namespace

TEST_CASE("validate_sft accepts irreducible matrices and computes the period", "[symbolic]") {
  CHECK(kFull.alphabet_size() == 2);
  CHECK(kFull.period() == 1);
  CHECK(kGolden.period() == 1);
  CHECK(validate_sft({{0, 1}, {1, 0}}).period() == 2);
  CHECK(validate_sft({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}).period() == 3);
}

TEST_CASE("validate_sft rejects reducible or degenerate matrices", "[symbolic]") {
  CHECK(code_of([] { validate_sft({{1, 0}, {0, 1}}); }) == ErrorCode::NotIrreducible);
  CHECK(code_of([] { validate_sft({{1, 1}, {0, 0}}); }) == ErrorCode::EmptyRow);
  CHECK(code_of([] { validate_sft({}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { validate_sft({{1, 1}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("enumerate_words lists admissible words in lexicographic order", "[symbolic]") {
  CHECK(enumerate_words(kFull, 3).size() == 8);
  const auto golden = enumerate_words(kGolden, 3);
  REQUIRE(golden.size() == 5);
  CHECK(golden.front() == Word{0, 0, 0});
  CHECK(golden.back() == Word{1, 0, 1});
  CHECK(std::is_sorted(golden.begin(), golden.end()));
  const auto empty = enumerate_words(kGolden, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().empty());
  CHECK(code_of([] { enumerate_words(kFull, 10, 100); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("word counts follow the transfer recursion", "[symbolic]") {
  // Fibonacci numbers for the golden-mean shift.
  std::uint64_t a = 2;
  std::uint64_t b = 3;
  for (int n = 1; n <= 40; ++n) {
    CHECK(count_words(kGolden, n) == a);
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  CHECK(count_words(kFull, 20) == (1u << 20));
}

TEST_CASE("birkhoff_ratio examples", "[symbolic]") {
  const VectorPotential ind{Potential::indicator(2, 1)};
  const VectorPotential one{Potential::constant(2, 1.0)};
  const Word w101{1, 0, 1};
  auto r = birkhoff_ratio(ind, one, w101);
  REQUIRE(r[0].has_value());
  CHECK_THAT(*r[0], near(2.0 / 3.0, 1e-15));

  const Potential pair = Potential::from_words(kFull, 2, {{{0, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}, {{1, 1}, 1}});
  const Word w0111{0, 1, 1, 1};
  r = birkhoff_ratio(VectorPotential{pair}, VectorPotential{Potential::constant(2, 1.0).lifted(2)}, w0111);
  REQUIRE(r[0].has_value());
  CHECK_THAT(*r[0], near(2.0 / 3.0, 1e-15));

  const double u[] = {0.0, std::log(2.0)};
  r = birkhoff_ratio(one, VectorPotential{Potential::symbolwise(u)}, Word{0, 0, 0});
  CHECK_FALSE(r[0].has_value());

  CHECK(code_of([&] { birkhoff_sum(pair, Word{0, 1}, 2); }) == ErrorCode::DepthMismatch);
}

TEST_CASE("Birkhoff sums are additive", "[symbolic]") {
  const Potential pair = Potential::from_words(kFull, 2, {{{0, 0}, 0.375}, {{0, 1}, -1.25}, {{1, 0}, 2.5}, {{1, 1}, 0.125}});
  for (const Word& w : enumerate_words(kFull, 9)) {
    for (int n = 0; n <= 8; ++n) {
      const int m = 8 - n;
      const double whole = birkhoff_sum(pair, w, 8);
      const double split = birkhoff_sum(pair, std::span<const int>(w).first(n + 1), n) +
                           birkhoff_sum(pair, std::span<const int>(w).subspan(n), m);
      // Dyadic values keep every partial sum exact.
      CHECK(whole == split);
    }
  }
}

TEST_CASE("Potential construction and lifting", "[symbolic]") {
  CHECK(code_of([] { Potential::from_words(kGolden, 2, {{{0, 0}, 1.0}, {{0, 1}, 1.0}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { Potential::from_words(kGolden, 2, {{{1, 1}, 1.0}}); }) == ErrorCode::InvalidArgument);
  const double v[] = {0.5, -2.0};
  const Potential p = Potential::symbolwise(v);
  const Potential lifted = p.lifted(3);
  CHECK(lifted.depth() == 3);
  for (const Word& w : enumerate_words(kFull, 3)) CHECK(lifted(w) == p(w));
  const Potential sum = p + lifted;
  CHECK(sum.depth() == 3);
  CHECK(sum(Word{1, 0, 0}) == -4.0);
  CHECK(code_of([&] { p.lifted(0); }) == ErrorCode::DepthMismatch);
}

TEST_CASE("markov_stats examples", "[symbolic]") {
  const Potential ind = Potential::indicator(2, 1);
  const double half[] = {0.5, 0.5};
  auto st = markov_stats(MarkovMeasure::bernoulli(kFull, half), ind);
  CHECK_THAT(st.entropy, near(frozen::kLog2, 1e-12));
  CHECK_THAT(st.integral, near(0.5, 1e-12));

  const double quarter[] = {0.75, 0.25};
  st = markov_stats(MarkovMeasure::bernoulli(kFull, quarter), ind);
  CHECK_THAT(st.entropy, near(frozen::kEntropyQuarter, 1e-12));
  CHECK_THAT(st.integral, near(0.25, 1e-12));

  // Parry measure written out by hand: p(0 -> 0) = 1/g, p(0 -> 1) = 1/g^2, p(1 -> 0) = 1.
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  const MarkovMeasure parry(kGolden, 1, {1.0 / g, 1.0 / (g * g), 1.0});
  st = markov_stats(parry, Potential::constant(2, 0.0));
  CHECK_THAT(st.entropy, near(frozen::kParryGolden, 1e-12));
  CHECK_THAT(st.integral, near(0.0, 1e-15));
}

TEST_CASE("MarkovMeasure validation", "[symbolic]") {
  CHECK(code_of([] { MarkovMeasure(kFull, 1, {0.5, 0.6, 0.5, 0.5}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { MarkovMeasure(kFull, 1, {0.5, 0.5, 0.5, 0.5}, {0.9, 0.1}); }) == ErrorCode::InvalidArgument);
  const double quarter[] = {0.75, 0.25};
  const MarkovMeasure mu = MarkovMeasure::bernoulli(kFull, quarter);
  const MarkovMeasure lifted = mu.lifted(3);
  CHECK(lifted.order() == 3);
  CHECK_THAT(lifted.entropy(), near(mu.entropy(), 1e-12));
  CHECK_THAT(lifted.integral(Potential::indicator(2, 1)), near(0.25, 1e-12));
}

TEST_CASE("Markov entropy never exceeds the topological entropy", "[symbolic]") {
  const double rho = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  for (double p : {0.05, 0.3, 0.5, 0.618, 0.9}) {
    const MarkovMeasure mu(kGolden, 1, {p, 1.0 - p, 1.0});
    CHECK(mu.entropy() <= rho + 1e-9);
  }
}
