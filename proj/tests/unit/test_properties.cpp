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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "core/oracle.hpp"
#include "core/pressure.hpp"
#include "core/spectra.hpp"
#include "test_support.hpp"

using namespace mfspec;
using mfspec::test::near;

namespace {

const Sft kGolden = validate_sft({{1, 1}, {1, 0}});
const Sft kThree = validate_sft({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

Potential random_potential(const Sft& sft, int depth, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::map<Word, double> values;
  for (const Word& w : enumerate_words(sft, depth)) values[w] = dist(rng);
  return Potential::from_words(sft, depth, values);
}

// Karp's minimum cycle mean over the 1-block graph of a depth-2 potential.
double karp_min_mean(const Sft& sft, const Potential& phi) {
  const int n = static_cast<int>(sft.alphabet_size());
  const double inf = std::numeric_limits<double>::infinity();
  double best = inf;
  for (int s = 0; s < n; ++s) {
    std::vector<std::vector<double>> d(n + 1, std::vector<double>(n, inf));
    d[0][s] = 0.0;
    for (int k = 1; k <= n; ++k)
      for (int a = 0; a < n; ++a)
        if (d[k - 1][a] < inf)
          for (int b : sft.successors(a)) d[k][b] = std::min(d[k][b], d[k - 1][a] + phi(Word{a, b}));
    for (int v = 0; v < n; ++v) {
      if (d[n][v] == inf) continue;
      double worst = -inf;
      for (int k = 0; k < n; ++k)
        if (d[k][v] < inf) worst = std::max(worst, (d[n][v] - d[k][v]) / (n - k));
      best = std::min(best, worst);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("domain ends match Karp cycle means", "[properties]") {
  std::mt19937 rng(7);
  const VectorPotential one{Potential::constant(3, 1.0).lifted(2)};
  for (int trial = 0; trial < 10; ++trial) {
    const Potential phi = random_potential(kThree, 2, rng);
    const DomainDescription d = domain(kThree, VectorPotential{phi}, one);
    CHECK_THAT(d.lower.value(), near(karp_min_mean(kThree, phi), 1e-12));
    CHECK_THAT(d.upper.value(), near(-karp_min_mean(kThree, -phi), 1e-12));
  }
}

TEST_CASE("pressure is convex, monotone and translation equivariant", "[properties]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Potential f = random_potential(kThree, 2, rng);
    const Potential g = random_potential(kThree, 2, rng);
    const double pf = pressure(kThree, f);
    const double pg = pressure(kThree, g);
    for (double t : {0.25, 0.5, 0.75}) CHECK(pressure(kThree, t * f + (1.0 - t) * g) <= t * pf + (1.0 - t) * pg + 1e-12);
    CHECK_THAT(pressure(kThree, f + 1.5), near(pf + 1.5, 1e-12));
    CHECK(pressure(kThree, f + Potential::indicator(3, 2).lifted(2)) >= pf - 1e-12);
    CHECK(std::abs(pf - pg) <= sup_norm(kThree, f - g) + 1e-12);
  }
}

TEST_CASE("no Markov measure beats the pressure", "[properties]") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  const Potential phi = random_potential(kGolden, 2, rng);
  const double p = pressure(kGolden, phi);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = unit(rng);
    const MarkovMeasure mu(kGolden, 1, {a, 1.0 - a, 1.0});
    const MarkovStats st = markov_stats(mu, phi);
    CHECK(st.entropy + st.integral <= p + 1e-12);
  }
}

TEST_CASE("cover estimates reproduce the brute-force oracle bit for bit", "[properties]") {
  std::mt19937 rng(5);
  for (int depth : {1, 2, 3}) {
    const Potential phi = random_potential(kThree, depth, rng);
    for (int n = 1; n <= 8; ++n) CHECK(pressure_cover_estimate(kThree, phi, n) == oracle::brute_pressure(kThree, phi, n));
  }
}

TEST_CASE("lifting a potential leaves every quantity unchanged", "[properties]") {
  std::mt19937 rng(9);
  const Potential phi = random_potential(kGolden, 2, rng);
  const Potential lifted = phi.lifted(4);
  CHECK_THAT(pressure(kGolden, lifted), near(pressure(kGolden, phi), 1e-12));
  const VectorPotential one{Potential::constant(2, 1.0)};
  const double alpha[] = {0.5 * (domain(kGolden, VectorPotential{phi}, one).lower.value() +
                                 domain(kGolden, VectorPotential{phi}, one).upper.value())};
  const double a = predicted(kGolden, VectorPotential{phi}, one, Potential::constant(2, 0.0), alpha).value.value();
  const double b = predicted(kGolden, VectorPotential{lifted}, one, Potential::constant(2, 0.0), alpha).value.value();
  CHECK_THAT(b, near(a, 1e-9));
}

TEST_CASE("the predicted spectrum is concave and bounded by the entropy", "[properties]") {
  std::mt19937 rng(13);
  const Potential phi = random_potential(kThree, 1, rng);
  const VectorPotential Phi{phi};
  const VectorPotential one{Potential::constant(3, 1.0)};
  const DomainDescription d = domain(kThree, Phi, one);
  const double lo = d.lower.value();
  const double hi = d.upper.value();
  const double top = pressure(kThree, Potential::constant(3, 0.0));
  std::vector<double> values;
  for (int i = 1; i < 20; ++i) {
    const double alpha[] = {lo + (hi - lo) * i / 20.0};
    const double v = predicted(kThree, Phi, one, Potential::constant(3, 0.0), alpha).value.value();
    CHECK(v <= top + 1e-10);
    CHECK(v >= -1e-10);
    values.push_back(v);
  }
  for (std::size_t i = 1; i + 1 < values.size(); ++i) CHECK(values[i] >= 0.5 * (values[i - 1] + values[i + 1]) - 1e-8);
}
