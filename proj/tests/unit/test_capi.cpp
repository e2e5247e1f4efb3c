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
#include <cstring>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "mfspec/mfspec.h"

using Catch::Matchers::WithinAbs;

namespace {

const std::string kDir = MFSPEC_SYSTEMS_DIR;

struct Loaded {
  mfspec_system* s = nullptr;
  explicit Loaded(const std::string& name) {
    REQUIRE(mfspec_system_load((kDir + "/" + name + ".json").c_str(), &s) == MFSPEC_OK);
  }
  ~Loaded() { mfspec_system_free(s); }
};

const char* const kInd1[] = {"ind1"};
const char* const kOne[] = {"one"};

}  // namespace

TEST_CASE("version and status names", "[capi]") {
  CHECK(std::strlen(mfspec_version()) > 0);
  CHECK(std::string(mfspec_status_name(MFSPEC_OK)) == "Ok");
  CHECK(std::string(mfspec_status_name(MFSPEC_CONDITION_Q_VIOLATED)) == "ConditionQViolated");
}

TEST_CASE("system handles", "[capi]") {
  Loaded full("full2");
  CHECK(mfspec_system_alphabet_size(full.s) == 2);
  CHECK(mfspec_system_has_map(full.s) == 0);
  char* names = nullptr;
  REQUIRE(mfspec_system_potentials(full.s, &names) == MFSPEC_OK);
  CHECK(std::string(names).find("ind11") != std::string::npos);
  mfspec_string_free(names);

  Loaded slopes("slopes23");
  CHECK(mfspec_system_has_map(slopes.s) == 1);
}

TEST_CASE("load and parse failures", "[capi]") {
  mfspec_system* s = nullptr;
  CHECK(mfspec_system_parse("{oops", &s) == MFSPEC_PARSE_ERROR);
  CHECK(s == nullptr);
  CHECK(std::string(mfspec_last_error()).find("ParseError") == 0);
  CHECK(mfspec_system_parse(R"({"alphabet":["0","1"],"transitions":[[1,0],[0,1]]})", &s) == MFSPEC_NOT_IRREDUCIBLE);
  CHECK(mfspec_system_load("/nonexistent.json", &s) == MFSPEC_PARSE_ERROR);
  CHECK(mfspec_system_load(nullptr, &s) == MFSPEC_INVALID_ARGUMENT);
}

TEST_CASE("pressure through the C API", "[capi]") {
  Loaded full("full2");
  double p = 0.0;
  REQUIRE(mfspec_pressure(full.s, "zero", &p) == MFSPEC_OK);
  CHECK_THAT(p, WithinAbs(std::log(2.0), 1e-13));
  REQUIRE(mfspec_cover_pressure(full.s, "ind1", 1, &p) == MFSPEC_OK);
  CHECK_THAT(p, WithinAbs(std::log(1.0 + std::exp(1.0)), 1e-15));
  CHECK(mfspec_pressure(full.s, "nope", &p) == MFSPEC_INVALID_ARGUMENT);

  const mfspec_level level{kInd1, kOne, 1, nullptr};
  const double q[] = {0.0};
  double grad[1] = {0.0};
  REQUIRE(mfspec_pressure_gradient(full.s, &level, q, grad) == MFSPEC_OK);
  CHECK_THAT(grad[0], WithinAbs(0.5, 1e-12));
}

TEST_CASE("spectra through the C API", "[capi]") {
  Loaded full("full2");
  const mfspec_level level{kInd1, kOne, 1, nullptr};
  const double quarter[] = {0.25};
  mfspec_point pt{};
  double argmin[1] = {0.0};
  REQUIRE(mfspec_predicted(full.s, &level, quarter, &pt, argmin) == MFSPEC_OK);
  CHECK_THAT(pt.value, WithinAbs(0.562335144618808350, 1e-10));
  CHECK(pt.status == MFSPEC_INTERIOR);
  CHECK(pt.has_argmin == 1);
  CHECK_THAT(argmin[0], WithinAbs(-std::log(3.0), 1e-5));

  const double outside[] = {1.5};
  REQUIRE(mfspec_predicted(full.s, &level, outside, &pt, nullptr) == MFSPEC_OK);
  CHECK(pt.value == -HUGE_VAL);
  CHECK(pt.status == MFSPEC_OUTSIDE);

  REQUIRE(mfspec_conditional(full.s, &level, quarter, 1, &pt) == MFSPEC_OK);
  CHECK_THAT(pt.value, WithinAbs(0.562335144618808350, 1e-8));

  const double half[] = {0.5};
  double c = 0.0;
  REQUIRE(mfspec_coarse(full.s, &level, half, 0.1, 10, &c) == MFSPEC_OK);
  CHECK(c == std::log(252.0) / 10.0);

  char* json = nullptr;
  REQUIRE(mfspec_domain(full.s, &level, &json) == MFSPEC_OK);
  CHECK(std::string(json).find("\"upper\"") != std::string::npos);
  mfspec_string_free(json);

  const char* const ind0[] = {"ind0"};
  const mfspec_level bad{ind0, ind0, 1, nullptr};
  CHECK(mfspec_predicted(full.s, &bad, quarter, &pt, nullptr) == MFSPEC_CONDITION_Q_VIOLATED);
  CHECK(std::string(mfspec_last_error()).find("ConditionQViolated") == 0);
}

TEST_CASE("dimension spectra through the C API", "[capi]") {
  Loaded doubling("doubling");
  const mfspec_level level{kInd1, kOne, 1, nullptr};
  const double half[] = {0.5};
  mfspec_point pt{};
  REQUIRE(mfspec_dimension(doubling.s, MFSPEC_DIM_BIRKHOFF, &level, half, 1, &pt, nullptr) == MFSPEC_OK);
  CHECK_THAT(pt.value, WithinAbs(1.0, 1e-10));
  const double log2[] = {std::log(2.0)};
  REQUIRE(mfspec_dimension(doubling.s, MFSPEC_DIM_LYAPUNOV, &level, log2, 1, &pt, nullptr) == MFSPEC_OK);
  CHECK_THAT(pt.value, WithinAbs(1.0, 1e-10));

  Loaded full("full2");
  CHECK(mfspec_dimension(full.s, MFSPEC_DIM_LYAPUNOV, &level, half, 1, &pt, nullptr) == MFSPEC_INVALID_ARGUMENT);

  Loaded parabolic("slopes12");
  const double zero[] = {0.0};
  CHECK(mfspec_dimension(parabolic.s, MFSPEC_DIM_BIRKHOFF, &level, zero, 1, &pt, nullptr) ==
        MFSPEC_EXCLUDED_ALPHA);
}

TEST_CASE("bowen root through the C API", "[capi]") {
  Loaded slopes("slopes23");
  double t = 0.0;
  REQUIRE(mfspec_bowen_root(slopes.s, "zero", "log_derivative", &t) == MFSPEC_OK);
  CHECK_THAT(t, WithinAbs(0.787884911025869784, 1e-10));
  Loaded parabolic("slopes12");
  REQUIRE(mfspec_bowen_root(parabolic.s, "zero", "log_derivative", &t) == MFSPEC_OK);
  CHECK(t == HUGE_VAL);
}

TEST_CASE("verify through the C API", "[capi]") {
  int passed = 0;
  char* summary = nullptr;
  REQUIRE(mfspec_verify(kDir.c_str(), nullptr, 0, 1, &passed, &summary, nullptr, nullptr) == MFSPEC_OK);
  CHECK(passed == 1);
  CHECK(std::string(summary).find("] criterion  1:") != std::string::npos);
  mfspec_string_free(summary);

  const char* const strict[] = {"entropy=1e-300"};
  REQUIRE(mfspec_verify(kDir.c_str(), strict, 1, 1, &passed, nullptr, nullptr, nullptr) == MFSPEC_OK);
  CHECK(passed == 0);

  const char* const junk[] = {"bogus=1"};
  CHECK(mfspec_verify(kDir.c_str(), junk, 1, 1, &passed, nullptr, nullptr, nullptr) == MFSPEC_INVALID_ARGUMENT);
  CHECK(mfspec_verify("/nonexistent", nullptr, 0, 1, &passed, nullptr, nullptr, nullptr) == MFSPEC_PARSE_ERROR);
}
