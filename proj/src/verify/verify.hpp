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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/oracle.hpp"
#include "io/system_io.hpp"

namespace mfspec::verify {

// The bundled systems the acceptance criteria run on.
struct Bundle {
  System full2;
  System golden;
  System slopes23;
  System slopes12;
  System doubling;
};

// Throws ParseError when a bundle file is missing.
Bundle load_bundle(const std::string& dir);

// Named tolerances. Defaults:
//   entropy 1e-8, duality 1e-5, dominance 1e-6, final_gap 0.06, gradient 1e-6,
//   bowen 1e-10, bowen_uniform 1e-12, lyapunov 1e-8, concavity 1e-8,
//   refine 1e-3, pointwise 1e-6, endpoints 1e-9, shift 1e-9, oracle 0.
class Tolerances {
 public:
  Tolerances();
  double operator[](const std::string& name) const;
  // "name=value" sets one tolerance; a bare value sets all of them.
  void apply(const std::string& override_spec);
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<oracle::Report> checks;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const Bundle& bundle, const Tolerances& tol);
std::vector<CriterionResult> run_all(const Bundle& bundle, const Tolerances& tol);

// One line per criterion, then the failing checks.
std::string format_summary(const std::vector<CriterionResult>& results);
// Every check of every criterion as an aligned table.
std::string format_table(const std::vector<CriterionResult>& results);
std::string to_json(const std::vector<CriterionResult>& results);

}  // namespace mfspec::verify
