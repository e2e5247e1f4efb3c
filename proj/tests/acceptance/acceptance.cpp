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

// Acceptance runner: one pass/fail line per criterion.
//
//   acceptance        run every criterion
//   acceptance <id>   run one criterion
//
// Exit status is 0 only when every criterion run passes.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "core/error.hpp"
#include "verify/verify.hpp"

namespace {

// Pinned tolerances, applied explicitly so a change of library defaults
// cannot loosen the gate.
constexpr const char* kPinned[] = {
    "entropy=1e-8",   "duality=1e-5",       "dominance=1e-6", "final_gap=0.06", "gradient=1e-6",
    "bowen=1e-10",    "bowen_uniform=1e-12", "lyapunov=1e-8",  "concavity=1e-8", "refine=1e-3",
    "pointwise=1e-6", "endpoints=1e-9",     "shift=1e-9",     "oracle=0",
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > mfspec::verify::kCriterionCount) {
      std::fprintf(stderr, "criterion id must be in 1..%d\n", mfspec::verify::kCriterionCount);
      return 2;
    }
  }
  try {
    mfspec::verify::Tolerances tol;
    for (const char* spec : kPinned) tol.apply(spec);
    const mfspec::verify::Bundle bundle = mfspec::verify::load_bundle(MFSPEC_SYSTEMS_DIR);

    bool all = true;
    for (int id = 1; id <= mfspec::verify::kCriterionCount; ++id) {
      if (only != 0 && id != only) continue;
      const mfspec::verify::CriterionResult r = mfspec::verify::run_criterion(id, bundle, tol);
      std::printf("[%s] criterion %d: %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", id, r.title.c_str(), r.seconds);
      if (!r.passed) {
        all = false;
        for (const auto& c : r.checks)
          if (!c.passed)
            std::printf("    %s: oracle %.17g, main %.17g, error %.3g > %.3g\n", c.quantity.c_str(),
                        c.oracle_value, c.main_value, c.abs_error, c.tolerance);
      }
    }
    return all ? 0 : 1;
  } catch (const mfspec::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
