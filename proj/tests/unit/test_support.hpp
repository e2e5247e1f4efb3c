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
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "core/error.hpp"
#include "io/system_io.hpp"

#ifndef MFSPEC_SYSTEMS_DIR
#define MFSPEC_SYSTEMS_DIR "systems"
#endif

namespace mfspec::test {

// Error code raised by f, or empty when f returns normally.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline System bundled(const std::string& name) {
  return load_system(std::string(MFSPEC_SYSTEMS_DIR) + "/" + name + ".json");
}

inline Catch::Matchers::WithinAbsMatcher near(double target, double tol) {
  return Catch::Matchers::WithinAbs(target, tol);
}

}  // namespace mfspec::test
