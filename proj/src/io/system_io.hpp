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

#include "core/dimension.hpp"
#include "core/symbolic.hpp"

namespace mfspec {

// A shift with named potentials, and optionally the interval map it codes.
//
// JSON layout:
//   {"alphabet": ["0", "1"],
//    "transitions": [[1, 1], [1, 0]],
//    "potentials": {"name": {"depth": k, "values": {"01": 0.5, ...}}},
//    "slopes": [2, 3]}                       (optional)
//
// Words are symbol strings: concatenated when every symbol is one character,
// comma-separated otherwise. "zero" and "one" are always defined; with slopes,
// "log_derivative" holds log |Df| on each branch.
struct System {
  std::string name;
  std::vector<std::string> alphabet;
  Sft sft;
  std::map<std::string, Potential> potentials;
  std::optional<PiecewiseLinearMap> map;

  const Potential& potential(const std::string& key) const;
  VectorPotential vector(const std::vector<std::string>& keys) const;
  Word parse_word(const std::string& text) const;
  std::string format_word(const Word& word) const;
};

// ParseError for malformed documents; validation errors of the shift and the
// map propagate with their own codes.
System parse_system(const std::string& json_text, std::string name = {});
System load_system(const std::string& path);

}  // namespace mfspec
