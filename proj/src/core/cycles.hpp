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

#include <cstdint>
#include <string>
#include <vector>

#include "core/symbolic.hpp"

namespace mfspec {

// Simple cycle of a block graph. `symbols` is the periodic word read along
// the edges, rotated to its lexicographically minimal form.
struct Cycle {
  std::vector<int> edges;
  Word symbols;

  std::size_t length() const { return edges.size(); }
};

// Every simple cycle, ordered by length and then by symbols. Throws
// ResourceLimit when more than `cap` cycles exist.
std::vector<Cycle> simple_cycles(const BlockGraph& graph, std::uint64_t cap = max_words());

double cycle_sum(const BlockGraph& graph, const Cycle& cycle, const Potential& phi);
double cycle_mean(const BlockGraph& graph, const Cycle& cycle, const Potential& phi);

// Symbols as digits when the alphabet has at most 10 letters, comma separated otherwise.
std::string format_word(const Word& word, std::size_t alphabet_size);

}  // namespace mfspec
