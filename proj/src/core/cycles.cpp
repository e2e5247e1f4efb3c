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

#include "core/cycles.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace mfspec {

namespace {

Word minimal_rotation(const Word& w) {
  Word best = w;
  Word r = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

std::vector<Cycle> simple_cycles(const BlockGraph& graph, std::uint64_t cap) {
  // Each cycle is found once, from its smallest state, by a depth-first
  // search over states not smaller than the start.
  const int n = static_cast<int>(graph.state_count());
  std::vector<Cycle> out;
  std::vector<char> on_path(n, 0);
  std::vector<int> path_edges;
  std::uint64_t steps = 0;
  const std::uint64_t step_cap = cap * 64;

  struct Frame {
    int state;
    std::size_t next;
  };
  for (int start = 0; start < n; ++start) {
    std::vector<Frame> stack{{start, 0}};
    on_path[start] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& outs = graph.out_edges(f.state);
      if (f.next == outs.size()) {
        on_path[f.state] = 0;
        stack.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        continue;
      }
      const int e = outs[f.next++];
      const int t = graph.edges()[e].to;
      if (++steps > step_cap) fail(ErrorCode::ResourceLimit, "cycle enumeration exceeds the work cap");
      if (t == start) {
        Cycle c;
        c.edges = path_edges;
        c.edges.push_back(e);
        for (int ce : c.edges) c.symbols.push_back(graph.edges()[ce].symbol);
        c.symbols = minimal_rotation(c.symbols);
        out.push_back(std::move(c));
        if (out.size() > cap) fail(ErrorCode::ResourceLimit, "more simple cycles than the cap allows");
      } else if (t > start && !on_path[t]) {
        on_path[t] = 1;
        path_edges.push_back(e);
        stack.push_back(Frame{t, 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.symbols < b.symbols;
  });
  return out;
}

double cycle_sum(const BlockGraph& graph, const Cycle& cycle, const Potential& phi) {
  double s = 0.0;
  for (int e : cycle.edges) s += graph.edge_value(phi, e);
  return s;
}

double cycle_mean(const BlockGraph& graph, const Cycle& cycle, const Potential& phi) {
  return cycle_sum(graph, cycle, phi) / static_cast<double>(cycle.length());
}

std::string format_word(const Word& word, std::size_t alphabet_size) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (alphabet_size > 10 && i > 0) s += ',';
    s += std::to_string(word[i]);
  }
  return s;
}

}  // namespace mfspec
