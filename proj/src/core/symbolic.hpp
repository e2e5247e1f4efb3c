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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace mfspec {

using Word = std::vector<int>;

// Upper bound on the number of words any enumeration may produce.
// Reads MFSPEC_MAX_WORDS, default 2^24.
std::uint64_t max_words();

// Subshift of finite type over the alphabet {0, ..., m-1}.
class Sft {
 public:
  std::size_t alphabet_size() const { return size_; }
  bool allowed(int from, int to) const { return allowed_[from * size_ + to] != 0; }
  const std::vector<int>& successors(int symbol) const { return successors_[symbol]; }
  // Gcd of the cycle lengths of the transition graph.
  int period() const { return period_; }
  std::vector<std::vector<int>> matrix() const;

  friend bool operator==(const Sft& a, const Sft& b) {
    return a.size_ == b.size_ && a.allowed_ == b.allowed_;
  }

 private:
  friend Sft validate_sft(const std::vector<std::vector<int>>& matrix);
  Sft(std::size_t size, std::vector<char> allowed, int period);

  std::size_t size_ = 0;
  std::vector<char> allowed_;
  std::vector<std::vector<int>> successors_;
  int period_ = 1;
};

// Throws EmptyRow when a symbol has no successor (or no predecessor) and
// NotIrreducible when some pair of states is not mutually reachable.
Sft validate_sft(const std::vector<std::vector<int>>& matrix);

bool is_admissible(const Sft& sft, std::span<const int> word);

std::uint64_t word_code(std::span<const int> word, std::size_t alphabet_size);
Word decode_word(std::uint64_t code, int length, std::size_t alphabet_size);

// Number of admissible words of length n (saturates at UINT64_MAX).
std::uint64_t count_words(const Sft& sft, int n);

// All admissible words of length n in lexicographic order. Throws
// ResourceLimit when the count exceeds `cap`.
std::vector<Word> enumerate_words(const Sft& sft, int n, std::uint64_t cap = max_words());

// Depth-k locally constant function: one value per word of length k, stored
// densely by word code. Entries for inadmissible words are never read.
class Potential {
 public:
  Potential(std::size_t alphabet_size, int depth, std::vector<double> values);

  static Potential constant(std::size_t alphabet_size, double c);
  static Potential indicator(std::size_t alphabet_size, int symbol);
  // Per-symbol values, depth 1.
  static Potential symbolwise(std::span<const double> values);
  // Exactly one finite value for each admissible k-word, nothing else.
  static Potential from_words(const Sft& sft, int depth, const std::map<Word, double>& values);

  int depth() const { return depth_; }
  std::size_t alphabet_size() const { return size_; }
  const std::vector<double>& values() const { return values_; }

  double at_code(std::uint64_t code) const { return values_[code]; }
  // Value on the cylinder of `word`; uses the first depth() symbols.
  double operator()(std::span<const int> word) const;

  Potential lifted(int depth) const;

  Potential& operator+=(const Potential& other);
  Potential& operator+=(double c);
  Potential& operator*=(double c);

  friend Potential operator+(Potential a, const Potential& b) { return a += b; }
  friend Potential operator-(Potential a, const Potential& b) { return a += (-1.0 * b); }
  friend Potential operator+(Potential a, double c) { return a += c; }
  friend Potential operator-(Potential a, double c) { return a += -c; }
  friend Potential operator*(double c, Potential a) { return a *= c; }
  friend Potential operator-(Potential a) { return a *= -1.0; }

 private:
  std::size_t size_ = 0;
  int depth_ = 1;
  std::vector<double> values_;
};

struct ValueRange {
  double min = 0.0;
  double max = 0.0;
};

// Extremes over admissible words of length depth().
ValueRange potential_range(const Sft& sft, const Potential& phi);
double sup_norm(const Sft& sft, const Potential& phi);

// Components lifted to a common depth.
class VectorPotential {
 public:
  explicit VectorPotential(std::vector<Potential> components);
  VectorPotential(std::initializer_list<Potential> components)
      : VectorPotential(std::vector<Potential>(components)) {}

  std::size_t dim() const { return components_.size(); }
  int depth() const { return components_.front().depth(); }
  std::size_t alphabet_size() const { return components_.front().alphabet_size(); }
  const Potential& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Potential>& components() const { return components_; }

  // sum_i q_i * component_i
  Potential dot(std::span<const double> q) const;
  // Componentwise phi_i - alpha_i * psi_i.
  VectorPotential minus_scaled(std::span<const double> alpha, const VectorPotential& psi) const;
  VectorPotential concat(const VectorPotential& other) const;

 private:
  std::vector<Potential> components_;
};

// S_n phi on the cylinder of w; needs |w| >= n + depth - 1.
double birkhoff_sum(const Potential& phi, std::span<const int> word, int n);

// Componentwise S_n phi_i / S_n psi_i with n = |w| - k + 1 for the common
// depth k; a component is empty when its denominator vanishes.
std::vector<std::optional<double>> birkhoff_ratio(const VectorPotential& phi,
                                                  const VectorPotential& psi,
                                                  std::span<const int> word);

// Graph whose states are admissible words of length L and whose edges are
// admissible words of length L + 1 (state w -> state w[1..] a).
class BlockGraph {
 public:
  struct Edge {
    int from;
    int to;
    int symbol;
    std::uint64_t word;  // code of the (L+1)-word
  };

  BlockGraph(const Sft& sft, int block_length);

  int block_length() const { return block_length_; }
  std::size_t alphabet_size() const { return size_; }
  std::size_t state_count() const { return state_codes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int state) const { return out_[state]; }
  const std::vector<int>& in_edges(int state) const { return in_[state]; }
  std::uint64_t state_code(int state) const { return state_codes_[state]; }
  int first_symbol(int state) const;
  // -1 for inadmissible codes.
  int state_index(std::uint64_t code) const;

  // Potential value on the edge word; requires depth <= L + 1.
  double edge_value(const Potential& phi, int edge) const;

 private:
  std::size_t size_;
  int block_length_;
  std::vector<std::uint64_t> state_codes_;
  std::vector<int> index_of_code_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Block length that carries a depth-k potential on edges.
inline int block_length_for_depth(int depth) { return depth > 1 ? depth - 1 : 1; }

// Shift-invariant Markov measure of order L given by transition
// probabilities on the edges of BlockGraph(sft, L).
class MarkovMeasure {
 public:
  // Stationary vector is solved for.
  MarkovMeasure(const Sft& sft, int order, std::vector<double> edge_probabilities);
  MarkovMeasure(const Sft& sft, int order, std::vector<double> edge_probabilities,
                std::vector<double> stationary);

  // Product measure with symbol probabilities p; the Sft must allow every
  // transition that carries positive mass.
  static MarkovMeasure bernoulli(const Sft& sft, std::span<const double> p);

  int order() const { return graph_.block_length(); }
  const Sft& sft() const { return sft_; }
  const BlockGraph& graph() const { return graph_; }
  const std::vector<double>& kernel() const { return kernel_; }
  const std::vector<double>& stationary() const { return stationary_; }

  double entropy() const;
  double integral(const Potential& phi) const;
  // Probability of each edge word: stationary(from) * kernel(edge).
  std::vector<double> edge_measure() const;

  MarkovMeasure lifted(int order) const;

 private:
  void validate() const;

  Sft sft_;
  BlockGraph graph_;
  std::vector<double> kernel_;
  std::vector<double> stationary_;
};

struct MarkovStats {
  double entropy = 0.0;
  double integral = 0.0;
};

MarkovStats markov_stats(const MarkovMeasure& mu, const Potential& phi);

}  // namespace mfspec
