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

#include "core/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "core/error.hpp"
#include "core/extended_real.hpp"

namespace mfspec {

std::string ExtendedReal::to_string(int precision) const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value_);
  return buf;
}

std::uint64_t max_words() {
  constexpr std::uint64_t kDefault = std::uint64_t{1} << 24;
  const char* env = std::getenv("MFSPEC_MAX_WORDS");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

namespace {

std::uint64_t ipow(std::size_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      fail(ErrorCode::ResourceLimit, "word table size overflows");
    }
    r *= base;
  }
  return r;
}

// Word tables are dense in the code space.
constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 26;

std::uint64_t table_size(std::size_t m, int depth) {
  const std::uint64_t n = ipow(m, depth);
  if (n > kMaxTable) {
    fail(ErrorCode::ResourceLimit, "depth-" + std::to_string(depth) + " word table too large");
  }
  return n;
}

}  // namespace

Sft::Sft(std::size_t size, std::vector<char> allowed, int period)
    : size_(size), allowed_(std::move(allowed)), successors_(size), period_(period) {
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (allowed_[a * size_ + b]) successors_[a].push_back(static_cast<int>(b));
    }
  }
}

std::vector<std::vector<int>> Sft::matrix() const {
  std::vector<std::vector<int>> m(size_, std::vector<int>(size_, 0));
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) m[a][b] = allowed_[a * size_ + b] ? 1 : 0;
  }
  return m;
}

Sft validate_sft(const std::vector<std::vector<int>>& matrix) {
  const std::size_t m = matrix.size();
  if (m == 0) fail(ErrorCode::InvalidArgument, "transition matrix is empty");
  std::vector<char> allowed(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    if (matrix[a].size() != m) fail(ErrorCode::InvalidArgument, "transition matrix is not square");
    for (std::size_t b = 0; b < m; ++b) {
      const int v = matrix[a][b];
      if (v != 0 && v != 1) fail(ErrorCode::InvalidArgument, "transition entries must be 0 or 1");
      allowed[a * m + b] = static_cast<char>(v);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    bool row = false;
    bool col = false;
    for (std::size_t b = 0; b < m; ++b) {
      row = row || allowed[a * m + b];
      col = col || allowed[b * m + a];
    }
    if (!row) fail(ErrorCode::EmptyRow, "symbol " + std::to_string(a) + " has no successor");
    if (!col) fail(ErrorCode::EmptyRow, "symbol " + std::to_string(a) + " has no predecessor");
  }

  auto reach_all = [&](bool reverse) {
    std::vector<char> seen(m, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < m; ++b) {
        const bool edge = reverse ? allowed[b * m + a] : allowed[a * m + b];
        if (edge && !seen[b]) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  if (!reach_all(false) || !reach_all(true)) {
    fail(ErrorCode::NotIrreducible, "some pair of states is not mutually reachable");
  }

  // Period: gcd over edges u->v of level(u) + 1 - level(v) for BFS levels.
  std::vector<int> level(m, -1);
  std::deque<std::size_t> queue{0};
  level[0] = 0;
  int period = 0;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < m; ++b) {
      if (!allowed[a * m + b]) continue;
      if (level[b] < 0) {
        level[b] = level[a] + 1;
        queue.push_back(b);
      } else {
        period = std::gcd(period, std::abs(level[a] + 1 - level[b]));
      }
    }
  }
  return Sft(m, std::move(allowed), period == 0 ? 1 : period);
}

bool is_admissible(const Sft& sft, std::span<const int> word) {
  const int m = static_cast<int>(sft.alphabet_size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= m) return false;
    if (i + 1 < word.size() && !sft.allowed(word[i], word[i + 1])) return false;
  }
  return true;
}

std::uint64_t word_code(std::span<const int> word, std::size_t alphabet_size) {
  std::uint64_t code = 0;
  for (int s : word) code = code * alphabet_size + static_cast<std::uint64_t>(s);
  return code;
}

Word decode_word(std::uint64_t code, int length, std::size_t alphabet_size) {
  Word w(length);
  for (int i = length - 1; i >= 0; --i) {
    w[i] = static_cast<int>(code % alphabet_size);
    code /= alphabet_size;
  }
  return w;
}

std::uint64_t count_words(const Sft& sft, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "word length must be nonnegative");
  if (n == 0) return 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t m = sft.alphabet_size();
  std::vector<std::uint64_t> ending(m, 1);
  for (int len = 1; len < n; ++len) {
    std::vector<std::uint64_t> next(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      for (int b : sft.successors(static_cast<int>(a))) {
        next[b] = (next[b] > kMax - ending[a]) ? kMax : next[b] + ending[a];
      }
    }
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : ending) total = (total > kMax - c) ? kMax : total + c;
  return total;
}

std::vector<Word> enumerate_words(const Sft& sft, int n, std::uint64_t cap) {
  const std::uint64_t count = count_words(sft, n);
  if (count > cap) {
    fail(ErrorCode::ResourceLimit, std::to_string(count) + " words of length " + std::to_string(n) +
                                       " exceed the cap of " + std::to_string(cap));
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const int m = static_cast<int>(sft.alphabet_size());
  Word w(n, 0);
  // Odometer over admissible words, lexicographic.
  std::vector<std::size_t> choice(n, 0);
  int pos = 0;
  w[0] = 0;
  while (pos >= 0) {
    if (pos == 0) {
      if (choice[0] >= static_cast<std::size_t>(m)) break;
      w[0] = static_cast<int>(choice[0]);
    } else {
      const auto& succ = sft.successors(w[pos - 1]);
      if (choice[pos] >= succ.size()) {
        choice[pos] = 0;
        --pos;
        ++choice[pos];
        continue;
      }
      w[pos] = succ[choice[pos]];
    }
    if (pos == n - 1) {
      out.push_back(w);
      ++choice[pos];
    } else {
      ++pos;
      choice[pos] = 0;
    }
  }
  return out;
}

Potential::Potential(std::size_t alphabet_size, int depth, std::vector<double> values)
    : size_(alphabet_size), depth_(depth), values_(std::move(values)) {
  if (size_ == 0) fail(ErrorCode::InvalidArgument, "alphabet must be nonempty");
  if (depth_ < 1) fail(ErrorCode::InvalidArgument, "potential depth must be positive");
  if (values_.size() != table_size(size_, depth_)) {
    fail(ErrorCode::InvalidArgument, "potential table has the wrong size");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "potential values must be finite");
  }
}

Potential Potential::constant(std::size_t alphabet_size, double c) {
  return Potential(alphabet_size, 1, std::vector<double>(alphabet_size, c));
}

Potential Potential::indicator(std::size_t alphabet_size, int symbol) {
  std::vector<double> v(alphabet_size, 0.0);
  v.at(static_cast<std::size_t>(symbol)) = 1.0;
  return Potential(alphabet_size, 1, std::move(v));
}

Potential Potential::symbolwise(std::span<const double> values) {
  return Potential(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

Potential Potential::from_words(const Sft& sft, int depth, const std::map<Word, double>& values) {
  const std::size_t m = sft.alphabet_size();
  if (depth < 1) fail(ErrorCode::InvalidArgument, "potential depth must be positive");
  std::vector<double> table(table_size(m, depth), 0.0);
  for (const auto& [word, v] : values) {
    if (static_cast<int>(word.size()) != depth) {
      fail(ErrorCode::InvalidArgument, "potential word has length " + std::to_string(word.size()) +
                                           ", expected " + std::to_string(depth));
    }
    if (!is_admissible(sft, word)) fail(ErrorCode::InvalidArgument, "potential word is not admissible");
    table[word_code(word, m)] = v;
  }
  const auto words = enumerate_words(sft, depth);
  if (words.size() != values.size()) {
    fail(ErrorCode::InvalidArgument, "potential must give exactly one value per admissible " +
                                         std::to_string(depth) + "-word (" +
                                         std::to_string(words.size()) + " expected, " +
                                         std::to_string(values.size()) + " given)");
  }
  return Potential(m, depth, std::move(table));
}

double Potential::operator()(std::span<const int> word) const {
  if (static_cast<int>(word.size()) < depth_) {
    fail(ErrorCode::DepthMismatch, "word shorter than potential depth");
  }
  return values_[word_code(word.first(depth_), size_)];
}

Potential Potential::lifted(int depth) const {
  if (depth < depth_) fail(ErrorCode::DepthMismatch, "cannot lift a potential to a smaller depth");
  if (depth == depth_) return *this;
  const std::uint64_t extra = ipow(size_, depth - depth_);
  std::vector<double> table(table_size(size_, depth));
  for (std::uint64_t code = 0; code < table.size(); ++code) table[code] = values_[code / extra];
  return Potential(size_, depth, std::move(table));
}

Potential& Potential::operator+=(const Potential& other) {
  if (other.size_ != size_) fail(ErrorCode::InvalidArgument, "potentials on different alphabets");
  if (other.depth_ > depth_) *this = lifted(other.depth_);
  const Potential rhs = other.lifted(depth_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

Potential& Potential::operator+=(double c) {
  for (double& v : values_) v += c;
  return *this;
}

Potential& Potential::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

ValueRange potential_range(const Sft& sft, const Potential& phi) {
  if (phi.alphabet_size() != sft.alphabet_size()) {
    fail(ErrorCode::InvalidArgument, "potential alphabet does not match the shift");
  }
  ValueRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Word& w : enumerate_words(sft, phi.depth())) {
    const double v = phi(w);
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
  }
  return r;
}

double sup_norm(const Sft& sft, const Potential& phi) {
  const auto r = potential_range(sft, phi);
  return std::max(std::abs(r.min), std::abs(r.max));
}

VectorPotential::VectorPotential(std::vector<Potential> components) : components_(std::move(components)) {
  if (components_.empty()) fail(ErrorCode::InvalidArgument, "vector potential needs at least one component");
  int depth = 1;
  for (const auto& c : components_) {
    if (c.alphabet_size() != components_.front().alphabet_size()) {
      fail(ErrorCode::InvalidArgument, "vector potential components on different alphabets");
    }
    depth = std::max(depth, c.depth());
  }
  for (auto& c : components_) c = c.lifted(depth);
}

Potential VectorPotential::dot(std::span<const double> q) const {
  if (q.size() != dim()) fail(ErrorCode::InvalidArgument, "coefficient vector has the wrong dimension");
  Potential out = 0.0 * components_.front();
  for (std::size_t i = 0; i < dim(); ++i) out += q[i] * components_[i];
  return out;
}

VectorPotential VectorPotential::minus_scaled(std::span<const double> alpha, const VectorPotential& psi) const {
  if (alpha.size() != dim() || psi.dim() != dim()) {
    fail(ErrorCode::InvalidArgument, "dimension mismatch between Phi, Psi and alpha");
  }
  std::vector<Potential> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(components_[i] - alpha[i] * psi[i]);
  return VectorPotential(std::move(out));
}

VectorPotential VectorPotential::concat(const VectorPotential& other) const {
  std::vector<Potential> out = components_;
  out.insert(out.end(), other.components_.begin(), other.components_.end());
  return VectorPotential(std::move(out));
}

double birkhoff_sum(const Potential& phi, std::span<const int> word, int n) {
  const int k = phi.depth();
  if (n < 0 || static_cast<int>(word.size()) < n + k - 1) {
    fail(ErrorCode::DepthMismatch, "word too short for an order-" + std::to_string(n) + " Birkhoff sum");
  }
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += phi(word.subspan(j, k));
  return s;
}

std::vector<std::optional<double>> birkhoff_ratio(const VectorPotential& phi, const VectorPotential& psi,
                                                  std::span<const int> word) {
  if (phi.dim() != psi.dim()) fail(ErrorCode::InvalidArgument, "Phi and Psi differ in dimension");
  const int k = std::max(phi.depth(), psi.depth());
  const int n = static_cast<int>(word.size()) - k + 1;
  if (n < 1) fail(ErrorCode::DepthMismatch, "word shorter than the common potential depth");
  std::vector<std::optional<double>> out(phi.dim());
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    const double num = birkhoff_sum(phi[i].lifted(k), word, n);
    const double den = birkhoff_sum(psi[i].lifted(k), word, n);
    if (den != 0.0) out[i] = num / den;
  }
  return out;
}

BlockGraph::BlockGraph(const Sft& sft, int block_length)
    : size_(sft.alphabet_size()), block_length_(block_length) {
  if (block_length < 1) fail(ErrorCode::InvalidArgument, "block length must be positive");
  const std::uint64_t codes = table_size(size_, block_length);
  index_of_code_.assign(codes, -1);
  for (const Word& w : enumerate_words(sft, block_length)) {
    const auto code = word_code(w, size_);
    index_of_code_[code] = static_cast<int>(state_codes_.size());
    state_codes_.push_back(code);
  }
  out_.resize(state_codes_.size());
  in_.resize(state_codes_.size());
  const std::uint64_t top = codes / size_;
  for (std::size_t s = 0; s < state_codes_.size(); ++s) {
    const std::uint64_t code = state_codes_[s];
    const int last = static_cast<int>(code % size_);
    for (int a : sft.successors(last)) {
      const std::uint64_t next = (code % top) * size_ + static_cast<std::uint64_t>(a);
      const int t = index_of_code_[next];
      const int e = static_cast<int>(edges_.size());
      edges_.push_back(Edge{static_cast<int>(s), t, a, code * size_ + static_cast<std::uint64_t>(a)});
      out_[s].push_back(e);
      in_[t].push_back(e);
    }
  }
}

int BlockGraph::first_symbol(int state) const {
  std::uint64_t code = state_codes_[state];
  for (int i = 1; i < block_length_; ++i) code /= size_;
  return static_cast<int>(code);
}

int BlockGraph::state_index(std::uint64_t code) const {
  return code < index_of_code_.size() ? index_of_code_[code] : -1;
}

double BlockGraph::edge_value(const Potential& phi, int edge) const {
  const int k = phi.depth();
  if (k > block_length_ + 1) fail(ErrorCode::DepthMismatch, "potential deeper than the block graph edges");
  std::uint64_t code = edges_[edge].word;
  for (int i = k; i < block_length_ + 1; ++i) code /= size_;
  return phi.at_code(code);
}

namespace {

std::vector<double> solve_stationary(const BlockGraph& g, const std::vector<double>& kernel) {
  const auto n = static_cast<Eigen::Index>(g.state_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = -1.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    a(edge.to, edge.from) += kernel[e];
  }
  a.row(n).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b(n) = 1.0;
  Eigen::VectorXd pi = a.completeOrthogonalDecomposition().solve(b);
  std::vector<double> out(static_cast<std::size_t>(n));
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = std::max(0.0, pi(i));
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace

MarkovMeasure::MarkovMeasure(const Sft& sft, int order, std::vector<double> edge_probabilities)
    : sft_(sft), graph_(sft, order), kernel_(std::move(edge_probabilities)) {
  if (kernel_.size() != graph_.edge_count()) fail(ErrorCode::InvalidArgument, "kernel has the wrong size");
  stationary_ = solve_stationary(graph_, kernel_);
  validate();
}

MarkovMeasure::MarkovMeasure(const Sft& sft, int order, std::vector<double> edge_probabilities,
                             std::vector<double> stationary)
    : sft_(sft), graph_(sft, order), kernel_(std::move(edge_probabilities)), stationary_(std::move(stationary)) {
  if (kernel_.size() != graph_.edge_count() || stationary_.size() != graph_.state_count()) {
    fail(ErrorCode::InvalidArgument, "kernel or stationary vector has the wrong size");
  }
  validate();
}

MarkovMeasure MarkovMeasure::bernoulli(const Sft& sft, std::span<const double> p) {
  if (p.size() != sft.alphabet_size()) fail(ErrorCode::InvalidArgument, "probability vector has the wrong size");
  BlockGraph g(sft, 1);
  std::vector<double> kernel(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) kernel[e] = p[g.edges()[e].symbol];
  for (std::size_t s = 0; s < g.state_count(); ++s) {
    double row = 0.0;
    for (int e : g.out_edges(static_cast<int>(s))) row += kernel[e];
    if (std::abs(row - 1.0) > 1e-12) {
      fail(ErrorCode::InvalidArgument, "Bernoulli weights put mass on forbidden transitions");
    }
  }
  return MarkovMeasure(sft, 1, std::move(kernel), std::vector<double>(p.begin(), p.end()));
}

void MarkovMeasure::validate() const {
  for (std::size_t s = 0; s < graph_.state_count(); ++s) {
    double row = 0.0;
    for (int e : graph_.out_edges(static_cast<int>(s))) {
      if (!(kernel_[e] >= 0.0)) fail(ErrorCode::InvalidArgument, "kernel entries must be nonnegative");
      row += kernel_[e];
    }
    if (std::abs(row - 1.0) > 1e-12) fail(ErrorCode::InvalidArgument, "kernel rows must sum to 1");
  }
  double total = 0.0;
  for (double v : stationary_) {
    if (!(v >= 0.0)) fail(ErrorCode::InvalidArgument, "stationary vector must be nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) fail(ErrorCode::InvalidArgument, "stationary vector must sum to 1");
  std::vector<double> pushed(graph_.state_count(), 0.0);
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const auto& edge = graph_.edges()[e];
    pushed[edge.to] += stationary_[edge.from] * kernel_[e];
  }
  for (std::size_t s = 0; s < pushed.size(); ++s) {
    if (std::abs(pushed[s] - stationary_[s]) > 1e-10) {
      fail(ErrorCode::InvalidArgument, "stationary vector is not invariant under the kernel");
    }
  }
}

double MarkovMeasure::entropy() const {
  double h = 0.0;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    const double p = kernel_[e];
    if (p > 0.0) h -= stationary_[graph_.edges()[e].from] * p * std::log(p);
  }
  return h;
}

double MarkovMeasure::integral(const Potential& phi) const {
  if (phi.depth() > order() + 1) return lifted(phi.depth() - 1).integral(phi);
  double s = 0.0;
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    s += stationary_[graph_.edges()[e].from] * kernel_[e] * graph_.edge_value(phi, static_cast<int>(e));
  }
  return s;
}

std::vector<double> MarkovMeasure::edge_measure() const {
  std::vector<double> out(graph_.edge_count());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = stationary_[graph_.edges()[e].from] * kernel_[e];
  return out;
}

MarkovMeasure MarkovMeasure::lifted(int order) const {
  const int L = this->order();
  if (order < L) fail(ErrorCode::DepthMismatch, "cannot lower the order of a Markov measure");
  if (order == L) return *this;
  const std::size_t m = sft_.alphabet_size();
  BlockGraph big(sft_, order);
  // Probability of the last L symbols of each long state moving by symbol a.
  auto step = [&](std::uint64_t code_of_L_word, int a) {
    const int s = graph_.state_index(code_of_L_word);
    for (int e : graph_.out_edges(s)) {
      if (graph_.edges()[e].symbol == a) return kernel_[e];
    }
    return 0.0;
  };
  std::uint64_t low = 1;
  for (int i = 0; i < L; ++i) low *= m;
  std::vector<double> stationary(big.state_count());
  for (std::size_t s = 0; s < big.state_count(); ++s) {
    const Word w = decode_word(big.state_code(static_cast<int>(s)), order, m);
    double p = stationary_[graph_.state_index(word_code(std::span<const int>(w).first(L), m))];
    for (int j = 0; j + L < order && p > 0.0; ++j) {
      p *= step(word_code(std::span<const int>(w).subspan(j, L), m), w[j + L]);
    }
    stationary[s] = p;
  }
  std::vector<double> kernel(big.edge_count());
  for (std::size_t e = 0; e < big.edge_count(); ++e) {
    const auto& edge = big.edges()[e];
    kernel[e] = step(big.state_code(edge.from) % low, edge.symbol);
  }
  return MarkovMeasure(sft_, order, std::move(kernel), std::move(stationary));
}

MarkovStats markov_stats(const MarkovMeasure& mu, const Potential& phi) {
  return MarkovStats{mu.entropy(), mu.integral(phi)};
}

}  // namespace mfspec
