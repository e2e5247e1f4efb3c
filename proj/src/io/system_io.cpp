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

#include "io/system_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "core/error.hpp"

namespace mfspec {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return obj.at(key);
}

bool single_chars(const std::vector<std::string>& alphabet) {
  for (const auto& s : alphabet) {
    if (s.size() != 1) return false;
  }
  return true;
}

}  // namespace

const Potential& System::potential(const std::string& key) const {
  const auto it = potentials.find(key);
  if (it == potentials.end()) fail(ErrorCode::InvalidArgument, "no potential named '" + key + "'");
  return it->second;
}

VectorPotential System::vector(const std::vector<std::string>& keys) const {
  if (keys.empty()) fail(ErrorCode::InvalidArgument, "empty potential list");
  std::vector<Potential> parts;
  for (const auto& k : keys) parts.push_back(potential(k));
  return VectorPotential(std::move(parts));
}

Word System::parse_word(const std::string& text) const {
  std::vector<std::string> tokens;
  if (single_chars(alphabet)) {
    for (char c : text) tokens.emplace_back(1, c);
  } else {
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ',');) tokens.push_back(t);
  }
  Word w;
  for (const auto& t : tokens) {
    std::size_t i = 0;
    while (i < alphabet.size() && alphabet[i] != t) ++i;
    if (i == alphabet.size()) fail(ErrorCode::ParseError, "unknown symbol '" + t + "' in word '" + text + "'");
    w.push_back(static_cast<int>(i));
  }
  return w;
}

std::string System::format_word(const Word& word) const {
  std::string s;
  const bool plain = single_chars(alphabet);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!plain && i > 0) s += ',';
    s += alphabet.at(static_cast<std::size_t>(word[i]));
  }
  return s;
}

System parse_system(const std::string& json_text, std::string name) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  try {
    std::vector<std::string> alphabet;
    for (const json& s : field(doc, "alphabet")) {
      alphabet.push_back(s.is_string() ? s.get<std::string>() : s.dump());
    }
    if (alphabet.empty()) fail(ErrorCode::ParseError, "empty alphabet");
    const auto matrix = field(doc, "transitions").get<std::vector<std::vector<int>>>();
    if (matrix.size() != alphabet.size()) fail(ErrorCode::ParseError, "transition matrix size differs from alphabet");
    for (const auto& row : matrix) {
      if (row.size() != alphabet.size()) fail(ErrorCode::ParseError, "transition matrix is not square");
    }

    System sys{doc.value("name", std::move(name)), std::move(alphabet), validate_sft(matrix), {}, {}};
    const std::size_t m = sys.alphabet.size();
    sys.potentials.emplace("zero", Potential::constant(m, 0.0));
    sys.potentials.emplace("one", Potential::constant(m, 1.0));

    if (doc.contains("potentials")) {
      for (const auto& [key, spec] : doc.at("potentials").items()) {
        const int depth = field(spec, "depth").get<int>();
        std::map<Word, double> values;
        for (const auto& [word, v] : field(spec, "values").items()) {
          if (!v.is_number()) fail(ErrorCode::ParseError, "value of word '" + word + "' is not a number");
          values[sys.parse_word(word)] = v.get<double>();
        }
        sys.potentials.insert_or_assign(key, Potential::from_words(sys.sft, depth, values));
      }
    }

    if (doc.contains("slopes")) {
      PiecewiseLinearMap map{doc.at("slopes").get<std::vector<double>>(), matrix};
      const CodedMap coded = code_as_sft(map);
      sys.potentials.insert_or_assign("log_derivative", coded.log_derivative);
      sys.map = std::move(map);
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

System load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read system file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  if (const auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
  return parse_system(buf.str(), stem);
}

}  // namespace mfspec
