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

#include <cmath>
#include <compare>
#include <string>

namespace mfspec {

// A real number or one of the two infinities. The infinities are tagged
// variants, never IEEE infinities, so suprema over grids cannot pick up NaNs.
class ExtendedReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : kind_(Kind::Finite), value_(v) {}

  static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf); }
  static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Finite value; the infinities map to +-HUGE_VAL for callers that need a double.
  double value() const {
    switch (kind_) {
      case Kind::Finite: return value_;
      case Kind::PosInf: return HUGE_VAL;
      case Kind::NegInf: return -HUGE_VAL;
    }
    return value_;
  }

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (a.kind_ != Kind::Finite) return std::partial_ordering::equivalent;
    return a.value_ <=> b.value_;
  }

  static ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }

  std::string to_string(int precision = 12) const;

 private:
  constexpr explicit ExtendedReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

}  // namespace mfspec
