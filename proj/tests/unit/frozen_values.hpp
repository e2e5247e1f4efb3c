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

// Reference values computed once with 30-digit arithmetic, independent of
// this library.
namespace mfspec::frozen {

inline constexpr double kEntropyQuarter = 0.562335144618808350;     // H(1/4)
inline constexpr double kLog2 = 0.693147180559945309;
inline constexpr double kParryGolden = 0.481211825059603447;        // log golden ratio
inline constexpr double kLogOnePlusE = 1.313261687518222834;        // log(1 + e)
inline constexpr double kLogisticOne = 0.731058578630004879;        // e / (1 + e)
inline constexpr double kGoldenCover10 = 0.496981329957600062;      // log(144) / 10
inline constexpr double kBinomialRate10 = 0.552942908751142331;     // log(252) / 10
inline constexpr double kMoranRoot23 = 0.787884911025869784;        // 2^-t + 3^-t = 1
inline constexpr double kLyapunovAlpha = 0.895879734614027500;      // (log 2 + log 3) / 2
inline constexpr double kLyapunovValue = 0.773705614469083174;      // log 2 / kLyapunovAlpha
inline constexpr double kDoublingQuarter = 0.811278124459132864;    // H(1/4) / log 2
inline constexpr double kPointwiseAlphaStar = 1.207518749639421909;  // (ln 4 + ln 4/3) / (2 ln 2)
inline constexpr double kLocalEntropyAlpha2 = 0.836988216785835773;  // (ln 4 + ln 4/3) / 2
inline constexpr double kPointwiseLower = 0.415037499278843819;     // -log2(3/4)
inline constexpr double kInverseLog2 = 1.442695040888963407;        // 1 / log 2

}  // namespace mfspec::frozen
