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

#include <vector>

#include <Eigen/Dense>

namespace mfspec {

// Position of the origin relative to the convex hull of a finite point set.
// All quantities refer to the affine hull of the points: `inradius` is the
// distance from 0 to the relative boundary, measured inside the span.
struct OriginLocation {
  bool inside = false;
  int rank = 0;
  double inradius = 0.0;   // +inf when the hull is the single point 0
  double distance = 0.0;   // distance from 0 to the hull (0 when inside)
  Eigen::MatrixXd basis;   // d x rank, orthonormal, spans the hull directions
};

// `tol` is relative to the largest point norm.
OriginLocation locate_origin(const std::vector<Eigen::VectorXd>& points, double tol = 1e-12);

// Distance from a scalar to the interval [lo, hi], signed negative inside.
double signed_interval_distance(double x, double lo, double hi);

// Unit directions on the circle (d = 2) or a Fibonacci-type sphere (d >= 3).
std::vector<Eigen::VectorXd> direction_grid(int dim, int count);

}  // namespace mfspec
