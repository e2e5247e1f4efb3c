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

#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mfspec {

namespace {

// Orthonormal basis of the column span of `a`, rank decided relative to `scale`.
Eigen::MatrixXd span_basis(const Eigen::MatrixXd& a, double scale, double tol) {
  if (a.cols() == 0 || scale == 0.0) return Eigen::MatrixXd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > tol * scale * std::sqrt(static_cast<double>(a.cols()))) ++r;
  return svd.matrixU().leftCols(r);
}

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Counter-clockwise hull by the monotone chain.
std::vector<Eigen::Vector2d> hull2d(std::vector<Eigen::Vector2d> p) {
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (p.size() < 3) return p;
  std::vector<Eigen::Vector2d> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

double segment_distance(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp(-a.dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (a + t * ab).norm();
}

}  // namespace

double signed_interval_distance(double x, double lo, double hi) {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return -std::min(x - lo, hi - x);
}

std::vector<Eigen::VectorXd> direction_grid(int dim, int count) {
  std::vector<Eigen::VectorXd> out;
  if (dim == 1) {
    out.push_back(Eigen::VectorXd::Constant(1, 1.0));
    out.push_back(Eigen::VectorXd::Constant(1, -1.0));
    return out;
  }
  if (dim == 2) {
    for (int j = 0; j < count; ++j) {
      const double t = 2.0 * std::numbers::pi * j / count;
      Eigen::VectorXd v(2);
      v << std::cos(t), std::sin(t);
      out.push_back(v);
    }
    return out;
  }
  if (dim == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int j = 0; j < count; ++j) {
      const double z = 1.0 - 2.0 * (j + 0.5) / count;
      const double r = std::sqrt(1.0 - z * z);
      Eigen::VectorXd v(3);
      v << r * std::cos(golden * j), r * std::sin(golden * j), z;
      out.push_back(v);
    }
    return out;
  }
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(i) = 1.0;
    out.push_back(e);
    out.push_back(-e);
  }
  for (int j = 1; static_cast<int>(out.size()) < count; ++j) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) {
      const int base = kPrimes[i % 16];
      double f = 1.0, x = 0.0;
      for (int n = j; n > 0; n /= base) {
        f /= base;
        x += f * (n % base);
      }
      v(i) = 2.0 * x - 1.0;
    }
    if (v.norm() > 0.1) out.push_back(v.normalized());
  }
  return out;
}

OriginLocation locate_origin(const std::vector<Eigen::VectorXd>& points, double tol) {
  OriginLocation loc;
  if (points.empty()) {
    loc.distance = HUGE_VAL;
    return loc;
  }
  const Eigen::Index d = points.front().size();
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, p.norm());
  const double eps = tol * std::max(scale, 1.0);

  Eigen::MatrixXd diffs(d, static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
  const Eigen::MatrixXd q = span_basis(diffs, scale, tol);
  const Eigen::VectorXd off = points[0] - q * (q.transpose() * points[0]);
  const double aff_distance = off.norm();
  loc.basis = q;
  loc.rank = static_cast<int>(q.cols());
  if (aff_distance > eps) {
    loc.distance = aff_distance;
    return loc;
  }

  std::vector<Eigen::VectorXd> y;
  y.reserve(points.size());
  for (const auto& p : points) y.push_back(q.transpose() * p);

  if (loc.rank == 0) {
    loc.inside = true;
    loc.inradius = HUGE_VAL;
    return loc;
  }
  if (loc.rank == 1) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (const auto& v : y) {
      lo = std::min(lo, v(0));
      hi = std::max(hi, v(0));
    }
    const double s = signed_interval_distance(0.0, lo, hi);
    loc.inside = s <= eps;
    loc.distance = std::max(0.0, s);
    loc.inradius = std::max(0.0, -s);
    return loc;
  }
  if (loc.rank == 2) {
    std::vector<Eigen::Vector2d> p2;
    for (const auto& v : y) p2.emplace_back(v(0), v(1));
    const auto h = hull2d(p2);
    double margin = HUGE_VAL;
    double dist = HUGE_VAL;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[i];
      const auto& b = h[(i + 1) % h.size()];
      const double len = (b - a).norm();
      if (len == 0.0) continue;
      margin = std::min(margin, cross(a, b, Eigen::Vector2d::Zero()) / len);
      dist = std::min(dist, segment_distance(a, b));
    }
    loc.inside = margin >= -eps;
    loc.inradius = std::max(0.0, margin);
    loc.distance = loc.inside ? 0.0 : dist;
    return loc;
  }
  // Rank >= 3: support function on a direction grid. The grid minimum
  // overestimates the inradius by at most scale * (grid spacing).
  const int count = loc.rank == 3 ? 4000 : 20000;
  const auto dirs = direction_grid(loc.rank, count);
  double margin = HUGE_VAL;
  for (const auto& theta : dirs) {
    double h = -HUGE_VAL;
    for (const auto& v : y) h = std::max(h, theta.dot(v));
    margin = std::min(margin, h);
  }
  const double spacing = std::numbers::pi / std::pow(static_cast<double>(count), 1.0 / (loc.rank - 1));
  loc.inside = margin >= -eps;
  loc.inradius = std::max(0.0, margin - scale * spacing);
  loc.distance = loc.inside ? 0.0 : -margin;
  return loc;
}

}  // namespace mfspec
