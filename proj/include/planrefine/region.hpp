// Copyright 2026 The planrefine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLANREFINE_REGION_HPP_
#define PLANREFINE_REGION_HPP_

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "planrefine/errors.hpp"

namespace planrefine {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

inline double cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

struct Circle {
  Vec2 center;
  double radius = 0.0;  // zero radius means an exact point target
};

struct Rectangle {
  Vec2 center;
  double half_x = 0.0;
  double half_y = 0.0;
};

/// Convex polygon with vertices in counter-clockwise order.
struct ConvexPolygon {
  std::vector<Vec2> vertices;
};

/// A spatial constraint a waypoint must satisfy. For single-axis instances
/// the point (x, 0) is tested, so regions keep their planar geometry.
class Region {
 public:
  using Shape = std::variant<Circle, Rectangle, ConvexPolygon>;

  explicit Region(Shape shape) : shape_(std::move(shape)) {}

  const Shape& shape() const { return shape_; }
  bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
  bool is_rectangle() const {
    return std::holds_alternative<Rectangle>(shape_);
  }
  bool is_polygon() const {
    return std::holds_alternative<ConvexPolygon>(shape_);
  }

  std::string kind_name() const {
    if (is_circle()) return "circle";
    if (is_rectangle()) return "rect";
    return "poly";
  }

  /// Membership with a slack for solver round-off. tol = 0 is the exact
  /// closed-set test.
  bool contains(const Vec2& p, double tol = 0.0) const {
    if (const auto* c = std::get_if<Circle>(&shape_)) {
      return (p - c->center).norm() <= c->radius + tol;
    }
    if (const auto* r = std::get_if<Rectangle>(&shape_)) {
      return std::abs(p.x - r->center.x) <= r->half_x + tol &&
             std::abs(p.y - r->center.y) <= r->half_y + tol;
    }
    const auto& poly = std::get<ConvexPolygon>(shape_);
    const size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2& a = poly.vertices[i];
      const Vec2& b = poly.vertices[(i + 1) % n];
      const Vec2 edge = b - a;
      // Inside is to the left of every CCW edge. Scale the slack by the
      // edge length since the cross product carries that factor.
      if (cross(edge, p - a) < -tol * edge.norm()) return false;
    }
    return true;
  }

  /// A point strictly inside the region (used as a solver warm start and by
  /// the generators). For polygons this is the vertex centroid.
  Vec2 interior_point() const {
    if (const auto* c = std::get_if<Circle>(&shape_)) return c->center;
    if (const auto* r = std::get_if<Rectangle>(&shape_)) return r->center;
    const auto& poly = std::get<ConvexPolygon>(shape_);
    Vec2 acc;
    for (const Vec2& v : poly.vertices) acc = acc + v;
    return acc * (1.0 / static_cast<double>(poly.vertices.size()));
  }

  void validate(const std::string& field) const {
    if (const auto* c = std::get_if<Circle>(&shape_)) {
      if (c->radius < 0.0)
        throw ValidationError(field + ".radius", "must be >= 0");
      return;
    }
    if (const auto* r = std::get_if<Rectangle>(&shape_)) {
      if (!(r->half_x > 0.0))
        throw ValidationError(field + ".half_x", "must be > 0");
      if (!(r->half_y > 0.0))
        throw ValidationError(field + ".half_y", "must be > 0");
      return;
    }
    const auto& poly = std::get<ConvexPolygon>(shape_);
    const size_t n = poly.vertices.size();
    if (n < 3)
      throw ValidationError(field + ".vertices",
                            "polygon needs at least 3 vertices, has " +
                                std::to_string(n));
    double area2 = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const Vec2& a = poly.vertices[i];
      const Vec2& b = poly.vertices[(i + 1) % n];
      const Vec2& c = poly.vertices[(i + 2) % n];
      if (cross(b - a, c - b) < 0.0)
        throw ValidationError(
            field + ".vertices",
            "polygon is not convex/counter-clockwise at vertex " +
                std::to_string((i + 1) % n));
      area2 += cross(a, b);
    }
    if (!(area2 > 0.0))
      throw ValidationError(field + ".vertices", "polygon has zero area");
  }

 private:
  Shape shape_;
};

}  // namespace planrefine

#endif  // PLANREFINE_REGION_HPP_
