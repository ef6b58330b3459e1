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

#ifndef PLANREFINE_INSTANCE_HPP_
#define PLANREFINE_INSTANCE_HPP_

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "planrefine/dynamics.hpp"
#include "planrefine/errors.hpp"
#include "planrefine/region.hpp"
#include "planrefine/textio.hpp"

namespace planrefine {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One event of the plan skeleton: the agent must reach a waypoint inside
/// all listed regions, may be required to dwell there, and the transition
/// into the step carries duration bounds.
struct SkeletonStep {
  std::vector<Region> regions;  // waypoint must lie inside all of them
  double tau_low = 0.0;         // dwell window
  double tau_high = 0.0;
  double d_min = 0.0;           // duration window of the incoming segment
  double d_max = kInf;

  void validate(const std::string& field) const {
    if (regions.empty())
      throw ValidationError(field + ".regions", "step needs >= 1 region");
    for (size_t i = 0; i < regions.size(); ++i)
      regions[i].validate(field + ".regions[" + std::to_string(i) + "]");
    if (!(tau_low >= 0.0 && tau_low <= tau_high))
      throw ValidationError(field + ".tau", "need 0 <= tau_low <= tau_high");
    if (!(d_min >= 0.0 && d_min <= d_max))
      throw ValidationError(field + ".dur", "need 0 <= d_min <= d_max");
  }
};

/// Per-segment velocity limits handed to the conic program. b_norm may be
/// infinite, which drops the Euclidean-norm constraint entirely.
struct VelocityBounds {
  double vx = 0.0;
  double vy = 0.0;      // ignored for single-axis instances
  double b_norm = kInf;
};

/// A planning problem over a fixed skeleton: dynamics limits, start state,
/// nominal velocity bounds and the ordered list of steps to visit.
struct PlanInstance {
  DynamicsParams dynamics;
  int axis_count = 2;  // 1 or 2
  Vec2 start_pos;
  Vec2 start_vel;      // zero at the start of every plan
  VelocityBounds nominal_bounds;
  std::vector<SkeletonStep> steps;

  void validate() const {
    dynamics.validate();
    if (axis_count != 1 && axis_count != 2)
      throw ValidationError("axes", "axis_count must be 1 or 2");
    if (start_vel.x != 0.0 || start_vel.y != 0.0)
      throw ValidationError("start.vel", "plans start at rest");
    if (!(nominal_bounds.vx > 0.0))
      throw ValidationError("bounds.vx", "must be > 0");
    if (nominal_bounds.vx > dynamics.vel_max + 1e-12)
      throw ValidationError("bounds.vx", "nominal bound exceeds V");
    if (axis_count == 2) {
      if (!(nominal_bounds.vy > 0.0))
        throw ValidationError("bounds.vy", "must be > 0");
      if (nominal_bounds.vy > dynamics.vel_max + 1e-12)
        throw ValidationError("bounds.vy", "nominal bound exceeds V");
    }
    if (!(nominal_bounds.b_norm > 0.0))
      throw ValidationError("bounds.bnorm", "must be > 0");
    if (steps.empty())
      throw ValidationError("steps", "skeleton must be non-empty");
    for (size_t i = 0; i < steps.size(); ++i)
      steps[i].validate("steps[" + std::to_string(i) + "]");
  }
};

namespace detail {

inline void serialize_region(std::ostringstream& out, const Region& region) {
  out << "region " << region.kind_name();
  if (const auto* c = std::get_if<Circle>(&region.shape())) {
    out << ' ' << fmt_double(c->center.x) << ' ' << fmt_double(c->center.y)
        << ' ' << fmt_double(c->radius);
  } else if (const auto* r = std::get_if<Rectangle>(&region.shape())) {
    out << ' ' << fmt_double(r->center.x) << ' ' << fmt_double(r->center.y)
        << ' ' << fmt_double(r->half_x) << ' ' << fmt_double(r->half_y);
  } else {
    const auto& poly = std::get<ConvexPolygon>(region.shape());
    out << ' ' << poly.vertices.size();
    for (const Vec2& v : poly.vertices)
      out << ' ' << fmt_double(v.x) << ' ' << fmt_double(v.y);
  }
  out << '\n';
}

inline Region parse_region(const std::vector<std::string>& tok,
                           const std::string& where) {
  if (tok.size() < 2 || tok[0] != "region")
    throw ParseError(where, "expected 'region <kind> ...'");
  const std::string& kind = tok[1];
  if (kind == "circle") {
    if (tok.size() != 5)
      throw ParseError(where, "circle needs: cx cy radius");
    return Region(Circle{{parse_double(tok[2], where),
                          parse_double(tok[3], where)},
                         parse_double(tok[4], where)});
  }
  if (kind == "rect") {
    if (tok.size() != 6)
      throw ParseError(where, "rect needs: cx cy half_x half_y");
    return Region(Rectangle{{parse_double(tok[2], where),
                             parse_double(tok[3], where)},
                            parse_double(tok[4], where),
                            parse_double(tok[5], where)});
  }
  if (kind == "poly") {
    if (tok.size() < 3) throw ParseError(where, "poly needs a vertex count");
    const long n = parse_long(tok[2], where);
    if (n < 0 || tok.size() != static_cast<size_t>(3 + 2 * n))
      throw ParseError(where, "poly expects " + std::to_string(2 * n) +
                                  " coordinates");
    ConvexPolygon poly;
    for (long i = 0; i < n; ++i)
      poly.vertices.push_back({parse_double(tok[3 + 2 * i], where),
                               parse_double(tok[4 + 2 * i], where)});
    return Region(std::move(poly));
  }
  throw ParseError(where, "unknown region kind '" + kind + "'");
}

}  // namespace detail

inline std::string serialize_instance(const PlanInstance& inst) {
  std::ostringstream out;
  out << "planrefine-instance v1\n";
  out << "axes " << inst.axis_count << '\n';
  out << "dynamics U " << fmt_double(inst.dynamics.accel_max) << " V "
      << fmt_double(inst.dynamics.vel_max) << " k "
      << fmt_double(inst.dynamics.drag) << '\n';
  if (inst.axis_count == 1) {
    out << "start pos " << fmt_double(inst.start_pos.x) << " vel "
        << fmt_double(inst.start_vel.x) << '\n';
    out << "bounds vx " << fmt_double(inst.nominal_bounds.vx) << '\n';
  } else {
    out << "start pos " << fmt_double(inst.start_pos.x) << ' '
        << fmt_double(inst.start_pos.y) << " vel "
        << fmt_double(inst.start_vel.x) << ' '
        << fmt_double(inst.start_vel.y) << '\n';
    out << "bounds vx " << fmt_double(inst.nominal_bounds.vx) << " vy "
        << fmt_double(inst.nominal_bounds.vy) << " bnorm "
        << fmt_double(inst.nominal_bounds.b_norm) << '\n';
  }
  out << "steps " << inst.steps.size() << '\n';
  for (const SkeletonStep& step : inst.steps) {
    out << "step tau " << fmt_double(step.tau_low) << ' '
        << fmt_double(step.tau_high) << " dur " << fmt_double(step.d_min)
        << ' ' << fmt_double(step.d_max) << " regions "
        << step.regions.size() << '\n';
    for (const Region& region : step.regions)
      detail::serialize_region(out, region);
  }
  return out.str();
}

inline PlanInstance parse_instance(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  auto tok = reader.require_line("header");
  if (tok.size() != 2 || tok[0] != "planrefine-instance" || tok[1] != "v1")
    throw ParseError(reader.where(), "expected 'planrefine-instance v1'");

  PlanInstance inst;
  tok = reader.require_line("axes");
  if (tok.size() != 2 || tok[0] != "axes")
    throw ParseError(reader.where(), "expected 'axes <n>'");
  inst.axis_count = static_cast<int>(parse_long(tok[1], reader.where()));

  tok = reader.require_line("dynamics");
  if (tok.size() != 7 || tok[0] != "dynamics" || tok[1] != "U" ||
      tok[3] != "V" || tok[5] != "k")
    throw ParseError(reader.where(), "expected 'dynamics U <u> V <v> k <k>'");
  inst.dynamics.accel_max = parse_double(tok[2], reader.where());
  inst.dynamics.vel_max = parse_double(tok[4], reader.where());
  inst.dynamics.drag = parse_double(tok[6], reader.where());

  const size_t coords = inst.axis_count == 1 ? 1 : 2;
  tok = reader.require_line("start");
  if (tok.size() != 2 + 2 * coords || tok[0] != "start" || tok[1] != "pos" ||
      tok[2 + coords] != "vel")
    throw ParseError(reader.where(), "expected 'start pos ... vel ...'");
  inst.start_pos.x = parse_double(tok[2], reader.where());
  if (coords == 2) inst.start_pos.y = parse_double(tok[3], reader.where());
  inst.start_vel.x = parse_double(tok[3 + coords], reader.where());
  if (coords == 2) inst.start_vel.y = parse_double(tok[4 + coords], reader.where());

  tok = reader.require_line("bounds");
  if (inst.axis_count == 1) {
    if (tok.size() != 3 || tok[0] != "bounds" || tok[1] != "vx")
      throw ParseError(reader.where(), "expected 'bounds vx <v>'");
    inst.nominal_bounds.vx = parse_double(tok[2], reader.where());
    inst.nominal_bounds.vy = 0.0;
    inst.nominal_bounds.b_norm = kInf;
  } else {
    if (tok.size() != 7 || tok[0] != "bounds" || tok[1] != "vx" ||
        tok[3] != "vy" || tok[5] != "bnorm")
      throw ParseError(reader.where(),
                       "expected 'bounds vx <v> vy <v> bnorm <b>'");
    inst.nominal_bounds.vx = parse_double(tok[2], reader.where());
    inst.nominal_bounds.vy = parse_double(tok[4], reader.where());
    inst.nominal_bounds.b_norm = parse_double(tok[6], reader.where());
  }

  tok = reader.require_line("steps");
  if (tok.size() != 2 || tok[0] != "steps")
    throw ParseError(reader.where(), "expected 'steps <n>'");
  const long n_steps = parse_long(tok[1], reader.where());
  for (long s = 0; s < n_steps; ++s) {
    tok = reader.require_line("step");
    if (tok.size() != 9 || tok[0] != "step" || tok[1] != "tau" ||
        tok[4] != "dur" || tok[7] != "regions")
      throw ParseError(
          reader.where(),
          "expected 'step tau <lo> <hi> dur <lo> <hi> regions <n>'");
    SkeletonStep step;
    step.tau_low = parse_double(tok[2], reader.where());
    step.tau_high = parse_double(tok[3], reader.where());
    step.d_min = parse_double(tok[5], reader.where());
    step.d_max = parse_double(tok[6], reader.where());
    const long n_regions = parse_long(tok[8], reader.where());
    for (long r = 0; r < n_regions; ++r) {
      tok = reader.require_line("region");
      step.regions.push_back(detail::parse_region(tok, reader.where()));
    }
    inst.steps.push_back(std::move(step));
  }
  inst.validate();
  return inst;
}

inline PlanInstance load_instance(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_instance(in, path);
}

inline void save_instance(const PlanInstance& inst, const std::string& path) {
  inst.validate();
  write_file(path, serialize_instance(inst));
}

}  // namespace planrefine

#endif  // PLANREFINE_INSTANCE_HPP_
