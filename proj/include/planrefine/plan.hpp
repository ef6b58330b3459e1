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

#ifndef PLANREFINE_PLAN_HPP_
#define PLANREFINE_PLAN_HPP_

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "planrefine/errors.hpp"
#include "planrefine/instance.hpp"
#include "planrefine/region.hpp"
#include "planrefine/textio.hpp"

namespace planrefine {

/// A grounded plan over a fixed skeleton: waypoint positions, arrival
/// timestamps, dwell durations and the per-segment velocity bounds the
/// assignment was solved under.
///
/// Indexing: waypoint 0 is the start. Step i (1..n) arrives at waypoint i
/// at timestamps[i] and dwells for dwells[i-1]. Segment i runs from the
/// departure at waypoint i-1 to the arrival at waypoint i.
struct GroundedPlan {
  int axis_count = 2;
  std::vector<Vec2> waypoints;     // n + 1 entries
  std::vector<double> timestamps;  // n + 1 entries, arrival times, t0 = 0
  std::vector<double> dwells;      // n entries, for steps 1..n
  std::vector<VelocityBounds> segment_bounds;  // n entries
  double makespan = 0.0;

  size_t segment_count() const { return dwells.size(); }

  double dwell_at(size_t node) const {
    return node == 0 ? 0.0 : dwells[node - 1];
  }

  double departure_time(size_t node) const {
    return timestamps[node] + dwell_at(node);
  }

  /// Duration of segment i in 1..n.
  double segment_duration(size_t i) const {
    return timestamps[i] - departure_time(i - 1);
  }

  /// Signed average velocity of segment i per axis; zero for a segment with
  /// no duration (which then must also have no displacement).
  Vec2 segment_velocity(size_t i) const {
    const double dt = segment_duration(i);
    if (dt <= 0.0) return {0.0, 0.0};
    return (waypoints[i] - waypoints[i - 1]) * (1.0 / dt);
  }

  void validate(double tol = 1e-6) const {
    const size_t n = segment_count();
    if (n == 0)
      throw ValidationError("plan", "plan must cover a non-empty skeleton");
    if (waypoints.size() != n + 1 || timestamps.size() != n + 1 ||
        segment_bounds.size() != n)
      throw ValidationError("plan", "inconsistent array lengths");
    if (std::abs(timestamps[0]) > tol)
      throw ValidationError("plan.timestamps", "t_0 must be 0");
    for (size_t i = 1; i <= n; ++i) {
      if (segment_duration(i) < -tol)
        throw ValidationError(
            "plan.timestamps",
            "arrival " + std::to_string(i) + " precedes departure");
      if (dwells[i - 1] < -tol)
        throw ValidationError("plan.dwells", "negative dwell at step " +
                                                 std::to_string(i));
    }
    if (std::abs(makespan - (timestamps[n] + dwells[n - 1])) >
        tol * (1.0 + std::abs(makespan)))
      throw ValidationError("plan.makespan", "makespan != t_n + w_n");
    for (size_t i = 1; i <= n; ++i) {
      const Vec2 d = waypoints[i] - waypoints[i - 1];
      const double dt = segment_duration(i);
      const VelocityBounds& b = segment_bounds[i - 1];
      if (std::abs(d.x) > b.vx * dt + tol * (1.0 + std::abs(d.x)))
        throw ValidationError("plan.segment[" + std::to_string(i) + "]",
                              "x displacement exceeds vx * dt");
      if (axis_count == 2 &&
          std::abs(d.y) > b.vy * dt + tol * (1.0 + std::abs(d.y)))
        throw ValidationError("plan.segment[" + std::to_string(i) + "]",
                              "y displacement exceeds vy * dt");
      if (axis_count == 2 && std::isfinite(b.b_norm) &&
          d.norm() > b.b_norm * dt + tol * (1.0 + d.norm()))
        throw ValidationError("plan.segment[" + std::to_string(i) + "]",
                              "displacement norm exceeds b_norm * dt");
    }
  }

  /// Region membership against the instance the plan was solved for.
  void validate_against(const PlanInstance& inst, double tol = 1e-6) const {
    validate(tol);
    if (segment_count() != inst.steps.size())
      throw ValidationError("plan", "segment count != skeleton length");
    for (size_t i = 1; i <= segment_count(); ++i) {
      const Vec2 p = inst.axis_count == 1 ? Vec2{waypoints[i].x, 0.0}
                                          : waypoints[i];
      for (size_t r = 0; r < inst.steps[i - 1].regions.size(); ++r) {
        if (!inst.steps[i - 1].regions[r].contains(p, tol))
          throw ValidationError(
              "plan.waypoints[" + std::to_string(i) + "]",
              "outside region " + std::to_string(r) + " of its step");
      }
    }
  }
};

inline std::string serialize_plan(const GroundedPlan& plan) {
  std::ostringstream out;
  out << "planrefine-plan v1\n";
  out << "axes " << plan.axis_count << '\n';
  out << "waypoints " << plan.waypoints.size() << '\n';
  for (const Vec2& p : plan.waypoints) {
    out << "wp " << fmt_double(p.x);
    if (plan.axis_count == 2) out << ' ' << fmt_double(p.y);
    out << '\n';
  }
  out << "timestamps";
  for (double t : plan.timestamps) out << ' ' << fmt_double(t);
  out << '\n';
  out << "dwells";
  for (double w : plan.dwells) out << ' ' << fmt_double(w);
  out << '\n';
  out << "bounds " << plan.segment_bounds.size() << '\n';
  for (const VelocityBounds& b : plan.segment_bounds) {
    out << "bound " << fmt_double(b.vx);
    if (plan.axis_count == 2)
      out << ' ' << fmt_double(b.vy) << ' ' << fmt_double(b.b_norm);
    out << '\n';
  }
  out << "makespan " << fmt_double(plan.makespan) << '\n';
  return out.str();
}

inline GroundedPlan parse_plan(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  auto tok = reader.require_line("header");
  if (tok.size() != 2 || tok[0] != "planrefine-plan" || tok[1] != "v1")
    throw ParseError(reader.where(), "expected 'planrefine-plan v1'");

  GroundedPlan plan;
  tok = reader.require_line("axes");
  if (tok.size() != 2 || tok[0] != "axes")
    throw ParseError(reader.where(), "expected 'axes <n>'");
  plan.axis_count = static_cast<int>(parse_long(tok[1], reader.where()));
  if (plan.axis_count != 1 && plan.axis_count != 2)
    throw ParseError(reader.where(), "axes must be 1 or 2");

  tok = reader.require_line("waypoints");
  if (tok.size() != 2 || tok[0] != "waypoints")
    throw ParseError(reader.where(), "expected 'waypoints <n>'");
  const long n_wp = parse_long(tok[1], reader.where());
  const size_t coords = plan.axis_count == 1 ? 1 : 2;
  for (long i = 0; i < n_wp; ++i) {
    tok = reader.require_line("wp");
    if (tok.size() != 1 + coords || tok[0] != "wp")
      throw ParseError(reader.where(), "expected 'wp <coords>'");
    Vec2 p;
    p.x = parse_double(tok[1], reader.where());
    if (coords == 2) p.y = parse_double(tok[2], reader.where());
    plan.waypoints.push_back(p);
  }

  tok = reader.require_line("timestamps");
  if (tok.empty() || tok[0] != "timestamps" ||
      tok.size() != 1 + static_cast<size_t>(n_wp))
    throw ParseError(reader.where(), "expected one timestamp per waypoint");
  for (size_t i = 1; i < tok.size(); ++i)
    plan.timestamps.push_back(parse_double(tok[i], reader.where()));

  tok = reader.require_line("dwells");
  if (tok.empty() || tok[0] != "dwells" ||
      tok.size() != static_cast<size_t>(n_wp))
    throw ParseError(reader.where(), "expected one dwell per step");
  for (size_t i = 1; i < tok.size(); ++i)
    plan.dwells.push_back(parse_double(tok[i], reader.where()));

  tok = reader.require_line("bounds");
  if (tok.size() != 2 || tok[0] != "bounds" ||
      parse_long(tok[1], reader.where()) != n_wp - 1)
    throw ParseError(reader.where(), "expected 'bounds <segment count>'");
  for (long i = 0; i + 1 < n_wp; ++i) {
    tok = reader.require_line("bound");
    const size_t want = plan.axis_count == 1 ? 2 : 4;
    if (tok.size() != want || tok[0] != "bound")
      throw ParseError(reader.where(), "malformed bound line");
    VelocityBounds b;
    b.vx = parse_double(tok[1], reader.where());
    if (plan.axis_count == 2) {
      b.vy = parse_double(tok[2], reader.where());
      b.b_norm = parse_double(tok[3], reader.where());
    } else {
      b.vy = 0.0;
      b.b_norm = kInf;
    }
    plan.segment_bounds.push_back(b);
  }

  tok = reader.require_line("makespan");
  if (tok.size() != 2 || tok[0] != "makespan")
    throw ParseError(reader.where(), "expected 'makespan <T>'");
  plan.makespan = parse_double(tok[1], reader.where());

  plan.validate();
  return plan;
}

inline GroundedPlan load_plan(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_plan(in, path);
}

/// Writes a plan after re-checking its invariants; round-trips losslessly.
inline void save_plan(const GroundedPlan& plan, const std::string& path) {
  plan.validate();
  write_file(path, serialize_plan(plan));
}

}  // namespace planrefine

#endif  // PLANREFINE_PLAN_HPP_
