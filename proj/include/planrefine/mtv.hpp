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

#ifndef PLANREFINE_MTV_HPP_
#define PLANREFINE_MTV_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "planrefine/errors.hpp"
#include "planrefine/mtv_oracle.hpp"
#include "planrefine/mtv_types.hpp"

namespace planrefine {
namespace mtv_detail {

/// Closed-form phase times/distances for dv/dt = u - (k/2) v^2 at full
/// thrust. All formulas assume forward motion (velocities in [0, c) with
/// c = sqrt(2U/k)) and are written with atanh/atan/log1p to stay accurate
/// for vanishing drag.
struct DragMotion {
  double U;
  double k;
  double c;  // drag-limited top speed sqrt(2U/k)

  explicit DragMotion(const DynamicsParams& dyn)
      : U(dyn.accel_max), k(dyn.drag), c(dyn.drag_limit_speed()) {}

  // Full thrust, velocity rising from v0 to v1 (0 <= v0 <= v1 < c).
  double accel_time(double v0, double v1) const {
    const double s = std::sqrt(2.0 * k * U);  // = k * c
    return (2.0 / s) * (std::atanh(v1 / c) - std::atanh(v0 / c));
  }
  double accel_dist(double v0, double v1) const {
    const double r0 = (v0 / c) * (v0 / c);
    const double r1 = (v1 / c) * (v1 / c);
    return (std::log1p(-r0) - std::log1p(-r1)) / k;
  }

  // Full reverse thrust, velocity falling from v1 to vf (vf <= v1).
  double decel_time(double v1, double vf) const {
    const double s = std::sqrt(2.0 * k * U);
    return (2.0 / s) * (std::atan(v1 / c) - std::atan(vf / c));
  }
  double decel_dist(double v1, double vf) const {
    const double r1 = (v1 / c) * (v1 / c);
    const double rf = (vf / c) * (vf / c);
    return (std::log1p(r1) - std::log1p(rf)) / k;
  }

  double thrust_dist(double peak, double v0, double vf) const {
    return accel_dist(v0, peak) + decel_dist(peak, vf);
  }
};

inline void check_domain(const DragMotion& m, double v0, double vf) {
  if (v0 >= m.c * (1.0 - 1e-12) || vf >= m.c * (1.0 - 1e-12))
    throw NumericError(
        "boundary velocity reaches the drag-limited top speed sqrt(2U/k); "
        "the phase formulas leave their domain");
}

inline MtvResult cruise_result(const DragMotion& m, double peak, double v0,
                               double vf, double d) {
  MtvResult res;
  res.profile = MtvProfile::kBcb;
  res.peak_velocity = peak;
  res.dt1 = m.accel_time(v0, peak);
  res.dt3 = m.decel_time(peak, vf);
  res.dt2 = (d - m.thrust_dist(peak, v0, vf)) / peak;
  res.t_min = res.dt1 + res.dt2 + res.dt3;
  return res;
}

inline MtvResult infeasible_pair_result() {
  MtvResult res;
  res.t_min = std::numeric_limits<double>::infinity();
  res.profile = MtvProfile::kNumericFallback;
  res.feasible_pair = false;
  return res;
}

}  // namespace mtv_detail

/// Reflects a segment so its displacement is non-negative. Returns the
/// canonical segment and whether the reflection was applied. Involutive.
inline SegmentBoundary mirror_canonicalize(const SegmentBoundary& seg,
                                           bool* applied = nullptr) {
  if (seg.x1f < seg.x10) {
    if (applied) *applied = true;
    SegmentBoundary out = seg;
    out.x10 = -seg.x10;
    out.x1f = -seg.x1f;
    out.x20 = -seg.x20;
    out.x2f = -seg.x2f;
    return out;
  }
  if (applied) *applied = false;
  return seg;
}

/// Selects the time-optimal profile for a canonical segment (displacement
/// and boundary velocities non-negative). The cruise profile applies when
/// the velocity bound is reachable (V below the drag-limited top speed)
/// and the full-thrust phases to and from V fit inside the displacement.
/// Equality is classified as BCB with a zero-length cruise, which agrees
/// with BB in the limit.
inline MtvProfile profile_select(const SegmentBoundary& seg) {
  seg.validate();
  const mtv_detail::DragMotion m(seg.dynamics);
  const double V = seg.dynamics.vel_max;
  const double v0 = seg.x20;
  const double vf = seg.x2f;
  if (v0 < 0.0 || vf < 0.0)
    throw ValidationError("segment",
                          "profile_select needs canonical velocities >= 0");
  mtv_detail::check_domain(m, v0, vf);
  if (V >= m.c) return MtvProfile::kBb;
  const double d = seg.displacement();
  return m.thrust_dist(V, v0, vf) <= d ? MtvProfile::kBcb : MtvProfile::kBb;
}

/// Accelerate-cruise-decelerate minimum time. Requires profile_select to
/// have returned BCB.
inline MtvResult mtv_bcb(const SegmentBoundary& seg) {
  const mtv_detail::DragMotion m(seg.dynamics);
  const double V = seg.dynamics.vel_max;
  mtv_detail::check_domain(m, seg.x20, seg.x2f);
  MtvResult res =
      mtv_detail::cruise_result(m, V, seg.x20, seg.x2f, seg.displacement());
  if (res.dt1 < 0.0 || res.dt2 < -1e-12 || res.dt3 < 0.0)
    throw NumericError("BCB phases are negative; profile misselected");
  res.dt2 = std::max(0.0, res.dt2);
  return res;
}

/// Accelerate-decelerate minimum time. The peak velocity solves the
/// displacement-matching equation by bisection (tolerance 1e-10 on the
/// peak). Two non-nominal outcomes:
///  - the pure transfer between the boundary velocities already overshoots
///    the displacement: infeasible pair, t_min = +infinity;
///  - the peak saturates at the drag-limited top speed (only possible when
///    V >= sqrt(2U/k)): the remaining distance is covered at that speed
///    and the result reports a BCB profile with a cruise phase.
inline MtvResult mtv_bb(const SegmentBoundary& seg) {
  const mtv_detail::DragMotion m(seg.dynamics);
  const double V = seg.dynamics.vel_max;
  const double v0 = seg.x20;
  const double vf = seg.x2f;
  const double d = seg.displacement();
  mtv_detail::check_domain(m, v0, vf);

  const double lo = std::max(v0, vf);
  const double hi = std::min(V, m.c * (1.0 - 1e-9));
  const double tol_d = 1e-9 * (1.0 + d);

  const double disp_lo = m.thrust_dist(lo, v0, vf);
  if (disp_lo > d + tol_d) return mtv_detail::infeasible_pair_result();
  if (m.thrust_dist(hi, v0, vf) < d)
    return mtv_detail::cruise_result(m, hi, v0, vf, d);

  double a = lo, b = hi;
  while (b - a > 1e-10) {
    const double mid = 0.5 * (a + b);
    if (m.thrust_dist(mid, v0, vf) < d)
      a = mid;
    else
      b = mid;
  }
  const double peak = 0.5 * (a + b);

  MtvResult res;
  res.profile = MtvProfile::kBb;
  res.peak_velocity = peak;
  res.dt1 = m.accel_time(v0, peak);
  res.dt3 = m.decel_time(peak, vf);
  res.t_min = res.dt1 + res.dt3;
  return res;
}

/// Minimum traversal time of a one-axis segment. Canonicalizes the
/// direction, dispatches to the closed forms, and falls back to the
/// numerical evaluator for boundary velocities that oppose the direction
/// of travel (the closed forms leave their log/atan domains there).
inline MtvResult mtv_min_time(const SegmentBoundary& seg) {
  seg.validate();
  const SegmentBoundary canon = mirror_canonicalize(seg);
  if (canon.x20 < 0.0 || canon.x2f < 0.0) {
    MtvResult res;
    res.t_min = oracle_min_time(canon);
    res.profile = MtvProfile::kNumericFallback;
    res.feasible_pair = std::isfinite(res.t_min);
    return res;
  }
  return profile_select(canon) == MtvProfile::kBcb ? mtv_bcb(canon)
                                                   : mtv_bb(canon);
}

struct Mtv2dResult {
  double t_min = 0.0;
  MtvResult x;
  std::optional<MtvResult> y;

  bool feasible_pair() const {
    return x.feasible_pair && (!y || y->feasible_pair);
  }
};

/// Two-axis decomposition: the axes are independent, so the segment time
/// is governed by the slower axis. Pass y = nullptr for one-axis segments.
inline Mtv2dResult mtv_2d(const SegmentBoundary& x_axis,
                          const SegmentBoundary* y_axis) {
  Mtv2dResult res;
  res.x = mtv_min_time(x_axis);
  res.t_min = res.x.t_min;
  if (y_axis) {
    res.y = mtv_min_time(*y_axis);
    res.t_min = std::max(res.t_min, res.y->t_min);
  }
  return res;
}

}  // namespace planrefine

#endif  // PLANREFINE_MTV_HPP_
