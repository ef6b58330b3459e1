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

#ifndef PLANREFINE_MTV_ORACLE_HPP_
#define PLANREFINE_MTV_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "planrefine/errors.hpp"
#include "planrefine/mtv_types.hpp"

namespace planrefine {
namespace oracle_detail {

/// Time/position samples of one thrust phase, indexed by velocity.
/// Velocity is strictly monotone within a phase, so (t, x) can be looked
/// up by velocity with binary search and linear interpolation.
struct PhaseTable {
  std::vector<double> v;
  std::vector<double> t;
  std::vector<double> x;

  void clear() {
    v.clear();
    t.clear();
    x.clear();
  }

  void push(double vv, double tt, double xx) {
    v.push_back(vv);
    t.push_back(tt);
    x.push_back(xx);
  }

  double back_v() const { return v.back(); }

  /// Interpolated (t, x) at velocity vq, which must lie within the table.
  void at(double vq, double* tq, double* xq) const {
    if (vq <= v.front()) {
      *tq = t.front();
      *xq = x.front();
      return;
    }
    if (vq >= v.back()) {
      *tq = t.back();
      *xq = x.back();
      return;
    }
    const auto it = std::lower_bound(v.begin(), v.end(), vq);
    const size_t hi = static_cast<size_t>(it - v.begin());
    const size_t lo = hi - 1;
    const double f = (vq - v[lo]) / (v[hi] - v[lo]);
    *tq = t[lo] + f * (t[hi] - t[lo]);
    *xq = x[lo] + f * (x[hi] - x[lo]);
  }
};

/// Integrates dx/dt = v, dv/dt = accel(v) with classic fixed-step RK4 until
/// the velocity reaches v_stop or the accumulated displacement exceeds
/// x_stop. accel must be positive along the way (velocity rising).
template <typename AccelFn>
void integrate_phase(AccelFn accel, double v_start, double v_stop,
                     double x_stop, double h, PhaseTable* table) {
  table->clear();
  double t = 0.0;
  double x = 0.0;
  double v = v_start;
  table->push(v, t, x);
  // Generous cap; regular exits trigger far earlier.
  const long max_steps = 400000000L;
  for (long i = 0; i < max_steps; ++i) {
    if (v >= v_stop || x > x_stop) return;
    const double k1v = accel(v);
    const double k1x = v;
    const double k2v = accel(v + 0.5 * h * k1v);
    const double k2x = v + 0.5 * h * k1v;
    const double k3v = accel(v + 0.5 * h * k2v);
    const double k3x = v + 0.5 * h * k2v;
    const double k4v = accel(v + h * k3v);
    const double k4x = v + h * k3v;
    const double dv = h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const double dx = h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    if (!(dv > 0.0)) return;  // stalled against the drag asymptote
    v += dv;
    x += dx;
    t += h;
    table->push(v, t, x);
  }
  throw NumericError("phase integration exceeded the step budget");
}

}  // namespace oracle_detail

/// Numerical minimum-time evaluator, independent of the closed forms.
///
/// Bisects over the peak velocity of an accelerate-then-decelerate profile.
/// Each phase of the candidate profile is obtained by forward integration
/// of the drag dynamics with full thrust (u = +U, then u = -U) using
/// fixed-step 4th-order Runge-Kutta. The cruise portion, when the peak
/// saturates at the velocity bound, is added in closed form as distance
/// over speed. Returns +infinity when no such profile covers the required
/// displacement (infeasible boundary pair).
inline double oracle_min_time(const SegmentBoundary& seg,
                              double step = 1e-4) {
  seg.validate();
  const double U = seg.dynamics.accel_max;
  const double V = seg.dynamics.vel_max;
  const double k = seg.dynamics.drag;
  const double c = seg.dynamics.drag_limit_speed();

  // Canonical direction of travel.
  double d = seg.displacement();
  double v0 = seg.x20;
  double vf = seg.x2f;
  if (d < 0.0) {
    d = -d;
    v0 = -v0;
    vf = -vf;
  }

  const double vtop = std::min(V, c * (1.0 - 1e-9));
  if (v0 > vtop || vf > vtop)
    throw NumericError(
        "boundary velocity at or above the drag-limited top speed");

  thread_local oracle_detail::PhaseTable accel_table;
  thread_local oracle_detail::PhaseTable decel_table;

  // Acceleration phase forward from v0; deceleration phase integrated in
  // reversed time from vf upward (same samples, same displacement).
  const double x_cap = d * (1.0 + 1e-9) + 1e-9;
  oracle_detail::integrate_phase(
      [U, k](double v) { return U - 0.5 * k * v * v; }, v0, vtop, x_cap,
      step, &accel_table);
  oracle_detail::integrate_phase(
      [U, k](double v) { return U + 0.5 * k * v * v; }, vf, vtop, x_cap,
      step, &decel_table);

  const double lo = std::max(v0, vf);
  const double hi = std::min(accel_table.back_v(), decel_table.back_v());
  // A table that hit the displacement cap before reaching the slower
  // boundary velocity proves even the no-peak profile overshoots d.
  if (hi < lo) return std::numeric_limits<double>::infinity();

  auto profile_at = [&](double peak, double* time_out) {
    double ta, xa, td, xd;
    accel_table.at(peak, &ta, &xa);
    decel_table.at(peak, &td, &xd);
    *time_out = ta + td;
    return xa + xd;
  };

  double t_lo, t_hi;
  const double disp_lo = profile_at(lo, &t_lo);
  const double disp_hi = profile_at(hi, &t_hi);

  const double tol_d = 1e-9 * (1.0 + d);
  if (disp_lo > d + tol_d)
    return std::numeric_limits<double>::infinity();  // infeasible pair

  if (disp_hi < d) {
    // Saturated: both tables topped out. If that happened at the velocity
    // bound (or as close to the drag asymptote as resolvable), cruise
    // covers the remaining distance.
    const double cruise_v = hi;
    return t_hi + (d - disp_hi) / cruise_v;
  }

  double a = lo, b = hi;
  for (int i = 0; i < 200 && (b - a) > 1e-13 * (1.0 + b); ++i) {
    const double mid = 0.5 * (a + b);
    double tm;
    const double dm = profile_at(mid, &tm);
    if (dm < d)
      a = mid;
    else
      b = mid;
  }
  double t_final;
  profile_at(0.5 * (a + b), &t_final);
  return t_final;
}

}  // namespace planrefine

#endif  // PLANREFINE_MTV_ORACLE_HPP_
