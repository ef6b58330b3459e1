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

#ifndef PLANREFINE_MTV_TYPES_HPP_
#define PLANREFINE_MTV_TYPES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>

#include "planrefine/dynamics.hpp"
#include "planrefine/errors.hpp"

namespace planrefine {

/// Boundary conditions of a single-axis transfer: start/end position and
/// start/end velocity, plus the motion limits it must respect.
struct SegmentBoundary {
  double x10 = 0.0;  // start position
  double x1f = 0.0;  // end position
  double x20 = 0.0;  // start velocity
  double x2f = 0.0;  // end velocity
  DynamicsParams dynamics;

  double displacement() const { return x1f - x10; }

  void validate() const {
    dynamics.validate();
    const double slack = 1e-9 * (1.0 + dynamics.vel_max);
    if (std::abs(x20) > dynamics.vel_max + slack)
      throw ValidationError("segment.x20", "|start velocity| exceeds V");
    if (std::abs(x2f) > dynamics.vel_max + slack)
      throw ValidationError("segment.x2f", "|end velocity| exceeds V");
  }
};

enum class MtvProfile {
  kBcb,              // accelerate, cruise, decelerate
  kBb,               // accelerate, decelerate
  kNumericFallback,  // integrated numerically (closed forms not applicable)
};

inline const char* to_string(MtvProfile p) {
  switch (p) {
    case MtvProfile::kBcb: return "BCB";
    case MtvProfile::kBb: return "BB";
    case MtvProfile::kNumericFallback: return "numeric";
  }
  return "?";
}

/// Minimum traversal time of a segment and how it was obtained.
/// feasible_pair = false means no trajectory connects the boundary states
/// over the required displacement (t_min is +infinity then).
struct MtvResult {
  double t_min = 0.0;
  MtvProfile profile = MtvProfile::kBb;
  double dt1 = 0.0;           // acceleration phase
  double dt2 = 0.0;           // cruise phase (BCB only)
  double dt3 = 0.0;           // deceleration phase
  double peak_velocity = 0.0;
  bool feasible_pair = true;
};

struct GapResult {
  double gap = 0.0;    // min(0, dt - t_min), time units
  double ratio = 0.0;  // gap / t_min, dimensionless
};

/// Feasibility gap of a segment duration against its minimum time.
/// Zero gap means the duration is achievable. t_min <= 0 yields a zero gap
/// by convention; an infinite t_min (infeasible boundary pair) saturates
/// the ratio at -1.
inline GapResult feasibility_gap(double dt, double t_min) {
  if (!(t_min > 0.0)) return {0.0, 0.0};
  if (std::isinf(t_min))
    return {-std::numeric_limits<double>::infinity(), -1.0};
  const double g = std::min(0.0, dt - t_min);
  return {g, g / t_min};
}

}  // namespace planrefine

#endif  // PLANREFINE_MTV_TYPES_HPP_
