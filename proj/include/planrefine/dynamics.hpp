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

#ifndef PLANREFINE_DYNAMICS_HPP_
#define PLANREFINE_DYNAMICS_HPP_

#include <cmath>

#include "planrefine/errors.hpp"

namespace planrefine {

/// Second-order motion limits: acceleration bound, velocity bound and a
/// quadratic drag coefficient. The velocity model is
///   dv/dt = u - (k/2) v^2,   |u| <= accel_max,  |v| <= vel_max.
struct DynamicsParams {
  double accel_max = 0.0;  // U, length/time^2
  double vel_max = 0.0;    // V, length/time
  double drag = 0.0;       // k, 1/length

  /// Speed at which drag cancels full forward thrust, sqrt(2U/k).
  /// Under full acceleration the velocity approaches this asymptotically,
  /// so no trajectory exceeds it. vel_max may lie above it.
  double drag_limit_speed() const { return std::sqrt(2.0 * accel_max / drag); }

  void validate() const {
    if (!(accel_max > 0.0))
      throw ValidationError("dynamics.U", "acceleration bound must be > 0");
    if (!(vel_max > 0.0))
      throw ValidationError("dynamics.V", "velocity bound must be > 0");
    if (!(drag > 0.0))
      throw ValidationError("dynamics.k", "drag coefficient must be > 0");
  }
};

}  // namespace planrefine

#endif  // PLANREFINE_DYNAMICS_HPP_
