// The billiard map on the phase cylinder (arc length, outgoing angle).
#pragma once

#include <vector>

#include "birkhoff/domain.hpp"

namespace birkhoff {

struct PhaseState {
  double s = 0.0;    // arc length mod boundary length
  double phi = 0.0;  // outgoing angle against the oriented tangent, in (0, pi)
};

// Minimum distance from {0, pi} accepted for phi; grazing states are rejected.
inline constexpr double kPhiMargin = 1e-8;

// One bounce forward. The next collision solves a strictly monotone equation
// in the tangent-angle variable, so the root is bracketed a priori.
PhaseState billiard_step(const BoundaryChart& chart, const PhaseState& state);

// One bounce backward, via the time reversor J: (s, phi) -> (s, pi - phi).
PhaseState billiard_step_back(const BoundaryChart& chart,
                              const PhaseState& state);

// n forward iterates (state included as element 0; result has n+1 entries).
std::vector<PhaseState> billiard_orbit(const BoundaryChart& chart,
                                       PhaseState state, int n);

// Residual of the reflection law at the transition state -> next, re-derived
// from chord geometry only; vanishes for exact map evaluations.
double reflection_residual(const BoundaryChart& chart, const PhaseState& state,
                           const PhaseState& next);

}  // namespace birkhoff
