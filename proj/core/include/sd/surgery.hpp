#pragma once

#include "sd/census.hpp"
#include "sd/certificate.hpp"
#include "sd/plan.hpp"

namespace sd {

/// Insert two sibling circles into the deterministically chosen piece with
/// m-2 boundary circuits (lowest component index, then lowest local face id
/// across its class).  Census changes by step_delta(F1a{m}); the vertex
/// count does not.  Throws no_host_face when no such piece exists.
Certificate apply_f1a(const Certificate& cert, std::uint64_t m);

/// Insert two nested circles into the deterministically chosen disc.
/// Census changes by {a2:+2}.
Certificate apply_f1b(const Certificate& cert);

/// Feasibility gate, reduction plan, base certificate, then one surgery per
/// plan step with the recomputed census checked against the plan trace after
/// every step.  The result verifies with exactly the requested census.
Certificate realize(const Census& census);

}  // namespace sd
