#pragma once

#include <string>

#include "sd/certificate.hpp"

namespace sd {

/// Graphviz rendering of a verified certificate: one node per vertex, one
/// edge per alpha orbit, circles as labeled two-node cycles, faces and
/// attachments as comments.  Output is deterministic.  Throws
/// bad_certificate when verification fails.
std::string certificate_to_dot(const Certificate& cert);

}  // namespace sd
