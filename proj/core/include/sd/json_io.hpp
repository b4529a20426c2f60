#pragma once

#include <string>
#include <string_view>

#include "sd/census.hpp"
#include "sd/certificate.hpp"
#include "sd/plan.hpp"

namespace sd {

/// Census as a dense JSON array, e.g. "[8,1]".
std::string census_to_json(const Census& census);

/// Plan as {"base": ..., "steps": [...], "trace": [census, ...]}.
std::string plan_to_json(const SurgeryPlan& plan);

/// Certificate in the sd-cert/1 schema; attachments sorted by child, two
/// space indent, trailing newline.  Deterministic byte-for-byte.
std::string certificate_to_json(const Certificate& cert);

/// Parse an sd-cert/1 document.  Shape errors (bad JSON, wrong types,
/// missing fields, unknown version) throw parse_error; structural problems
/// are left for verify() to report.
Certificate certificate_from_json(std::string_view text);

}  // namespace sd
