#include "sd/errors.hpp"

namespace sd {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "parse_error";
    case errc::overflow: return "overflow";
    case errc::negative_count: return "negative_count";
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::not_feasible: return "not_feasible";
    case errc::no_host_face: return "no_host_face";
    case errc::disconnected: return "disconnected";
    case errc::not_spherical: return "not_spherical";
    case errc::bad_certificate: return "bad_certificate";
    case errc::internal_invariant: return "internal_invariant";
  }
  return "unknown";
}

}  // namespace sd
