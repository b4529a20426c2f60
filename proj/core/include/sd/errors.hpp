#pragma once

#include <stdexcept>
#include <string>

namespace sd {

enum class errc {
  parse_error,
  overflow,
  negative_count,
  invalid_parameter,
  not_feasible,
  no_host_face,
  disconnected,
  not_spherical,
  bad_certificate,
  internal_invariant,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace sd
