#include "sd/templates.hpp"

#include <limits>

namespace sd {

namespace {

std::uint64_t checked_disc_count(std::uint64_t n) {
  if (n == 0) throw Error(errc::invalid_parameter, "base template needs n >= 1");
  if (n > (std::numeric_limits<std::uint64_t>::max() - 2) / 6)
    throw Error(errc::invalid_parameter, "base template: n too large");
  return 2 + 6 * n;
}

}  // namespace

const char* base_kind_name(BaseTemplate::Kind kind) {
  switch (kind) {
    case BaseTemplate::Kind::Circles: return "Circles";
    case BaseTemplate::Kind::Discs: return "Discs";
    case BaseTemplate::Kind::Annulus: return "Annulus";
  }
  return "unknown";
}

Census base_census(const BaseTemplate& t) {
  switch (t.kind) {
    case BaseTemplate::Kind::Circles:
      return Census::from_entries({{1, 2}, {2, 1}});
    case BaseTemplate::Kind::Discs:
      return Census::from_entries({{1, checked_disc_count(t.n)}});
    case BaseTemplate::Kind::Annulus:
      return Census::from_entries({{1, checked_disc_count(t.n)}, {2, 1}});
  }
  throw Error(errc::invalid_parameter, "base template: unknown kind");
}

Certificate instantiate_base(const BaseTemplate& t) {
  Certificate cert;
  switch (t.kind) {
    case BaseTemplate::Kind::Circles:
      cert.components = {FreeCircle{}, FreeCircle{}};
      cert.root = 0;
      cert.attachments = {{1, 0, 1, 0}};  // second circle inside side1 of the first
      return cert;
    case BaseTemplate::Kind::Discs:
      checked_disc_count(t.n);
      cert.components = {doubled_cycle(6 * t.n)};
      cert.root = 0;
      return cert;
    case BaseTemplate::Kind::Annulus:
      checked_disc_count(t.n);
      cert.components = {doubled_cycle(6 * t.n - 2), doubled_cycle(2)};
      cert.root = 0;
      cert.attachments = {{1, 0, 0, 0}};  // one face pair merges into the annulus
      return cert;
  }
  throw Error(errc::invalid_parameter, "base template: unknown kind");
}

}  // namespace sd
