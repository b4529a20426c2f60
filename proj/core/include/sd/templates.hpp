#pragma once

#include <cstdint>

#include "sd/census.hpp"
#include "sd/certificate.hpp"

namespace sd {

/// The three base configurations every feasible census reduces to:
/// Circles (n = 0, two nested circles), Discs{n} (2+6n discs) and
/// Annulus{n} (2+6n discs plus one annulus).
struct BaseTemplate {
  enum class Kind { Circles, Discs, Annulus };

  Kind kind = Kind::Circles;
  std::uint64_t n = 0;  // 0 for Circles, >= 1 otherwise

  static BaseTemplate circles() { return {Kind::Circles, 0}; }
  static BaseTemplate discs(std::uint64_t n) { return {Kind::Discs, n}; }
  static BaseTemplate annulus(std::uint64_t n) { return {Kind::Annulus, n}; }

  friend bool operator==(const BaseTemplate&, const BaseTemplate&) = default;
};

const char* base_kind_name(BaseTemplate::Kind kind);

/// Census the template realizes: {2,1}, {2+6n} or {2+6n, 1}.
Census base_census(const BaseTemplate& t);

/// Build the certificate for a base template:
///   Circles    -> two free circles, the second nested in side1 of the first
///   Discs{n}   -> one doubled cycle of length 6n, all 6n+2 local faces discs
///   Annulus{n} -> a doubled 2-cycle inside face 0 of a doubled (6n-2)-cycle,
///                 merging exactly one pair of local faces into an annulus
Certificate instantiate_base(const BaseTemplate& t);

}  // namespace sd
