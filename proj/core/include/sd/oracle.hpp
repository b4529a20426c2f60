#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sd/census.hpp"
#include "sd/certificate.hpp"

namespace sd {

/// System of disjoint circles on the sphere, recorded as a nesting forest:
/// parent[i] is the circle directly enclosing circle i, or npos for an
/// outermost circle.  A dissection needs a positive even circle count.
struct NestingForest {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent;
};

/// Census of the regions cut out by the circle system: one region per
/// circle with k = 1 + (number of children), plus the outermost region with
/// k = number of roots.  Total regions = circles + 1.
Census forest_census(const NestingForest& forest);

/// Every census realizable without triple points using at most max_circles
/// circles, by exhausting nesting forests up to isomorphism.
/// max_circles must be even, between 2 and 12 (desk scale).
std::set<Census> enumerate_n0(std::uint64_t max_circles);

struct CertificateBounds {
  std::uint64_t max_faces = 40;  // clamped to >= 3
  std::uint64_t max_n = 4;       // 0 forces the circles base
};

/// Deterministic fuzz driver: a random base template followed by a random
/// sequence of applicable surgeries.  Same seed, same certificate.
Certificate random_certificate(std::uint64_t seed, const CertificateBounds& bounds = {});

}  // namespace sd
