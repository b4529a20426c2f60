#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sd/errors.hpp"

namespace sd {

using Dart = std::uint64_t;

/// Connected 4-regular map on the sphere.  Darts are numbered 0..4V-1 and
/// grouped four per vertex (dart d belongs to vertex d/4).  sigma is the
/// counterclockwise rotation, a single 4-cycle on each vertex group; alpha
/// is the edge involution.  Faces are the orbits of phi = sigma . alpha,
/// i.e. phi(d) = sigma[alpha[d]].
struct CombMap {
  std::uint64_t vertex_count = 0;
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;

  std::uint64_t dart_count() const { return 4 * vertex_count; }
  std::uint64_t edge_count() const { return 2 * vertex_count; }
};

/// Cycle of `length` vertices where consecutive vertices are joined by two
/// parallel edges.  Spherical with length + 2 faces: the inner disc, the
/// outer disc, and one bigon per vertex pair.  length = 1 gives a vertex
/// with two nested loops.
CombMap doubled_cycle(std::uint64_t length);

using Face = std::vector<Dart>;

/// Orbits of phi = sigma . alpha, discovered in increasing dart order; local
/// face ids elsewhere are indices into this list.  Count is V + 2 for any
/// connected 4-regular sphere map.
std::vector<Face> trace_faces(const CombMap& map);

namespace map_checks {

// Each check returns "" on pass, else a short reason.
std::string permutations(const CombMap& map);
std::string four_regular(const CombMap& map);   // pre: permutations pass
std::string connected(const CombMap& map);      // pre: permutations pass

// Orbits of phi; pre: permutations pass.
std::vector<Face> face_orbits(const CombMap& map);

}  // namespace map_checks

}  // namespace sd
