#pragma once

#include <array>
#include <random>
#include <set>
#include <vector>

#include "sd/census.hpp"
#include "sd/comb_map.hpp"

namespace sdtest {

// Build a map from per-vertex counterclockwise neighbor lists.  Only for
// simple graphs: the i-th occurrence of w in v's list pairs with the i-th
// occurrence of v in w's list, which is unambiguous without parallel edges.
inline sd::CombMap map_from_rotations(const std::vector<std::array<int, 4>>& neighbors) {
  sd::CombMap m;
  m.vertex_count = neighbors.size();
  m.sigma.resize(4 * neighbors.size());
  m.alpha.resize(4 * neighbors.size());
  for (std::size_t v = 0; v < neighbors.size(); ++v) {
    for (int j = 0; j < 4; ++j) m.sigma[4 * v + j] = 4 * v + (j + 1) % 4;
    for (int j = 0; j < 4; ++j) {
      const int w = neighbors[v][j];
      int occurrence = 0;
      for (int jj = 0; jj < j; ++jj) {
        if (neighbors[v][jj] == w) ++occurrence;
      }
      int seen = 0;
      for (int jw = 0; jw < 4; ++jw) {
        if (neighbors[w][jw] == static_cast<int>(v)) {
          if (seen == occurrence) {
            m.alpha[4 * v + j] = 4 * w + jw;
            break;
          }
          ++seen;
        }
      }
    }
  }
  return m;
}

// The octahedron with its spherical rotation system: V=6, E=12, F=8.
inline sd::CombMap octahedron() {
  return map_from_rotations({{
      {1, 2, 3, 4},  // top
      {0, 4, 5, 2},  // equator
      {0, 1, 5, 3},
      {0, 2, 5, 4},
      {0, 3, 5, 1},
      {1, 4, 3, 2},  // bottom
  }});
}

// Independent orbit counter for phi = sigma . alpha; no shared code with
// trace_faces.
inline std::uint64_t phi_orbit_count(const sd::CombMap& m) {
  std::set<sd::Dart> unvisited;
  for (sd::Dart d = 0; d < m.dart_count(); ++d) unvisited.insert(d);
  std::uint64_t orbits = 0;
  while (!unvisited.empty()) {
    const sd::Dart start = *unvisited.begin();
    sd::Dart cur = start;
    do {
      unvisited.erase(cur);
      cur = m.sigma[m.alpha[cur]];
    } while (cur != start);
    ++orbits;
  }
  return orbits;
}

// Sample a census satisfying the realizability restrictions directly:
// choose the higher entries, then solve a1 = 2 + 6n + sum (k-2) a_k and fix
// the n=0 parity by bumping a2 (which leaves the euler sum alone).
inline sd::Census random_feasible_census(std::mt19937_64& rng, std::uint64_t max_faces) {
  for (;;) {
    sd::Census::Entries entries;
    std::uint64_t faces = 0;
    std::uint64_t debt = 0;  // sum over k>=3 of (k-2) a_k
    const int high = static_cast<int>(rng() % 4);
    for (int i = 0; i < high; ++i) {
      const std::uint64_t k = 3 + rng() % 6;
      const std::uint64_t count = 1 + rng() % 3;
      entries[k] += count;
      faces += count;
      debt += (k - 2) * count;
    }
    const std::uint64_t a2 = rng() % 4;
    if (a2) entries[2] = a2;
    faces += a2;

    if (2 + debt + faces > max_faces) continue;
    const std::uint64_t n_cap = (max_faces - 2 - debt - faces) / 6;
    const std::uint64_t n = rng() % (n_cap + 1);
    const std::uint64_t a1 = 2 + 6 * n + debt;
    std::uint64_t total = a1 + faces;
    if (n == 0 && total % 2 == 0) {
      if (total + 1 > max_faces) continue;
      entries[2] += 1;
    }
    entries[1] = a1;
    return sd::Census::from_entries(entries);
  }
}

}  // namespace sdtest
