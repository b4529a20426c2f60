#include "sd/comb_map.hpp"

#include <limits>

namespace sd {

CombMap doubled_cycle(std::uint64_t length) {
  if (length == 0) throw Error(errc::invalid_parameter, "doubled_cycle: length must be positive");
  if (length > (std::numeric_limits<std::uint64_t>::max() / 4))
    throw Error(errc::invalid_parameter, "doubled_cycle: length too large");

  CombMap m;
  m.vertex_count = length;
  m.sigma.resize(4 * length);
  m.alpha.resize(4 * length);
  for (std::uint64_t i = 0; i < length; ++i) {
    // darts of vertex i in counterclockwise order:
    //   4i+0 outer edge to next, 4i+1 inner edge to next,
    //   4i+2 inner edge to prev, 4i+3 outer edge to prev
    const Dart base = 4 * i;
    m.sigma[base + 0] = base + 1;
    m.sigma[base + 1] = base + 2;
    m.sigma[base + 2] = base + 3;
    m.sigma[base + 3] = base + 0;
    const std::uint64_t next = (i + 1) % length;
    const std::uint64_t prev = (i + length - 1) % length;
    m.alpha[base + 0] = 4 * next + 3;
    m.alpha[base + 1] = 4 * next + 2;
    m.alpha[base + 2] = 4 * prev + 1;
    m.alpha[base + 3] = 4 * prev + 0;
  }
  return m;
}

namespace map_checks {

std::string permutations(const CombMap& m) {
  if (m.vertex_count == 0) return "map has no vertices";
  if (m.vertex_count > std::numeric_limits<std::uint64_t>::max() / 4)
    return "vertex count too large";
  const std::uint64_t nd = 4 * m.vertex_count;
  if (m.sigma.size() != nd)
    return "sigma has " + std::to_string(m.sigma.size()) + " entries, expected " + std::to_string(nd);
  if (m.alpha.size() != nd)
    return "alpha has " + std::to_string(m.alpha.size()) + " entries, expected " + std::to_string(nd);

  std::vector<char> hit(nd, 0);
  for (Dart d = 0; d < nd; ++d) {
    const Dart s = m.sigma[d];
    if (s >= nd) return "sigma image out of range at dart " + std::to_string(d);
    if (hit[s]) return "sigma is not a bijection (repeats dart " + std::to_string(s) + ")";
    hit[s] = 1;
  }
  std::fill(hit.begin(), hit.end(), 0);
  for (Dart d = 0; d < nd; ++d) {
    const Dart a = m.alpha[d];
    if (a >= nd) return "alpha image out of range at dart " + std::to_string(d);
    if (hit[a]) return "alpha is not a bijection (repeats dart " + std::to_string(a) + ")";
    hit[a] = 1;
    if (a == d) return "alpha fixes dart " + std::to_string(d);
  }
  for (Dart d = 0; d < nd; ++d) {
    if (m.alpha[m.alpha[d]] != d) return "alpha is not an involution at dart " + std::to_string(d);
  }
  return "";
}

std::string four_regular(const CombMap& m) {
  for (std::uint64_t v = 0; v < m.vertex_count; ++v) {
    const Dart base = 4 * v;
    Dart d = base;
    for (int step = 0; step < 4; ++step) {
      const Dart s = m.sigma[d];
      if (s / 4 != v) return "sigma leaves the dart group of vertex " + std::to_string(v);
      if (step < 3 && s == base)
        return "sigma is not a single 4-cycle at vertex " + std::to_string(v);
      d = s;
    }
    if (d != base) return "sigma is not a single 4-cycle at vertex " + std::to_string(v);
  }
  return "";
}

std::string connected(const CombMap& m) {
  // forward closure under sigma and alpha equals the full group orbit:
  // both permutations have finite order on every cycle
  const std::uint64_t nd = 4 * m.vertex_count;
  std::vector<char> seen(nd, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::uint64_t visited = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (const Dart e : {m.sigma[d], m.alpha[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++visited;
        stack.push_back(e);
      }
    }
  }
  if (visited != nd)
    return "dart orbit covers " + std::to_string(visited) + " of " + std::to_string(nd) + " darts";
  return "";
}

std::vector<Face> face_orbits(const CombMap& m) {
  const std::uint64_t nd = 4 * m.vertex_count;
  std::vector<char> seen(nd, 0);
  std::vector<Face> faces;
  for (Dart d = 0; d < nd; ++d) {
    if (seen[d]) continue;
    Face face;
    Dart cur = d;
    do {
      seen[cur] = 1;
      face.push_back(cur);
      cur = m.sigma[m.alpha[cur]];
    } while (cur != d);
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace map_checks

std::vector<Face> trace_faces(const CombMap& map) {
  if (const std::string e = map_checks::permutations(map); !e.empty())
    throw Error(errc::invalid_parameter, "trace_faces: " + e);
  if (const std::string e = map_checks::four_regular(map); !e.empty())
    throw Error(errc::invalid_parameter, "trace_faces: " + e);
  if (const std::string e = map_checks::connected(map); !e.empty())
    throw Error(errc::disconnected, "trace_faces: " + e);
  std::vector<Face> faces = map_checks::face_orbits(map);
  // V - E + F = 2 with E = 2V
  if (faces.size() != map.vertex_count + 2)
    throw Error(errc::not_spherical, "trace_faces: " + std::to_string(faces.size()) + " faces on " +
                                         std::to_string(map.vertex_count) +
                                         " vertices violates the sphere Euler formula");
  return faces;
}

}  // namespace sd
