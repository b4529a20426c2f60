#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sd/census.hpp"
#include "sd/comb_map.hpp"

namespace sd {

/// Component without vertices: a smooth circle.  Its two sides are the
/// local faces 0 (side0) and 1 (side1).
struct FreeCircle {};

using Component = std::variant<CombMap, FreeCircle>;

/// Containment record for one non-root component: it lives inside local
/// face `parent_face` of component `parent`, and its own local face
/// `outward_face` is the side touching that face.
struct Attachment {
  std::size_t child = 0;
  std::size_t parent = 0;
  std::uint64_t parent_face = 0;
  std::uint64_t outward_face = 0;
};

/// Dissection certificate: an embedded 1-complex on the sphere given as
/// map and circle components plus the containment forest placing every
/// non-root component inside a local face of its parent.
struct Certificate {
  std::vector<Component> components;
  std::size_t root = 0;
  std::vector<Attachment> attachments;

  std::uint64_t total_vertices() const;
  std::uint64_t total_edges() const;
  std::uint64_t circle_count() const;
};

struct LocalFaceRef {
  std::size_t component = 0;
  std::uint64_t face = 0;
  friend auto operator<=>(const LocalFaceRef&, const LocalFaceRef&) = default;
};

/// One connected region of the sphere minus the complex, as the set of
/// local faces glued into it; its piece type is C_k with k = size().
using GlobalFace = std::vector<LocalFaceRef>;

/// Number of local faces of a component: V + 2 for maps (valid once the
/// map is known spherical), 2 for circles.
std::uint64_t local_face_count(const Component& component);

/// Union-find over all local faces, merging (child outward face, parent
/// face) per attachment.  Members and classes come back sorted.
/// pre: the certificate's structural checks pass.
std::vector<GlobalFace> global_faces(const Certificate& cert);

Census census_from_classes(const std::vector<GlobalFace>& classes);

/// Census of the dissection: global_faces + class-size counting.
Census certificate_census(const Certificate& cert);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool complete = false;               // reached the end of the check pipeline
  std::optional<Census> census;        // set once every structural check passed
  std::optional<std::uint64_t> n;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

/// Full structural verification of an arbitrary certificate, in order:
/// permutation validity, 4-regularity, per-component connectivity and
/// sphericity, containment forest, face-id validity, even circle count,
/// vertex count divisible by 6; then recomputes the census and asserts
/// sum (2-k) a_k = V + 2, plus odd face count when V = 0.  Never throws;
/// failures land in the report.
VerifyReport verify(const Certificate& cert);

}  // namespace sd
