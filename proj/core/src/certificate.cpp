#include "sd/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace sd {

namespace {

const CombMap* as_map(const Component& c) { return std::get_if<CombMap>(&c); }

std::string check_forest(const Certificate& cert) {
  const std::size_t nc = cert.components.size();
  if (nc == 0) return "certificate has no components";
  if (cert.root >= nc) return "root index " + std::to_string(cert.root) + " out of range";

  std::vector<char> attached(nc, 0);
  std::vector<std::size_t> parent(nc, nc);
  for (const Attachment& at : cert.attachments) {
    if (at.child >= nc) return "attachment child " + std::to_string(at.child) + " out of range";
    if (at.parent >= nc) return "attachment parent " + std::to_string(at.parent) + " out of range";
    if (at.child == cert.root) return "root component cannot be attached";
    if (at.child == at.parent) return "component " + std::to_string(at.child) + " attached to itself";
    if (attached[at.child]) return "component " + std::to_string(at.child) + " attached twice";
    attached[at.child] = 1;
    parent[at.child] = at.parent;
  }
  for (std::size_t i = 0; i < nc; ++i) {
    if (i != cert.root && !attached[i]) return "component " + std::to_string(i) + " is not attached";
  }
  // every parent chain must reach the root without revisiting a component
  for (std::size_t i = 0; i < nc; ++i) {
    std::size_t cur = i;
    std::size_t hops = 0;
    while (cur != cert.root) {
      cur = parent[cur];
      if (++hops > nc) return "containment records form a cycle";
    }
  }
  return "";
}

}  // namespace

std::uint64_t Certificate::total_vertices() const {
  std::uint64_t v = 0;
  for (const Component& c : components) {
    if (const CombMap* m = as_map(c)) v += m->vertex_count;
  }
  return v;
}

std::uint64_t Certificate::total_edges() const { return 2 * total_vertices(); }

std::uint64_t Certificate::circle_count() const {
  std::uint64_t n = 0;
  for (const Component& c : components) {
    if (std::holds_alternative<FreeCircle>(c)) ++n;
  }
  return n;
}

std::uint64_t local_face_count(const Component& component) {
  if (const CombMap* m = as_map(component)) return m->vertex_count + 2;
  return 2;
}

std::vector<GlobalFace> global_faces(const Certificate& cert) {
  const std::size_t nc = cert.components.size();
  std::vector<std::uint64_t> offset(nc + 1, 0);
  for (std::size_t i = 0; i < nc; ++i) offset[i + 1] = offset[i] + local_face_count(cert.components[i]);
  const std::uint64_t total = offset[nc];

  std::vector<std::uint64_t> dsu(total);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (dsu[x] != x) {
      dsu[x] = dsu[dsu[x]];
      x = dsu[x];
    }
    return x;
  };

  for (const Attachment& at : cert.attachments) {
    if (at.child >= nc || at.parent >= nc ||
        at.outward_face >= local_face_count(cert.components[at.child]) ||
        at.parent_face >= local_face_count(cert.components[at.parent]))
      throw Error(errc::bad_certificate, "global_faces: attachment references a missing face");
    const std::uint64_t a = find(offset[at.child] + at.outward_face);
    const std::uint64_t b = find(offset[at.parent] + at.parent_face);
    if (a != b) dsu[a] = b;
  }

  std::vector<std::vector<std::uint64_t>> byRoot(total);
  for (std::uint64_t f = 0; f < total; ++f) byRoot[find(f)].push_back(f);

  std::vector<GlobalFace> classes;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (byRoot[r].empty()) continue;
    GlobalFace cls;
    for (const std::uint64_t f : byRoot[r]) {
      const auto it = std::upper_bound(offset.begin(), offset.end(), f);
      const std::size_t comp = static_cast<std::size_t>(it - offset.begin()) - 1;
      cls.push_back({comp, f - offset[comp]});
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const GlobalFace& a, const GlobalFace& b) { return a.front() < b.front(); });
  return classes;
}

Census census_from_classes(const std::vector<GlobalFace>& classes) {
  Census::Entries entries;
  for (const GlobalFace& cls : classes) entries[cls.size()] += 1;
  return Census::from_entries(entries);
}

Census certificate_census(const Certificate& cert) {
  return census_from_classes(global_faces(cert));
}

bool VerifyReport::ok() const {
  if (!complete) return false;
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify(const Certificate& cert) {
  VerifyReport rep;
  auto record = [&rep](const char* name, std::string err) {
    rep.checks.push_back({name, err.empty(), std::move(err)});
    return rep.checks.back().pass;
  };
  auto first_map_error = [&cert](auto check) -> std::string {
    for (std::size_t i = 0; i < cert.components.size(); ++i) {
      if (const CombMap* m = as_map(cert.components[i])) {
        if (std::string e = check(*m); !e.empty())
          return "component " + std::to_string(i) + ": " + std::move(e);
      }
    }
    return "";
  };

  if (!record("permutations", first_map_error(map_checks::permutations))) return rep;
  if (!record("four-regular", first_map_error(map_checks::four_regular))) return rep;

  // connectivity and sphericity are both decidable once the permutations
  // are sound; report them together
  const bool connectedOk = record("connected", first_map_error(map_checks::connected));
  const bool sphericalOk = record("spherical", first_map_error([](const CombMap& m) -> std::string {
    const std::size_t f = map_checks::face_orbits(m).size();
    if (f != m.vertex_count + 2)
      return std::to_string(f) + " faces on " + std::to_string(m.vertex_count) +
             " vertices violates the sphere Euler formula";
    return "";
  }));
  if (!connectedOk || !sphericalOk) return rep;

  if (!record("forest", check_forest(cert))) return rep;

  if (!record("outward-faces", [&cert]() -> std::string {
        for (const Attachment& at : cert.attachments) {
          if (at.parent_face >= local_face_count(cert.components[at.parent]))
            return "attachment of component " + std::to_string(at.child) +
                   ": parent face " + std::to_string(at.parent_face) + " does not exist";
          if (at.outward_face >= local_face_count(cert.components[at.child]))
            return "attachment of component " + std::to_string(at.child) + ": outward face " +
                   std::to_string(at.outward_face) + " does not exist";
        }
        return "";
      }()))
    return rep;

  // counting checks are independent of each other; run both
  const std::uint64_t circles = cert.circle_count();
  const bool circlesOk =
      record("even-circles", circles % 2 == 0 ? "" : std::to_string(circles) + " circles is odd");
  const std::uint64_t v = cert.total_vertices();
  const bool modOk = record("vertices-mod-6",
                            v % 6 == 0 ? "" : "vertex count " + std::to_string(v) + " is not a multiple of 6");

  const Census census = certificate_census(cert);
  {
    const std::int64_t es = census.euler_sum();
    const bool identity = es >= 2 && static_cast<std::uint64_t>(es) == v + 2;
    record("euler-identity", identity ? ""
                                      : "sum (2-k) a_k = " + std::to_string(es) + ", expected V + 2 = " +
                                            std::to_string(v + 2));
  }
  if (v == 0) {
    const std::uint64_t faces = census.total_faces();
    record("face-parity", faces % 2 == 1 ? "" : "piece count " + std::to_string(faces) +
                                                    " is even with no triple points");
  }

  rep.complete = true;
  if (circlesOk && modOk) {
    rep.census = census;
    rep.n = v / 6;
  }
  return rep;
}

}  // namespace sd
