#include "sd/dot.hpp"

#include <algorithm>

namespace sd {

std::string certificate_to_dot(const Certificate& cert) {
  const VerifyReport rep = verify(cert);
  if (!rep.ok())
    throw Error(errc::bad_certificate, "certificate_to_dot: certificate fails verification");

  std::string out = "graph dissection {\n";
  out += "  // vertices=" + std::to_string(cert.total_vertices()) +
         " edges=" + std::to_string(cert.total_edges()) +
         " circles=" + std::to_string(cert.circle_count()) + " census=" + rep.census->to_text() +
         " n=" + std::to_string(*rep.n) + "\n";

  for (std::size_t i = 0; i < cert.components.size(); ++i) {
    const std::string prefix = "c" + std::to_string(i);
    if (const CombMap* m = std::get_if<CombMap>(&cert.components[i])) {
      out += "  // component " + std::to_string(i) + ": map V=" + std::to_string(m->vertex_count) +
             " E=" + std::to_string(m->edge_count()) + "\n";
      for (std::uint64_t v = 0; v < m->vertex_count; ++v)
        out += "  " + prefix + "_v" + std::to_string(v) + ";\n";
      for (Dart d = 0; d < m->dart_count(); ++d) {
        if (d < m->alpha[d]) {
          out += "  " + prefix + "_v" + std::to_string(d / 4) + " -- " + prefix + "_v" +
                 std::to_string(m->alpha[d] / 4) + ";\n";
        }
      }
      const std::vector<Face> faces = trace_faces(*m);
      for (std::size_t f = 0; f < faces.size(); ++f) {
        out += "  // component " + std::to_string(i) + " face " + std::to_string(f) + ": darts";
        for (const Dart d : faces[f]) out += " " + std::to_string(d);
        out += "\n";
      }
    } else {
      out += "  // component " + std::to_string(i) + ": circle\n";
      const std::string label = "circle " + std::to_string(i);
      out += "  " + prefix + "_a [label=\"" + label + "\"];\n";
      out += "  " + prefix + "_b [label=\"" + label + "\"];\n";
      out += "  " + prefix + "_a -- " + prefix + "_b;\n";
      out += "  " + prefix + "_a -- " + prefix + "_b;\n";
    }
  }

  std::vector<Attachment> sorted = cert.attachments;
  std::sort(sorted.begin(), sorted.end(),
            [](const Attachment& a, const Attachment& b) { return a.child < b.child; });
  for (const Attachment& at : sorted) {
    out += "  // component " + std::to_string(at.child) + " (outward face " +
           std::to_string(at.outward_face) + ") sits in face " + std::to_string(at.parent_face) +
           " of component " + std::to_string(at.parent) + "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sd
