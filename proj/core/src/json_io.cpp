#include "sd/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace sd {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "sd-cert/1";

json census_json(const Census& census) { return json(census.to_counts()); }

std::uint64_t require_uint(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned())
    throw Error(errc::parse_error, std::string("certificate: '") + key +
                                       "' must be a non-negative integer");
  return j[key].get<std::uint64_t>();
}

std::vector<Dart> require_dart_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(errc::parse_error, std::string("certificate: '") + key + "' must be an array");
  std::vector<Dart> darts;
  darts.reserve(j[key].size());
  for (const json& v : j[key]) {
    if (!v.is_number_unsigned())
      throw Error(errc::parse_error,
                  std::string("certificate: '") + key + "' entries must be non-negative integers");
    darts.push_back(v.get<Dart>());
  }
  return darts;
}

}  // namespace

std::string census_to_json(const Census& census) { return census_json(census).dump(); }

std::string plan_to_json(const SurgeryPlan& plan) {
  json base{{"kind", base_kind_name(plan.base.kind)}};
  if (plan.base.kind != BaseTemplate::Kind::Circles) base["n"] = plan.base.n;

  json steps = json::array();
  for (const SurgeryStep& step : plan.steps) {
    if (step.kind == SurgeryStep::Kind::F1a)
      steps.push_back({{"kind", "F1a"}, {"m", step.m}});
    else
      steps.push_back({{"kind", "F1b"}});
  }

  json trace = json::array();
  for (const Census& c : plan.trace) trace.push_back(census_json(c));

  const json doc{{"base", base}, {"steps", steps}, {"trace", trace}};
  return doc.dump(2) + "\n";
}

std::string certificate_to_json(const Certificate& cert) {
  json components = json::array();
  for (const Component& comp : cert.components) {
    if (const CombMap* m = std::get_if<CombMap>(&comp)) {
      components.push_back(
          {{"type", "map"}, {"vertices", m->vertex_count}, {"sigma", m->sigma}, {"alpha", m->alpha}});
    } else {
      components.push_back({{"type", "circle"}});
    }
  }

  std::vector<Attachment> sorted = cert.attachments;
  std::sort(sorted.begin(), sorted.end(),
            [](const Attachment& a, const Attachment& b) { return a.child < b.child; });
  json attachments = json::array();
  for (const Attachment& at : sorted) {
    attachments.push_back({{"child", at.child},
                           {"parent", at.parent},
                           {"parent_face", at.parent_face},
                           {"outward_face", at.outward_face}});
  }

  const json doc{{"version", kSchemaVersion},
                 {"root", cert.root},
                 {"components", components},
                 {"attachments", attachments}};
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, std::string("certificate: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(errc::parse_error, "certificate: top level must be an object");
  if (!doc.contains("version") || doc["version"] != kSchemaVersion)
    throw Error(errc::parse_error,
                std::string("certificate: expected version \"") + kSchemaVersion + "\"");

  Certificate cert;
  cert.root = require_uint(doc, "root");

  if (!doc.contains("components") || !doc["components"].is_array())
    throw Error(errc::parse_error, "certificate: 'components' must be an array");
  for (const json& comp : doc["components"]) {
    if (!comp.is_object() || !comp.contains("type") || !comp["type"].is_string())
      throw Error(errc::parse_error, "certificate: component without a 'type'");
    const std::string type = comp["type"].get<std::string>();
    if (type == "circle") {
      cert.components.emplace_back(FreeCircle{});
    } else if (type == "map") {
      CombMap m;
      m.vertex_count = require_uint(comp, "vertices");
      m.sigma = require_dart_array(comp, "sigma");
      m.alpha = require_dart_array(comp, "alpha");
      cert.components.emplace_back(std::move(m));
    } else {
      throw Error(errc::parse_error, "certificate: unknown component type '" + type + "'");
    }
  }

  if (doc.contains("attachments")) {
    if (!doc["attachments"].is_array())
      throw Error(errc::parse_error, "certificate: 'attachments' must be an array");
    for (const json& at : doc["attachments"]) {
      Attachment a;
      a.child = require_uint(at, "child");
      a.parent = require_uint(at, "parent");
      a.parent_face = require_uint(at, "parent_face");
      a.outward_face = require_uint(at, "outward_face");
      cert.attachments.push_back(a);
    }
  }
  return cert;
}

}  // namespace sd
