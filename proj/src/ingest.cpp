#include "gfix/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace gfix {

using nlohmann::json;

const char* geometry_kind_name(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Euclidean: return "euclidean";
    case GeometryKind::MetricMatrix: return "metric-matrix";
    case GeometryKind::GTensor: return "g-tensor";
  }
  return "?";
}

const char* construction_name(Construction c) {
  return c == Construction::Sum ? "sum" : "max";
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const char* where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw SchemaError(std::string("unknown key '") + key + "' in " + where);
  }
}

double require_number(const json& j, const char* where) {
  if (!j.is_number())
    throw SchemaError(std::string("expected a number in ") + where);
  return j.get<double>();
}

std::vector<double> parse_square(const json& rows, std::size_t n,
                                 const char* where) {
  if (!rows.is_array() || rows.size() != n)
    throw SchemaError(std::string(where) + " must have one row per point");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw SchemaError(std::string(where) + " row length must equal the point count");
    for (const auto& v : row) flat.push_back(require_number(v, where));
  }
  return flat;
}

}  // namespace

SpaceDocument document_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("document root must be an object");
  reject_unknown_keys(j, {"points", "geometry", "g_construction", "map"},
                      "document");

  SpaceDocument doc;
  if (!j.contains("points") || !j["points"].is_array())
    throw SchemaError("document requires a 'points' array");
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw SchemaError("point labels must be strings");
    doc.points.push_back(p.get<std::string>());
  }
  const std::size_t n = doc.points.size();
  if (n == 0) throw SchemaError("point list is empty");
  {
    std::set<std::string> unique(doc.points.begin(), doc.points.end());
    if (unique.size() != n) throw SchemaError("duplicate point label");
  }

  if (!j.contains("geometry") || !j["geometry"].is_object())
    throw SchemaError("document requires a 'geometry' object");
  const json& geo = j["geometry"];
  if (!geo.contains("kind") || !geo["kind"].is_string())
    throw SchemaError("geometry requires a 'kind' string");
  const std::string kind = geo["kind"].get<std::string>();

  if (kind == "euclidean") {
    doc.geometry = GeometryKind::Euclidean;
    reject_unknown_keys(geo, {"kind", "coords"}, "geometry");
    if (!geo.contains("coords") || !geo["coords"].is_object())
      throw SchemaError("euclidean geometry requires a 'coords' object");
    const json& coords = geo["coords"];
    doc.coords.resize(n);
    std::set<std::string> seen;
    for (const auto& [label, row] : coords.items()) {
      const auto idx = std::find(doc.points.begin(), doc.points.end(), label);
      if (idx == doc.points.end())
        throw SchemaError("coords for undeclared point '" + label + "'");
      if (!row.is_array() || row.empty())
        throw SchemaError("coordinates of '" + label + "' must be a non-empty array");
      std::vector<double> vec;
      for (const auto& v : row) vec.push_back(require_number(v, "coords"));
      doc.coords[idx - doc.points.begin()] = std::move(vec);
      seen.insert(label);
    }
    if (seen.size() != n)
      throw SchemaError("coords must cover every declared point");
  } else if (kind == "metric-matrix") {
    doc.geometry = GeometryKind::MetricMatrix;
    reject_unknown_keys(geo, {"kind", "matrix"}, "geometry");
    if (!geo.contains("matrix"))
      throw SchemaError("metric-matrix geometry requires a 'matrix'");
    doc.matrix = parse_square(geo["matrix"], n, "matrix");
  } else if (kind == "g-tensor") {
    doc.geometry = GeometryKind::GTensor;
    reject_unknown_keys(geo, {"kind", "tensor"}, "geometry");
    if (!geo.contains("tensor") || !geo["tensor"].is_array() ||
        geo["tensor"].size() != n)
      throw SchemaError("g-tensor geometry requires an n x n x n 'tensor'");
    doc.tensor.reserve(n * n * n);
    for (const auto& slice : geo["tensor"]) {
      auto flat = parse_square(slice, n, "tensor slice");
      doc.tensor.insert(doc.tensor.end(), flat.begin(), flat.end());
    }
  } else {
    throw SchemaError("unknown geometry kind '" + kind + "'");
  }

  if (j.contains("g_construction")) {
    if (doc.geometry == GeometryKind::GTensor)
      throw SchemaError("g_construction is forbidden for g-tensor geometry");
    const std::string c = j["g_construction"].is_string()
                              ? j["g_construction"].get<std::string>()
                              : std::string();
    if (c == "sum")
      doc.g_construction = Construction::Sum;
    else if (c == "max")
      doc.g_construction = Construction::Max;
    else
      throw SchemaError("g_construction must be \"sum\" or \"max\"");
  } else if (doc.geometry != GeometryKind::GTensor) {
    throw SchemaError("g_construction is required for metric geometry");
  }

  if (j.contains("map")) {
    if (!j["map"].is_object()) throw SchemaError("'map' must be an object");
    std::vector<std::string> targets(n);
    std::set<std::string> covered;
    for (const auto& [from, to] : j["map"].items()) {
      const auto idx = std::find(doc.points.begin(), doc.points.end(), from);
      if (idx == doc.points.end())
        throw SchemaError("map key '" + from + "' is not a declared point");
      if (!to.is_string())
        throw SchemaError("map targets must be strings");
      const std::string target = to.get<std::string>();
      if (std::find(doc.points.begin(), doc.points.end(), target) ==
          doc.points.end())
        throw SchemaError("map target '" + target + "' is not a declared point");
      targets[idx - doc.points.begin()] = target;
      covered.insert(from);
    }
    if (covered.size() != n)
      throw SchemaError("map is not total over the declared points");
    doc.map_targets = std::move(targets);
  }

  return doc;
}

json document_to_json(const SpaceDocument& doc) {
  json j;
  j["points"] = doc.points;
  const std::size_t n = doc.points.size();
  json geo;
  geo["kind"] = geometry_kind_name(doc.geometry);
  switch (doc.geometry) {
    case GeometryKind::Euclidean: {
      json coords = json::object();
      for (std::size_t i = 0; i < n; ++i) coords[doc.points[i]] = doc.coords[i];
      geo["coords"] = std::move(coords);
      break;
    }
    case GeometryKind::MetricMatrix: {
      json rows = json::array();
      for (std::size_t x = 0; x < n; ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < n; ++y) row.push_back(doc.matrix[x * n + y]);
        rows.push_back(std::move(row));
      }
      geo["matrix"] = std::move(rows);
      break;
    }
    case GeometryKind::GTensor: {
      json slices = json::array();
      for (std::size_t x = 0; x < n; ++x) {
        json rows = json::array();
        for (std::size_t y = 0; y < n; ++y) {
          json row = json::array();
          for (std::size_t z = 0; z < n; ++z)
            row.push_back(doc.tensor[(x * n + y) * n + z]);
          rows.push_back(std::move(row));
        }
        slices.push_back(std::move(rows));
      }
      geo["tensor"] = std::move(slices);
      break;
    }
  }
  j["geometry"] = std::move(geo);
  if (doc.g_construction)
    j["g_construction"] = construction_name(*doc.g_construction);
  if (doc.map_targets) {
    json m = json::object();
    for (std::size_t i = 0; i < n; ++i) m[doc.points[i]] = (*doc.map_targets)[i];
    j["map"] = std::move(m);
  }
  return j;
}

SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpaceError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("parse error in '") + path + "': " + e.what());
  }
  return document_from_json(j);
}

FiniteMetricSpace metric_from_document(const SpaceDocument& doc, double eps,
                                       Exec exec) {
  switch (doc.geometry) {
    case GeometryKind::Euclidean: {
      std::vector<std::pair<std::string, std::vector<double>>> pts;
      pts.reserve(doc.points.size());
      for (std::size_t i = 0; i < doc.points.size(); ++i)
        pts.emplace_back(doc.points[i], doc.coords[i]);
      return euclidean_metric(pts, eps);
    }
    case GeometryKind::MetricMatrix: {
      FiniteMetricSpace m(doc.points, doc.matrix);
      for (const auto& verdict : verify_metric_axioms(m, eps, exec)) {
        if (verdict.holds) continue;
        std::string what = std::string("metric axiom '") +
                           metric_axiom_name(verdict.axiom) + "' violated at (";
        for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
          if (i) what += ", ";
          what += m.label(verdict.witness[i]);
        }
        what += ")";
        throw MetricViolationError(what);
      }
      return m;
    }
    case GeometryKind::GTensor:
      break;
  }
  throw SchemaError("g-tensor geometry does not define a metric");
}

namespace {

FiniteGSpace space_from_document(const SpaceDocument& doc, double eps,
                                 Exec exec, bool validate) {
  if (doc.geometry == GeometryKind::GTensor) {
    auto raw = FiniteGSpace::unvalidated(doc.points, doc.tensor,
                                         Provenance::RawTensor, eps);
    return validate ? validate_space(std::move(raw), eps, exec)
                    : std::move(raw);
  }
  const auto m = metric_from_document(doc, eps, exec);
  return *doc.g_construction == Construction::Sum
             ? g_from_metric_sum(m, eps, exec)
             : g_from_metric_max(m, eps, exec);
}

}  // namespace

Ingested ingest_document(const SpaceDocument& doc, double eps, Exec exec,
                         bool validate) {
  Ingested out{space_from_document(doc, eps, exec, validate), std::nullopt, doc};
  if (doc.map_targets) {
    std::vector<int> image;
    image.reserve(doc.points.size());
    for (const auto& target : *doc.map_targets)
      image.push_back(*out.space.find(target));
    out.map = SelfMap(std::move(image), out.space.size());
  }
  return out;
}

Ingested ingest(const std::string& path, double eps, Exec exec, bool validate) {
  return ingest_document(load_document(path), eps, exec, validate);
}

SpaceDocument tensor_document(
    const FiniteGSpace& space,
    std::optional<std::vector<std::string>> map_targets) {
  SpaceDocument doc;
  doc.points = space.labels();
  doc.geometry = GeometryKind::GTensor;
  doc.tensor = space.table();
  doc.map_targets = std::move(map_targets);
  return doc;
}

SpaceDocument matrix_document(
    const FiniteMetricSpace& m, Construction g_construction,
    std::optional<std::vector<std::string>> map_targets) {
  SpaceDocument doc;
  doc.points = m.labels();
  doc.geometry = GeometryKind::MetricMatrix;
  doc.matrix = m.table();
  doc.g_construction = g_construction;
  doc.map_targets = std::move(map_targets);
  return doc;
}

}  // namespace gfix
