// SpaceDocument JSON ingestion and serialization.
//
// Document schema (all other keys rejected):
//   points          array of unique non-empty strings
//   geometry        object with "kind": "euclidean" | "metric-matrix" |
//                   "g-tensor" and the matching payload:
//                     euclidean      "coords": object label -> number array,
//                                    one entry per declared point
//                     metric-matrix  "matrix": n x n numbers
//                     g-tensor       "tensor": n x n x n numbers
//   g_construction  "sum" | "max"; required for euclidean / metric-matrix
//                   geometry, forbidden for g-tensor
//   map             optional object label -> label, total over the points
//
// Ingestion always ends with a fully validated G-space (metric axioms for
// metric geometry, the full P1-P5 scan for raw tensors) unless validation is
// explicitly deferred, which only the axiom-report path uses.
#pragma once

#include <json.hpp>

#include "gfix/core.hpp"
#include "gfix/gmetric.hpp"

namespace gfix {

enum class GeometryKind { Euclidean, MetricMatrix, GTensor };
enum class Construction { Sum, Max };

const char* geometry_kind_name(GeometryKind kind);
const char* construction_name(Construction c);

struct SpaceDocument {
  std::vector<std::string> points;
  GeometryKind geometry = GeometryKind::GTensor;
  std::vector<std::vector<double>> coords;  // euclidean, aligned with points
  std::vector<double> matrix;               // metric-matrix, row-major n*n
  std::vector<double> tensor;               // g-tensor, row-major n^3
  std::optional<Construction> g_construction;
  // Image labels aligned with `points`; empty optional when no map given.
  std::optional<std::vector<std::string>> map_targets;
};

SpaceDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const SpaceDocument& doc);

// Parses the file at `path`; throws SchemaError on malformed JSON.
SpaceDocument load_document(const std::string& path);

// The metric described by euclidean or metric-matrix geometry, with metric
// axioms verified. Throws for g-tensor documents.
FiniteMetricSpace metric_from_document(const SpaceDocument& doc,
                                       double eps = kDefaultEpsilon,
                                       Exec exec = Exec::Parallel);

struct Ingested {
  FiniteGSpace space;
  std::optional<SelfMap> map;
  SpaceDocument document;
};

// `validate` = false skips the final axiom scan for raw tensors; the space
// then stays unvalidated and only check-axioms style reporting may use it.
Ingested ingest_document(const SpaceDocument& doc,
                         double eps = kDefaultEpsilon,
                         Exec exec = Exec::Parallel, bool validate = true);
Ingested ingest(const std::string& path, double eps = kDefaultEpsilon,
                Exec exec = Exec::Parallel, bool validate = true);

// Derived documents, preserving the map when present.
SpaceDocument tensor_document(const FiniteGSpace& space,
                              std::optional<std::vector<std::string>> map_targets);
SpaceDocument matrix_document(const FiniteMetricSpace& m,
                              Construction g_construction,
                              std::optional<std::vector<std::string>> map_targets);

}  // namespace gfix
