#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/reductions.hpp>
#include <flatsep/solvers.hpp>

#include <json.hpp>

#include <string>

namespace flatsep {

using Json = nlohmann::ordered_json;

/// Instance file payloads. Exactly one member (per `kind`) is meaningful;
/// `origin` carries the optional provenance block verbatim (null when the
/// file had none).
enum class DocKind { Points, Segments, SubsetSum, BinPacking, Graph };

struct InstanceDocument {
  DocKind kind = DocKind::Points;
  PointFamily points;
  SegmentFamily segments;
  SubsetSumInstance subsetsum;
  BinPackingInstance binpacking;
  Graph graph;
  Json origin;  // null unless the file carried one

  /// True when the provenance block marks the instance as already decided
  /// ("trivially_no": a packing filtered out before encoding).
  bool trivially_no() const;
};

/// "p" for integers, "p/q" otherwise.
std::string rational_text(const Rational& r);

/// Accepts rational strings ("p", "p/q") and JSON integers; rejects
/// floats, which cannot round-trip exactly.
Rational rational_from_json(const Json& j);

Json point_json(const Point& p);
Point point_from_json(const Json& j);

Json flat_json(const Flat& f);
Flat flat_from_json(const Json& j);

Json hyperplane_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

/// Parses and validates one instance document (any kind). Graph vertices
/// are 1-based in files and 0-based in memory. Throws
/// Error(MalformedInstance) on schema violations, unknown kinds, or
/// non-exact numbers.
InstanceDocument parse_instance(const Json& j);
InstanceDocument parse_instance_text(const std::string& text);
InstanceDocument load_instance(const std::string& path);

/// Serializes back to the file schema (graph vertices re-based to 1).
Json instance_json(const InstanceDocument& doc);

/// Canonical text form used for files, stdout, and hashing: 2-space
/// indent plus a trailing newline.
std::string dump_document(const Json& j);

/// FNV-1a 64-bit over the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace flatsep
