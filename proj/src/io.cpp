#include <flatsep/io.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

namespace flatsep {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::MalformedInstance, what);
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const std::string text = j.get<std::string>();
      long long value = std::stoll(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
  }
  bad(std::string(what) + " must be an integer");
}

std::vector<Point> points_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_from_json(p));
  return out;
}

Json points_json(const std::vector<Point>& ps) {
  Json out = Json::array();
  for (const Point& p : ps) out.push_back(point_json(p));
  return out;
}

}  // namespace

bool InstanceDocument::trivially_no() const {
  return origin.is_object() && origin.value("trivially_no", false);
}

std::string rational_text(const Rational& r) {
  return r.str();  // "p" when the denominator is 1, else "p/q"
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      bad("cannot parse \"" + j.get<std::string>() + "\" as a rational");
    }
  }
  if (j.is_number_float())
    bad("floating-point numbers cannot round-trip exactly; "
        "use rational strings like \"1/3\"");
  bad("expected a rational string or integer");
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const Rational& x : p) out.push_back(rational_text(x));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) bad("a point must be an array of rationals");
  Point p;
  for (const Json& x : j) p.push_back(rational_from_json(x));
  return p;
}

Json flat_json(const Flat& f) {
  Json out = Json::object();
  out["base"] = point_json(f.base);
  out["basis"] = points_json(f.basis);
  return out;
}

Flat flat_from_json(const Json& j) {
  if (!j.is_object()) bad("a flat must be an object with base and basis");
  Flat f;
  f.base = point_from_json(field(j, "base"));
  f.basis = points_from_json(field(j, "basis"), "basis");
  return f;
}

Json hyperplane_json(const Hyperplane& h) {
  Json out = Json::object();
  out["normal"] = point_json(h.normal);
  out["offset"] = rational_text(h.offset);
  return out;
}

Hyperplane hyperplane_from_json(const Json& j) {
  if (!j.is_object()) bad("a hyperplane must be an object");
  Hyperplane h;
  h.normal = point_from_json(field(j, "normal"));
  h.offset = rational_from_json(field(j, "offset"));
  return h;
}

InstanceDocument parse_instance(const Json& j) {
  if (!j.is_object()) bad("instance document must be a JSON object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("\"kind\" must be a string");
  const std::string name = kind.get<std::string>();
  InstanceDocument doc;
  if (auto it = j.find("origin"); it != j.end()) doc.origin = *it;

  if (name == "points") {
    doc.kind = DocKind::Points;
    doc.points.dimension =
        static_cast<int>(integer_from_json(field(j, "dimension"), "dimension"));
    const Json& sets = field(j, "sets");
    if (!sets.is_array()) bad("\"sets\" must be an array");
    for (const Json& set : sets)
      doc.points.sets.push_back(points_from_json(set, "set"));
    doc.points.validate();
  } else if (name == "segments") {
    doc.kind = DocKind::Segments;
    doc.segments.dimension =
        static_cast<int>(integer_from_json(field(j, "dimension"), "dimension"));
    const Json& segs = field(j, "segments");
    if (!segs.is_array()) bad("\"segments\" must be an array");
    for (const Json& seg : segs) {
      if (!seg.is_array() || seg.size() != 2)
        bad("each segment must be a pair of points");
      doc.segments.segments.emplace_back(point_from_json(seg[0]),
                                         point_from_json(seg[1]));
    }
    doc.segments.validate();
  } else if (name == "subsetsum") {
    doc.kind = DocKind::SubsetSum;
    const Json& a = field(j, "a");
    if (!a.is_array()) bad("\"a\" must be an array");
    for (const Json& x : a)
      doc.subsetsum.a.push_back(integer_from_json(x, "item"));
    doc.subsetsum.b = integer_from_json(field(j, "b"), "b");
    doc.subsetsum.validate();
  } else if (name == "binpacking") {
    doc.kind = DocKind::BinPacking;
    const Json& w = field(j, "w");
    if (!w.is_array()) bad("\"w\" must be an array");
    for (const Json& x : w)
      doc.binpacking.w.push_back(integer_from_json(x, "weight"));
    doc.binpacking.bins =
        static_cast<int>(integer_from_json(field(j, "bins"), "bins"));
    doc.binpacking.capacity =
        integer_from_json(field(j, "capacity"), "capacity");
    doc.binpacking.validate();
  } else if (name == "graph") {
    doc.kind = DocKind::Graph;
    doc.graph.n = static_cast<int>(integer_from_json(field(j, "n"), "n"));
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) bad("\"edges\" must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2)
        bad("each edge must be a pair of vertices");
      // Files are 1-based; memory is 0-based.
      doc.graph.edges.emplace_back(
          static_cast<int>(integer_from_json(e[0], "vertex")) - 1,
          static_cast<int>(integer_from_json(e[1], "vertex")) - 1);
    }
    doc.graph.validate();
  } else {
    bad("unknown kind \"" + name + "\"");
  }
  return doc;
}

InstanceDocument parse_instance_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

Json instance_json(const InstanceDocument& doc) {
  Json j = Json::object();
  switch (doc.kind) {
    case DocKind::Points: {
      j["kind"] = "points";
      j["dimension"] = doc.points.dimension;
      Json sets = Json::array();
      for (const auto& set : doc.points.sets) sets.push_back(points_json(set));
      j["sets"] = std::move(sets);
      break;
    }
    case DocKind::Segments: {
      j["kind"] = "segments";
      j["dimension"] = doc.segments.dimension;
      Json segs = Json::array();
      for (const auto& [a, b] : doc.segments.segments) {
        Json pair = Json::array();
        pair.push_back(point_json(a));
        pair.push_back(point_json(b));
        segs.push_back(std::move(pair));
      }
      j["segments"] = std::move(segs);
      break;
    }
    case DocKind::SubsetSum: {
      j["kind"] = "subsetsum";
      Json a = Json::array();
      for (long long x : doc.subsetsum.a) a.push_back(std::to_string(x));
      j["a"] = std::move(a);
      j["b"] = std::to_string(doc.subsetsum.b);
      break;
    }
    case DocKind::BinPacking: {
      j["kind"] = "binpacking";
      Json w = Json::array();
      for (long long x : doc.binpacking.w) w.push_back(std::to_string(x));
      j["w"] = std::move(w);
      j["bins"] = doc.binpacking.bins;
      j["capacity"] = std::to_string(doc.binpacking.capacity);
      break;
    }
    case DocKind::Graph: {
      j["kind"] = "graph";
      j["n"] = doc.graph.n;
      Json edges = Json::array();
      for (const auto& [u, v] : doc.graph.edges)
        edges.push_back(Json::array({u + 1, v + 1}));
      j["edges"] = std::move(edges);
      break;
    }
  }
  if (!doc.origin.is_null()) j["origin"] = doc.origin;
  return j;
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int t = 15; t >= 0; --t) {
    out[static_cast<std::size_t>(t)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace flatsep
