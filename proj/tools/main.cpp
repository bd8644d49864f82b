#include <flatsep/approx.hpp>
#include <flatsep/io.hpp>
#include <flatsep/reductions.hpp>
#include <flatsep/solvers.hpp>
#include <flatsep/wellsep.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace flatsep;

namespace {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::FlatMissesSet: return "FlatMissesSet";
    case ErrorCode::MalformedInstance: return "MalformedInstance";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SetTooLarge: return "SetTooLarge";
    case ErrorCode::NoOriginSet: return "NoOriginSet";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

struct CommonFlags {
  std::string file;
  std::string expect;
  std::string output;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags* flags, bool with_threads = true) {
  cmd->add_option("file", flags->file, "instance file (JSON)")->required();
  cmd->add_option("--expect", flags->expect,
                  "turn the answer into exit status for CI")
      ->check(CLI::IsMember({"yes", "no"}));
  cmd->add_option("--output", flags->output,
                  "write the result document here instead of stdout");
  if (with_threads)
    cmd->add_option("--threads", flags->threads, "worker cap (default 1)")
        ->check(CLI::Range(1, 64));
}

Json stats_json(const Stats& s) {
  Json j = Json::object();
  j["candidates"] = s.candidates;
  j["lps"] = s.lps;
  return j;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::MalformedInstance, "cannot write \"" + path + "\"");
  out << text;
}

/// Emits the result document (file or stdout), then the wall-time trailer
/// on stdout — outside the document, so byte-identical reruns differ only
/// there. Returns the process exit code honoring --expect.
int finish(const Json& doc, const CommonFlags& flags, double wallMs) {
  const std::string text = dump_document(doc);
  if (flags.output.empty())
    std::cout << text;
  else
    write_text(flags.output, text);
  std::ostringstream trailer;
  trailer.setf(std::ios::fixed);
  trailer.precision(3);
  trailer << "wall_ms " << wallMs << "\n";
  std::cout << trailer.str();
  if (!flags.expect.empty() && doc.contains("answer") &&
      doc["answer"].get<std::string>() != flags.expect) {
    std::cerr << "expected answer \"" << flags.expect << "\", got \""
              << doc["answer"].get<std::string>() << "\"\n";
    return 1;
  }
  return 0;
}

Json one_based(const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(x + 1);
  return out;
}

// ---------------------------------------------------------------------------
// transversal

int run_transversal(const CommonFlags& flags, std::optional<int> target,
                    bool hyperplane) {
  InstanceDocument doc = load_instance(flags.file);
  Timer timer;
  Stats stats;
  Json out = Json::object();
  out["command"] = "transversal";
  if (doc.kind == DocKind::Points) {
    if (target.has_value() == hyperplane)
      throw Error(ErrorCode::BadTarget,
                  "pass exactly one of --target M or --hyperplane");
    const int m = hyperplane ? doc.points.dimension - 1 : *target;
    out["target"] = m;
    auto cert = finite_flat_transversal(doc.points, m, &stats);
    out["answer"] = cert.has_value() ? "yes" : "no";
    if (cert.has_value()) {
      out["chosen"] = one_based(cert->chosen);
      out["flat"] = flat_json(cert->flat);
    }
  } else if (doc.kind == DocKind::Segments) {
    if (target.has_value())
      throw Error(ErrorCode::BadTarget,
                  "segment instances support only hyperplane transversals; "
                  "drop --target");
    out["target"] = doc.segments.dimension - 1;
    auto h = segment_hyperplane_transversal(doc.segments, &stats);
    out["answer"] = h.has_value() ? "yes" : "no";
    if (h.has_value()) out["hyperplane"] = hyperplane_json(*h);
  } else {
    throw Error(ErrorCode::MalformedInstance,
                "transversal needs a points or segments instance");
  }
  out["statistics"] = stats_json(stats);
  return finish(out, flags, timer.ms());
}

// ---------------------------------------------------------------------------
// wellsep

int run_wellsep(const CommonFlags& flags) {
  InstanceDocument doc = load_instance(flags.file);
  if (doc.kind != DocKind::Points)
    throw Error(ErrorCode::MalformedInstance,
                "wellsep needs a points instance");
  Timer timer;
  Stats stats;
  WellSepResult res = is_well_separated(doc.points, flags.threads, &stats);
  Json out = Json::object();
  out["command"] = "wellsep";
  out["answer"] = res.well_separated ? "yes" : "no";
  if (!res.well_separated) {
    Json witness = Json::object();
    witness["I"] = one_based(res.witness.I);
    witness["point"] = point_json(res.witness.point);
    Json weights = Json::object();
    weights["I"] = point_json(res.witness.weightsI);
    weights["complement"] = point_json(res.witness.weightsComplement);
    witness["weights"] = std::move(weights);
    out["witness"] = std::move(witness);
    out["flat"] = flat_json(res.certificate);
  }
  out["statistics"] = stats_json(stats);
  return finish(out, flags, timer.ms());
}

// ---------------------------------------------------------------------------
// maxhyp

std::vector<Point> flattened(const PointFamily& fam) {
  std::vector<Point> all;
  for (const auto& set : fam.sets) all.insert(all.end(), set.begin(), set.end());
  return all;
}

int run_maxhyp(const CommonFlags& flags, const std::string& mode) {
  InstanceDocument doc = load_instance(flags.file);
  if (doc.kind != DocKind::Points)
    throw Error(ErrorCode::MalformedInstance, "maxhyp needs a points instance");
  Timer timer;
  Stats stats;
  std::vector<Point> all = flattened(doc.points);
  Json out = Json::object();
  out["command"] = "maxhyp";
  out["mode"] = mode;
  out["answer"] = "yes";
  if (mode == "exact") {
    MaxHypReport rep =
        maxhyp_exact(all, doc.points.dimension, flags.threads, &stats);
    out["hyperplane"] = hyperplane_json(rep.hyperplane);
    out["count"] = rep.count;
  } else {
    ApproxReport rep =
        approx_maxhyp(all, doc.points.dimension, flags.threads, &stats);
    out["hyperplane"] = hyperplane_json(rep.hyperplane);
    out["count"] = rep.count;
    switch (rep.mode) {
      case ApproxCase::AllPoints: out["case"] = "all-points"; break;
      case ApproxCase::AnyDPoints: out["case"] = "any-d-points"; break;
      case ApproxCase::Grouped: out["case"] = "grouped"; break;
    }
    out["f_k"] = rep.fk;
    if (rep.mode == ApproxCase::Grouped) out["group_size"] = rep.groupSize;
  }
  out["statistics"] = stats_json(stats);
  return finish(out, flags, timer.ms());
}

// ---------------------------------------------------------------------------
// reduce

void require_kind(const InstanceDocument& doc, DocKind want,
                  const char* reduction, const char* kind_name) {
  if (doc.kind != want)
    throw Error(ErrorCode::MalformedInstance,
                std::string("reduce ") + reduction + " needs a " + kind_name +
                    " instance");
}

int run_reduce(const std::string& kind, const std::string& file,
               const std::string& mode, std::optional<int> clique_size,
               const std::string& output) {
  InstanceDocument src = load_instance(file);
  if (src.trivially_no())
    throw Error(ErrorCode::PreconditionViolated,
                "source instance is marked trivially no; nothing to encode");
  const std::string hash = fnv1a64_hex(dump_document(instance_json(src)));
  Json origin = Json::object();
  origin["reduction"] = kind;
  origin["source_hash"] = hash;

  InstanceDocument out;
  std::string summary;
  auto points_summary = [](const PointFamily& fam, int target) {
    std::ostringstream s;
    s << fam.sets.size() << " sets in dimension " << fam.dimension
      << ", target " << target;
    return s.str();
  };

  if (kind == "subsetsum") {
    require_kind(src, DocKind::SubsetSum, "subsetsum", "subsetsum");
    out.kind = DocKind::Points;
    out.points = subsetsum_to_hyptrans(src.subsetsum);
    origin["target"] = out.points.dimension - 1;
    summary = points_summary(out.points, out.points.dimension - 1);
  } else if (kind == "binpacking") {
    require_kind(src, DocKind::BinPacking, "binpacking", "binpacking");
    out.kind = DocKind::BinPacking;
    auto equal = binpacking_to_equal(src.binpacking);
    if (equal.has_value()) {
      out.binpacking = *equal;
    } else {
      out.binpacking = src.binpacking;
      origin["trivially_no"] = true;
    }
    std::ostringstream s;
    s << out.binpacking.w.size() << " items, " << out.binpacking.bins
      << " bins, capacity " << out.binpacking.capacity;
    if (!equal.has_value()) s << ", trivially no";
    summary = s.str();
  } else if (kind == "equalbin") {
    require_kind(src, DocKind::BinPacking, "equalbin", "binpacking");
    out.kind = DocKind::Points;
    auto [fam, target] = equalbin_to_flattrans(src.binpacking);
    out.points = std::move(fam);
    origin["target"] = target;
    summary = points_summary(out.points, target);
  } else if (kind == "flattrans-lift") {
    require_kind(src, DocKind::Points, "flattrans-lift", "points");
    // The lift treats an m-set family as the (m-2)-flat question; refuse
    // a source whose recorded target asks something else.
    if (!src.origin.is_null() && src.origin.contains("target") &&
        src.origin["target"].get<long long>() !=
            static_cast<long long>(src.points.sets.size()) - 2)
      throw Error(ErrorCode::PreconditionViolated,
                  "source records target " +
                      src.origin["target"].dump() + " but its " +
                      std::to_string(src.points.sets.size()) +
                      " sets encode the (sets-2)-flat question");
    const LiftMode lift =
        mode == "paper" ? LiftMode::Paper : LiftMode::Repaired;
    out.kind = DocKind::Points;
    out.points = flattrans_to_hyptrans(src.points, lift);
    origin["mode"] = mode;
    origin["target"] = out.points.dimension - 1;
    if (lift == LiftMode::Paper &&
        out.points.sets.size() != src.points.sets.size())
      origin["warning"] =
          "paper mode is not answer-preserving: its three or more padding "
          "singletons are collinear, so the lifted instance is always a "
          "yes-instance";
    summary = points_summary(out.points, out.points.dimension - 1);
  } else if (kind == "segments") {
    require_kind(src, DocKind::Points, "segments", "points");
    out.kind = DocKind::Segments;
    out.segments = twopoint_to_segments(src.points);
    std::ostringstream s;
    s << out.segments.segments.size() << " segments in dimension "
      << out.segments.dimension;
    summary = s.str();
  } else if (kind == "clique") {
    require_kind(src, DocKind::Graph, "clique", "graph");
    if (!clique_size.has_value())
      throw Error(ErrorCode::BadK,
                  "reduce clique needs --target K (the clique size)");
    out.kind = DocKind::Points;
    auto [fam, target] = clique_to_flattrans(src.graph, *clique_size);
    out.points = std::move(fam);
    origin["clique_size"] = *clique_size;
    origin["target"] = target;
    summary = points_summary(out.points, target);
  } else {
    throw Error(ErrorCode::MalformedInstance,
                "unknown reduction \"" + kind + "\"");
  }

  out.origin = std::move(origin);
  const std::string text = dump_document(instance_json(out));
  if (output.empty()) {
    std::cout << text;
    std::cerr << summary << "\n";
  } else {
    write_text(output, text);
    std::cout << summary << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Clauses {
  bool all_ok = true;
  void report(const std::string& name, bool ok, const std::string& why = "") {
    if (ok)
      std::cout << name << ": verified\n";
    else
      std::cout << name << ": FAILED" << (why.empty() ? "" : " (" + why + ")")
                << "\n";
    all_ok = all_ok && ok;
  }
  int close() const {
    std::cout << (all_ok ? "verified" : "failed") << "\n";
    return all_ok ? 0 : 1;
  }
};

/// Rebuilds the canonical flat actually spanned by a certificate's base
/// and basis rows, so tampered bases cannot fake dimensions.
Flat respan(const Flat& f) {
  std::vector<Point> span{f.base};
  for (const Vec& b : f.basis) span.push_back(add(f.base, b));
  return flat_from_points(span);
}

int verify_transversal(const InstanceDocument& inst, const Json& cert) {
  Clauses clauses;
  if (cert.at("answer").get<std::string>() == "no") {
    clauses.report("answer", true);  // a "no" makes no checkable claims
    return clauses.close();
  }
  if (inst.kind == DocKind::Points) {
    const int target = static_cast<int>(cert.at("target").get<long long>());
    const Flat flat = respan(flat_from_json(cert.at("flat")));
    clauses.report("dimension", flat.dim() <= target,
                   "flat dimension exceeds the target");
    bool members = cert.at("chosen").size() == inst.points.sets.size();
    std::string why = members ? "" : "one chosen index per set required";
    if (members)
      for (std::size_t i = 0; i < inst.points.sets.size(); ++i) {
        const long long pick = cert.at("chosen")[i].get<long long>();
        if (pick < 1 ||
            pick > static_cast<long long>(inst.points.sets[i].size())) {
          members = false;
          why = "chosen index out of range in set " + std::to_string(i + 1);
          break;
        }
        const Point& p = inst.points.sets[i][static_cast<std::size_t>(pick - 1)];
        if (!flat_coordinates(flat, p).has_value()) {
          members = false;
          why = "chosen point of set " + std::to_string(i + 1) +
                " is off the flat";
          break;
        }
      }
    clauses.report("membership", members, why);
  } else if (inst.kind == DocKind::Segments) {
    const Hyperplane h = hyperplane_from_json(cert.at("hyperplane"));
    clauses.report("normal",
                   static_cast<int>(h.normal.size()) ==
                           inst.segments.dimension &&
                       !is_zero(h.normal),
                   "normal must be a nonzero vector of the right dimension");
    bool meets = true;
    std::string why;
    for (std::size_t s = 0; s < inst.segments.segments.size(); ++s) {
      const auto& [a, b] = inst.segments.segments[s];
      const Rational va = dot(h.normal, a) - h.offset;
      const Rational vb = dot(h.normal, b) - h.offset;
      if (va * vb > 0) {
        meets = false;
        why = "segment " + std::to_string(s + 1) + " is missed";
        break;
      }
    }
    clauses.report("membership", meets, why);
  } else {
    throw Error(ErrorCode::MalformedInstance,
                "transversal certificates verify against points or segments");
  }
  return clauses.close();
}

int verify_wellsep(const InstanceDocument& inst, const Json& cert) {
  if (inst.kind != DocKind::Points)
    throw Error(ErrorCode::MalformedInstance,
                "wellsep certificates verify against points instances");
  Clauses clauses;
  if (cert.at("answer").get<std::string>() == "yes") {
    clauses.report("answer", true);  // separation claims no certificate
    return clauses.close();
  }
  const PointFamily& fam = inst.points;
  const int k = static_cast<int>(fam.sets.size());

  // Split clause: a proper, strictly ascending, in-range part I.
  std::vector<int> I;
  for (const Json& x : cert.at("witness").at("I"))
    I.push_back(static_cast<int>(x.get<long long>()) - 1);
  bool proper = !I.empty() && static_cast<int>(I.size()) < k;
  for (std::size_t t = 0; proper && t < I.size(); ++t) {
    if (I[t] < 0 || I[t] >= k) proper = false;
    if (t > 0 && I[t] <= I[t - 1]) proper = false;
  }
  clauses.report("split", proper, "I must be a proper ascending part");

  // Convexity clause: per-side weights are nonnegative, sum to one, and
  // reproduce the common point over the side's points in set order.
  const Point point = point_from_json(cert.at("witness").at("point"));
  bool convex = proper && static_cast<int>(point.size()) == fam.dimension;
  std::string why = convex ? "" : "point has the wrong dimension";
  if (convex) {
    std::vector<char> inI(static_cast<std::size_t>(k), 0);
    for (int i : I) inI[static_cast<std::size_t>(i)] = 1;
    for (int side = 0; side < 2 && convex; ++side) {
      const char* key = side == 0 ? "I" : "complement";
      std::vector<Rational> weights;
      for (const Json& x : cert.at("witness").at("weights").at(key))
        weights.push_back(rational_from_json(x));
      std::vector<Point> sidePoints;
      for (int i = 0; i < k; ++i)
        if (inI[static_cast<std::size_t>(i)] == (side == 0 ? 1 : 0))
          for (const Point& p : fam.sets[static_cast<std::size_t>(i)])
            sidePoints.push_back(p);
      if (weights.size() != sidePoints.size()) {
        convex = false;
        why = std::string("side ") + key + " has the wrong weight count";
        break;
      }
      Rational total = 0;
      Point combo(static_cast<std::size_t>(fam.dimension), Rational(0));
      for (std::size_t t = 0; t < weights.size(); ++t) {
        if (weights[t] < 0) {
          convex = false;
          why = std::string("negative weight on side ") + key;
          break;
        }
        total += weights[t];
        combo = add(combo, scale(sidePoints[t], weights[t]));
      }
      if (convex && total != 1) {
        convex = false;
        why = std::string("weights on side ") + key + " do not sum to 1";
      }
      if (convex && combo != point) {
        convex = false;
        why = std::string("side ") + key + " does not reproduce the point";
      }
    }
  }
  clauses.report("convexity", convex, why);

  // Dimension and hull clauses on the flat actually spanned.
  const Flat flat = respan(flat_from_json(cert.at("flat")));
  clauses.report("dimension", flat.dim() <= k - 2,
                 "flat dimension must be at most k-2");
  bool hulls = true;
  std::string missed;
  for (int i = 0; i < k; ++i)
    if (!flat_meets_hull(flat, fam.sets[static_cast<std::size_t>(i)])
             .has_value()) {
      hulls = false;
      missed = "hull of set " + std::to_string(i + 1) + " is missed";
      break;
    }
  clauses.report("hulls", hulls, missed);
  return clauses.close();
}

int verify_maxhyp(const InstanceDocument& inst, const Json& cert) {
  if (inst.kind != DocKind::Points)
    throw Error(ErrorCode::MalformedInstance,
                "maxhyp certificates verify against points instances");
  Clauses clauses;
  const Hyperplane h = hyperplane_from_json(cert.at("hyperplane"));
  clauses.report(
      "normal",
      static_cast<int>(h.normal.size()) == inst.points.dimension &&
          !is_zero(h.normal),
      "normal must be a nonzero vector of the right dimension");
  long long count = 0;
  for (const Point& p : flattened(inst.points))
    if (dot(h.normal, p) == h.offset) ++count;
  clauses.report("count", count == cert.at("count").get<long long>(),
                 "hyperplane carries " + std::to_string(count) +
                     " points, certificate claims " +
                     cert.at("count").dump());
  return clauses.close();
}

int verify_oracle(const InstanceDocument& inst, const Json& cert) {
  Clauses clauses;
  if (cert.at("answer").get<std::string>() == "no") {
    clauses.report("answer", true);  // a "no" makes no checkable claims
    return clauses.close();
  }
  if (inst.kind == DocKind::SubsetSum) {
    Rational sum = 0;  // exact even if the item values nearly overflow
    bool ok = true;
    std::string why;
    long long last = 0;
    for (const Json& x : cert.at("subset")) {
      const long long i = x.get<long long>();
      if (i < 1 || i > static_cast<long long>(inst.subsetsum.a.size()) ||
          (last != 0 && i <= last)) {
        ok = false;
        why = "subset indices must be ascending and in range";
        break;
      }
      sum += inst.subsetsum.a[static_cast<std::size_t>(i - 1)];
      last = i;
    }
    if (ok && sum != Rational(inst.subsetsum.b)) {
      ok = false;
      why = "subset sums to " + to_string(sum) + ", not the target";
    }
    clauses.report("witness", ok, why);
  } else if (inst.kind == DocKind::BinPacking) {
    const auto& bp = inst.binpacking;
    bool ok = cert.at("assignment").size() == bp.w.size();
    std::string why = ok ? "" : "one bin per item required";
    if (ok) {
      std::vector<Rational> fill(static_cast<std::size_t>(bp.bins),
                                 Rational(0));
      for (std::size_t t = 0; t < bp.w.size(); ++t) {
        const long long bin = cert.at("assignment")[t].get<long long>();
        if (bin < 1 || bin > bp.bins) {
          ok = false;
          why = "bin index out of range";
          break;
        }
        fill[static_cast<std::size_t>(bin - 1)] += bp.w[t];
      }
      for (std::size_t b = 0; ok && b < fill.size(); ++b)
        if (fill[b] != Rational(bp.capacity)) {
          ok = false;
          why = "bin " + std::to_string(b + 1) + " is not filled exactly";
        }
    }
    clauses.report("witness", ok, why);
  } else if (inst.kind == DocKind::Graph) {
    std::vector<int> picked;
    for (const Json& x : cert.at("clique"))
      picked.push_back(static_cast<int>(x.get<long long>()) - 1);
    bool ok = true;
    std::string why;
    for (std::size_t t = 0; ok && t < picked.size(); ++t)
      if (picked[t] < 0 || picked[t] >= inst.graph.n ||
          (t > 0 && picked[t] <= picked[t - 1])) {
        ok = false;
        why = "vertices must be ascending and in range";
      }
    std::vector<std::pair<int, int>> edges = inst.graph.edges;
    std::sort(edges.begin(), edges.end());
    for (std::size_t s = 0; ok && s < picked.size(); ++s)
      for (std::size_t t = s + 1; ok && t < picked.size(); ++t)
        if (!std::binary_search(
                edges.begin(), edges.end(),
                std::make_pair(std::min(picked[s], picked[t]),
                               std::max(picked[s], picked[t])))) {
          ok = false;
          why = "vertices " + std::to_string(picked[s] + 1) + " and " +
                std::to_string(picked[t] + 1) + " are not adjacent";
        }
    clauses.report("witness", ok, why);
  } else {
    throw Error(ErrorCode::MalformedInstance,
                "oracle certificates verify against subsetsum, binpacking, "
                "or graph instances");
  }
  return clauses.close();
}

int run_verify(const std::string& instance_path, const std::string& cert_path) {
  InstanceDocument inst = load_instance(instance_path);
  std::ifstream in(cert_path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::MalformedInstance,
                "cannot open \"" + cert_path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Tolerate a captured stdout stream: the wall-time trailer is emitted
  // after the document, so a redirected run ends with one "wall_ms X" line.
  if (const auto nl = text.find_last_of('\n', text.size() - 2);
      !text.empty() && nl != std::string::npos &&
      text.compare(nl + 1, 8, "wall_ms ") == 0)
    text.erase(nl + 1);
  Json cert;
  try {
    cert = Json::parse(text);
    const std::string command = cert.at("command").get<std::string>();
    if (command == "transversal") return verify_transversal(inst, cert);
    if (command == "wellsep") return verify_wellsep(inst, cert);
    if (command == "maxhyp") return verify_maxhyp(inst, cert);
    if (command == "oracle") return verify_oracle(inst, cert);
    throw Error(ErrorCode::MalformedInstance,
                "unknown certificate command \"" + command + "\"");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInstance,
                std::string("malformed certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle(const CommonFlags& flags, std::optional<int> clique_size) {
  InstanceDocument doc = load_instance(flags.file);
  Timer timer;
  Json out = Json::object();
  out["command"] = "oracle";
  if (doc.kind == DocKind::SubsetSum) {
    auto hit = solve_subsetsum(doc.subsetsum);
    out["answer"] = hit.has_value() ? "yes" : "no";
    if (hit.has_value()) out["subset"] = one_based(*hit);
  } else if (doc.kind == DocKind::BinPacking) {
    if (doc.trivially_no()) {
      out["answer"] = "no";  // already decided when the instance was filtered
    } else {
      auto hit = solve_equalbin(doc.binpacking);
      out["answer"] = hit.has_value() ? "yes" : "no";
      if (hit.has_value()) out["assignment"] = one_based(*hit);
    }
  } else if (doc.kind == DocKind::Graph) {
    if (!clique_size.has_value())
      throw Error(ErrorCode::BadK,
                  "oracle on a graph needs --target K (the clique size)");
    auto hit = has_clique(doc.graph, *clique_size);
    out["answer"] = hit.has_value() ? "yes" : "no";
    if (hit.has_value()) out["clique"] = one_based(*hit);
  } else {
    throw Error(ErrorCode::MalformedInstance,
                "oracle needs a subsetsum, binpacking, or graph instance; "
                "use transversal/wellsep for geometric instances");
  }
  Stats none;
  out["statistics"] = stats_json(none);
  return finish(out, flags, timer.ms());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rational toolkit: flat transversals of point and segment "
      "families, well-separation, hyperplane point coverage, and the "
      "hardness encodings between them"};
  app.require_subcommand(1);

  CommonFlags tv;
  std::optional<int> tv_target;
  bool tv_hyperplane = false;
  auto* t = app.add_subcommand(
      "transversal", "decide whether an m-flat meets one point of every set");
  add_common(t, &tv);
  t->add_option("--target", tv_target, "flat dimension m to test");
  t->add_flag("--hyperplane", tv_hyperplane, "shortcut for m = D-1");

  CommonFlags ws;
  auto* w = app.add_subcommand(
      "wellsep", "decide whether the convex hulls are well separated");
  add_common(w, &ws);

  CommonFlags mh;
  std::string mh_mode = "exact";
  auto* m = app.add_subcommand(
      "maxhyp", "maximum number of points on one hyperplane");
  add_common(m, &mh);
  m->add_option("--mode", mh_mode, "exact or approx (default exact)")
      ->check(CLI::IsMember({"exact", "approx"}));

  std::string rd_kind, rd_file, rd_mode = "repaired", rd_output;
  std::optional<int> rd_target;
  auto* r = app.add_subcommand("reduce",
                               "encode one problem kind as another");
  r->add_option("kind", rd_kind,
                "subsetsum | binpacking | equalbin | flattrans-lift | "
                "segments | clique")
      ->required()
      ->check(CLI::IsMember({"subsetsum", "binpacking", "equalbin",
                             "flattrans-lift", "segments", "clique"}));
  r->add_option("file", rd_file, "source instance file")->required();
  r->add_option("--mode", rd_mode, "flattrans-lift: paper or repaired")
      ->check(CLI::IsMember({"paper", "repaired"}));
  r->add_option("--target", rd_target, "clique: the clique size k");
  r->add_option("--output", rd_output, "write the instance here");

  std::string vf_instance, vf_cert;
  auto* v = app.add_subcommand(
      "verify", "re-check a result document against its instance");
  v->add_option("instance", vf_instance, "instance file")->required();
  v->add_option("certificate", vf_cert, "result document file")->required();

  CommonFlags oc;
  std::optional<int> oc_target;
  auto* o = app.add_subcommand(
      "oracle", "brute-force scan of a combinatorial instance");
  add_common(o, &oc, /*with_threads=*/false);
  o->add_option("--target", oc_target, "graph: the clique size k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (t->parsed()) return run_transversal(tv, tv_target, tv_hyperplane);
    if (w->parsed()) return run_wellsep(ws);
    if (m->parsed()) return run_maxhyp(mh, mh_mode);
    if (r->parsed())
      return run_reduce(rd_kind, rd_file, rd_mode, rd_target, rd_output);
    if (v->parsed()) return run_verify(vf_instance, vf_cert);
    if (o->parsed()) return run_oracle(oc, oc_target);
  } catch (const Error& e) {
    std::cerr << "error (" << code_name(e.code) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
