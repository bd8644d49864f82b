#include <flatsep/wellsep.hpp>

#include <algorithm>
#include <thread>
#include <utility>

namespace flatsep {

namespace {

constexpr std::uint64_t kSplitBatch = 64;

void require_nonempty_sets(const PointFamily& family) {
  for (size_t i = 0; i < family.sets.size(); ++i)
    if (family.sets[i].empty())
      throw Error(ErrorCode::EmptySet,
                  "set " + std::to_string(i + 1) + " is empty",
                  static_cast<long>(i));
}

std::vector<int> complement_of(const std::vector<int>& I, int k) {
  std::vector<char> in(k, 0);
  for (int i : I) in[i] = 1;
  std::vector<int> rest;
  for (int i = 0; i < k; ++i)
    if (!in[i]) rest.push_back(i);
  return rest;
}

std::vector<Point> concat_sets(const PointFamily& family,
                               const std::vector<int>& idx) {
  std::vector<Point> out;
  for (int i : idx)
    for (const Point& p : family.sets[i]) out.push_back(p);
  return out;
}

/// I-side of the canonical split with the given code: set 0 plus the sets
/// whose bit is on. Codes 0 .. 2^(k-1)-2 enumerate the proper splits.
std::vector<int> split_from_code(std::uint64_t code, int k) {
  std::vector<int> I{0};
  for (int j = 1; j < k; ++j)
    if ((code >> (j - 1)) & 1) I.push_back(j);
  return I;
}

struct WitnessCheck {
  std::vector<int> complement;
  std::vector<Rational> set_total;  // per set, total witness weight
  std::vector<Point> collapsed;     // per set, weighted average or first point
};

/// Validates a witness against its family and collapses it to one
/// representative per set. Throws Error(InvalidWitness) on any defect.
WitnessCheck check_witness(const PointFamily& family,
                           const WitnessPartition& witness) {
  const int k = static_cast<int>(family.sets.size());
  const int D = family.dimension;
  auto bad = [](const std::string& msg) {
    return Error(ErrorCode::InvalidWitness, "witness rejected: " + msg);
  };
  if (witness.I.empty() || static_cast<int>(witness.I.size()) >= k)
    throw bad("index side must be a proper nonempty subset");
  std::vector<char> seen(k, 0);
  for (int i : witness.I) {
    if (i < 0 || i >= k || seen[i]) throw bad("malformed index side");
    seen[i] = 1;
  }
  std::vector<int> I = witness.I;
  std::sort(I.begin(), I.end());
  WitnessCheck out;
  out.complement = complement_of(I, k);
  if (static_cast<int>(witness.point.size()) != D)
    throw bad("witness point has the wrong dimension");

  out.set_total.assign(k, Rational(0));
  out.collapsed.assign(k, Point());
  auto fold_side = [&](const std::vector<int>& side, const Vec& weights) {
    size_t at = 0;
    Rational sum = 0;
    Point combo(D, Rational(0));
    for (int i : side) {
      Rational total = 0;
      Point avg(D, Rational(0));
      for (const Point& p : family.sets[i]) {
        if (at >= weights.size()) throw bad("weight vector too short");
        const Rational& w = weights[at++];
        if (w < 0) throw bad("negative weight");
        total += w;
        for (int d = 0; d < D; ++d) avg[d] += w * p[d];
      }
      sum += total;
      for (int d = 0; d < D; ++d) combo[d] += avg[d];
      out.set_total[i] = total;
      if (total > 0) {
        for (int d = 0; d < D; ++d) avg[d] /= total;
        out.collapsed[i] = std::move(avg);
      } else {
        out.collapsed[i] = family.sets[i][0];
      }
    }
    if (at != weights.size()) throw bad("weight vector too long");
    if (sum != 1) throw bad("weights do not sum to one");
    if (combo != witness.point) throw bad("weights do not reproduce the point");
  };
  fold_side(I, witness.weightsI);
  fold_side(out.complement, witness.weightsComplement);
  return out;
}

}  // namespace

RadonPartition radon_partition(const std::vector<Point>& points) {
  if (points.empty())
    throw Error(ErrorCode::TooFewPoints, "no points given");
  const int D = static_cast<int>(points[0].size());
  for (size_t i = 0; i < points.size(); ++i)
    if (static_cast<int>(points[i].size()) != D)
      throw Error(ErrorCode::DimensionMismatch, "mixed point dimensions",
                  static_cast<long>(i));
  if (static_cast<int>(points.size()) < D + 2)
    throw Error(ErrorCode::TooFewPoints,
                "a Radon split needs at least D+2 points");

  auto lambda = affine_dependence(points);
  if (!lambda)
    throw Error(ErrorCode::Internal, "D+2 points without an affine dependence");

  RadonPartition out;
  Rational positive_mass = 0;
  for (size_t i = 0; i < lambda->size(); ++i) {
    if ((*lambda)[i] > 0) {
      out.J.push_back(static_cast<int>(i));
      positive_mass += (*lambda)[i];
    } else if ((*lambda)[i] < 0) {
      out.I.push_back(static_cast<int>(i));
    }
  }
  if (out.I.empty() || out.J.empty())
    throw Error(ErrorCode::Internal, "one-sided affine dependence");
  for (int i : out.I) out.weightsI.push_back(-(*lambda)[i] / positive_mass);
  for (int j : out.J) out.weightsJ.push_back((*lambda)[j] / positive_mass);

  out.point.assign(D, Rational(0));
  for (size_t t = 0; t < out.J.size(); ++t)
    for (int d = 0; d < D; ++d)
      out.point[d] += out.weightsJ[t] * points[out.J[t]][d];
  Point check(D, Rational(0));
  for (size_t t = 0; t < out.I.size(); ++t)
    for (int d = 0; d < D; ++d)
      check[d] += out.weightsI[t] * points[out.I[t]][d];
  if (check != out.point)
    throw Error(ErrorCode::Internal, "Radon sides disagree on the point");
  return out;
}

Flat flat_certificate_from_witness(const PointFamily& family,
                                   const WitnessPartition& witness,
                                   Stats* stats) {
  family.validate();
  require_nonempty_sets(family);
  WitnessCheck checked = check_witness(family, witness);
  const int k = static_cast<int>(family.sets.size());

  Flat flat = flat_from_points(checked.collapsed);
  // Both sides' positively weighted representatives contain the witness
  // point in their affine hulls, which caps the dimension at k-2; the
  // zero-weight fallbacks each add at most one. Anything larger means a
  // broken invariant, not a property of the input.
  if (flat.dim() > k - 2)
    throw Error(ErrorCode::Internal, "certificate flat dimension exceeds k-2");
  for (int i = 0; i < k; ++i)
    if (!flat_meets_hull(flat, family.sets[i], stats))
      throw Error(ErrorCode::Internal, "certificate flat misses a hull");
  return flat;
}

WitnessPartition witness_from_flat(const PointFamily& family, const Flat& flat,
                                   Stats* stats) {
  family.validate();
  require_nonempty_sets(family);
  const int k = static_cast<int>(family.sets.size());
  const int D = family.dimension;
  if (static_cast<int>(flat.base.size()) != D)
    throw Error(ErrorCode::DimensionMismatch, "flat has the wrong dimension");
  if (flat.dim() > k - 2)
    throw Error(ErrorCode::PreconditionViolated,
                "flat dimension must be at most k-2");

  std::vector<FlatHullMeet> meets;
  std::vector<Vec> local;  // flat-internal coordinates of each meet point
  for (int i = 0; i < k; ++i) {
    auto meet = flat_meets_hull_weighted(flat, family.sets[i], stats);
    if (!meet)
      throw Error(ErrorCode::FlatMissesSet,
                  "flat misses the hull of set " + std::to_string(i + 1),
                  static_cast<long>(i));
    auto coords = flat_coordinates(flat, meet->point);
    if (!coords)
      throw Error(ErrorCode::Internal, "hull meeting point fell off the flat");
    meets.push_back(std::move(*meet));
    local.push_back(std::move(*coords));
  }

  // k points inside a (k-2)-dimensional coordinate space: Radon applies.
  RadonPartition radon = radon_partition(local);

  WitnessPartition out;
  out.I = radon.I;
  out.point.assign(D, Rational(0));
  for (size_t t = 0; t < radon.I.size(); ++t)
    for (int d = 0; d < D; ++d)
      out.point[d] += radon.weightsI[t] * meets[radon.I[t]].point[d];

  std::vector<Rational> set_weight(k, Rational(0));
  for (size_t t = 0; t < radon.I.size(); ++t)
    set_weight[radon.I[t]] = radon.weightsI[t];
  for (size_t t = 0; t < radon.J.size(); ++t)
    set_weight[radon.J[t]] = radon.weightsJ[t];
  for (int i : out.I)
    for (size_t p = 0; p < family.sets[i].size(); ++p)
      out.weightsI.push_back(set_weight[i] * meets[i].weights[p]);
  for (int i : complement_of(out.I, k))
    for (size_t p = 0; p < family.sets[i].size(); ++p)
      out.weightsComplement.push_back(set_weight[i] * meets[i].weights[p]);

  // The composed weights must reproduce the point from both sides; that
  // is the whole contract, so verify rather than trust the arithmetic.
  (void)check_witness(family, out);
  return out;
}

WellSepResult is_well_separated(const PointFamily& family, int threads,
                                Stats* stats) {
  family.validate();
  require_nonempty_sets(family);
  const int k = static_cast<int>(family.sets.size());
  const int D = family.dimension;

  auto not_separated = [&](WitnessPartition witness) {
    WellSepResult res;
    res.well_separated = false;
    res.certificate = flat_certificate_from_witness(family, witness, stats);
    res.witness = std::move(witness);
    return res;
  };

  // With k >= D+2 sets, a Radon split of one point per set already shows
  // two touching sub-hulls; no search is needed.
  if (k >= D + 2) {
    std::vector<Point> firsts;
    for (const auto& set : family.sets) firsts.push_back(set[0]);
    RadonPartition radon = radon_partition(firsts);
    WitnessPartition witness;
    witness.I = radon.I;
    witness.point = radon.point;
    std::vector<Rational> set_weight(k, Rational(0));
    for (size_t t = 0; t < radon.I.size(); ++t)
      set_weight[radon.I[t]] = radon.weightsI[t];
    for (size_t t = 0; t < radon.J.size(); ++t)
      set_weight[radon.J[t]] = radon.weightsJ[t];
    for (int i : witness.I) {
      witness.weightsI.push_back(set_weight[i]);
      for (size_t p = 1; p < family.sets[i].size(); ++p)
        witness.weightsI.push_back(Rational(0));
    }
    for (int i : complement_of(witness.I, k)) {
      witness.weightsComplement.push_back(set_weight[i]);
      for (size_t p = 1; p < family.sets[i].size(); ++p)
        witness.weightsComplement.push_back(Rational(0));
    }
    return not_separated(std::move(witness));
  }

  if (k >= 64)
    throw Error(ErrorCode::BudgetExceeded,
                "too many sets to enumerate proper splits");
  const std::uint64_t total =
      (k <= 1) ? 0 : (std::uint64_t(1) << (k - 1)) - 1;

  struct Hit {
    std::uint64_t code;
    SeparationResult sep;
  };
  for (std::uint64_t start = 0; start < total; start += kSplitBatch) {
    const std::uint64_t stop = std::min(total, start + kSplitBatch);
    const int batch = static_cast<int>(stop - start);
    const int T = std::max(1, std::min(threads, batch));

    std::vector<std::optional<Hit>> hits(T);
    std::vector<Stats> local(T);
    auto worker = [&](int w) {
      for (std::uint64_t code = start + w; code < stop; code += T) {
        std::vector<int> I = split_from_code(code, k);
        SeparationResult sep =
            hulls_intersect(concat_sets(family, I),
                            concat_sets(family, complement_of(I, k)),
                            &local[w]);
        if (sep.intersecting && !hits[w])
          hits[w] = Hit{code, std::move(sep)};
      }
    };
    if (T == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(T);
      for (int w = 0; w < T; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
    if (stats != nullptr) {
      stats->candidates += stop - start;
      for (const Stats& s : local) stats->lps += s.lps;
    }
    std::optional<Hit> first;
    for (const auto& h : hits)
      if (h && (!first || h->code < first->code)) first = h;
    if (first) {
      std::vector<int> I = split_from_code(first->code, k);
      WitnessPartition witness;
      witness.I = std::move(I);
      witness.point = std::move(first->sep.point);
      witness.weightsI = std::move(first->sep.weightsA);
      witness.weightsComplement = std::move(first->sep.weightsB);
      return not_separated(std::move(witness));
    }
  }

  WellSepResult res;
  res.well_separated = true;
  return res;
}

}  // namespace flatsep
