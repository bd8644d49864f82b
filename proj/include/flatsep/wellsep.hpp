#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/lp.hpp>
#include <flatsep/rational.hpp>
#include <flatsep/stats.hpp>

#include <vector>

namespace flatsep {

/// A proper split of the family whose two sides have intersecting hulls:
/// `point` lies in both conv(union of sets in I) and conv(union of the
/// others). Weight vectors run over the concatenated points of each side
/// (sets in ascending index order, points in listing order) and are
/// convex; both reproduce `point` exactly. Set indices are 0-based.
struct WitnessPartition {
  std::vector<int> I;
  Point point;
  Vec weightsI;
  Vec weightsComplement;
};

/// Radon split of a single point list: disjoint index sets I and J whose
/// convex hulls share `point`, with convex weights aligned to I and J.
struct RadonPartition {
  std::vector<int> I;
  std::vector<int> J;
  Point point;
  Vec weightsI;
  Vec weightsJ;
};

/// Decision outcome: either every proper split has disjoint hulls, or a
/// witness split plus a flat of dimension <= k-2 meeting every hull (the
/// two sides of the equivalence between non-separation and low-dimension
/// transversals of the hulls).
struct WellSepResult {
  bool well_separated = false;
  WitnessPartition witness;  // meaningful iff !well_separated
  Flat certificate;          // dim <= k-2, meets every conv(S_i)
};

/// Checks every proper index split (canonical order: splits whose I-side
/// contains set 0, by increasing binary code over the remaining sets) and
/// reports the first intersecting one, or WellSeparated. Families with
/// k >= D+2 sets short-circuit through a Radon split of their first
/// points. Splits are processed in fixed batches of 64 so the examined
/// count and the reported witness never depend on `threads`.
WellSepResult is_well_separated(const PointFamily& family, int threads = 1,
                                Stats* stats = nullptr);

/// Exact Radon partition of >= D+2 points: splits the support of an
/// affine dependence by weight sign. Deterministic via the canonical
/// dependence. Throws Error(TooFewPoints) below D+2 points.
RadonPartition radon_partition(const std::vector<Point>& points);

/// The affine hull of one collapsed representative per set: the weighted
/// average of its witness weights when the set carries positive weight,
/// its first point otherwise. Always has dimension <= k-2 and meets every
/// hull; both facts are re-verified before returning (LP-backed), and a
/// violation is a hard internal error. Throws Error(InvalidWitness) when
/// the witness does not check out against the family.
Flat flat_certificate_from_witness(const PointFamily& family,
                                   const WitnessPartition& witness,
                                   Stats* stats = nullptr);

/// Converse direction: given a flat of dimension <= k-2 meeting every
/// hull, picks one hull intersection point per set (LP), Radon-splits
/// them inside flat coordinates, and composes the Radon weights with each
/// intersection point's hull weights into a witness split. Throws
/// Error(FlatMissesSet) naming the first set whose hull avoids the flat.
WitnessPartition witness_from_flat(const PointFamily& family, const Flat& flat,
                                   Stats* stats = nullptr);

}  // namespace flatsep
