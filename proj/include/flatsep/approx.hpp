#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/stats.hpp>

#include <vector>

namespace flatsep {

/// Which branch of the grouped hyperplane heuristic produced the answer:
/// all points fit on one hyperplane (k <= D), the first D points were
/// used directly (f(k) < D), or group-wise candidate enumeration ran.
enum class ApproxCase { AllPoints, AnyDPoints, Grouped };

/// Heuristic result. `count` is the exact incidence count (with
/// multiplicity) of `hyperplane` over the whole input; `fk` is the
/// double-precision size function value, used only for case selection
/// and group sizing, never in geometric computations. `groupSize` is
/// meaningful only in the Grouped case.
struct ApproxReport {
  Hyperplane hyperplane;
  long long count = 0;
  ApproxCase mode = ApproxCase::AllPoints;
  double fk = 1.0;
  int groupSize = 0;
};

/// Size function driving the heuristic: log2(k) / log2(log2(k)),
/// defined as 1 for k <= 4 where the denominator is <= 1 or undefined.
double f_of_k(long long k);

/// Hyperplane-incidence heuristic over k labeled points (duplicates
/// allowed, counted with multiplicity):
///   - k <= D: the hyperplane through all points, count = k.
///   - f(k) < D: the hyperplane through the first D points (normal
///     completed deterministically when they span less), counted against
///     the whole input, so count >= D.
///   - otherwise: points are grouped in input order into blocks of
///     ceil(f(k)) (a short tail merges into its predecessor when smaller
///     than D); every D-subset of a group spanning a (D-1)-flat is a
///     candidate, a group spanning less contributes its completed hull
///     hyperplane instead, and the best candidate by (count, canonical
///     hyperplane order) wins.
/// Candidate evaluation may run on `threads` workers; the enumeration
/// and the total-order merge make the report and the stats counters
/// independent of the worker count. Throws Error(EmptyInput) on an
/// empty list.
ApproxReport approx_maxhyp(const std::vector<Point>& points, int dimension,
                           int threads = 1, Stats* stats = nullptr);

}  // namespace flatsep
