#pragma once

#include <flatsep/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatsep {

enum class ErrorCode {
  EmptyInput,
  DimensionMismatch,
  RankTooHigh,
  BadTarget,
  EmptySet,
  TooFewPoints,
  InvalidWitness,
  FlatMissesSet,
  MalformedInstance,
  PreconditionViolated,
  SetTooLarge,
  NoOriginSet,
  BadK,
  BudgetExceeded,
  Internal,
};

struct Error : std::runtime_error {
  ErrorCode code;
  long index;  // offending set/point index where applicable, else -1
  Error(ErrorCode c, const std::string& msg, long idx = -1)
      : std::runtime_error(msg), code(c), index(idx) {}
};

/// A finite family of finite point sets, all in the same ambient dimension.
struct PointFamily {
  int dimension = 0;
  std::vector<std::vector<Point>> sets;

  void validate() const;  // throws Error on dimension mismatches / D < 1
};

/// Affine flat: { base + sum t_r * basis[r] }. Basis rows are kept in
/// reduced row echelon form (pivot columns increasing, leading entry +1),
/// so equal hulls constructed from different spanning subsets agree
/// componentwise.
struct Flat {
  Point base;
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Hyperplane { x : normal . x = offset }, canonical: first nonzero normal
/// entry is +1, so set equality is componentwise equality.
struct Hyperplane {
  Vec normal;
  Rational offset;

  bool operator==(const Hyperplane& o) const {
    return offset == o.offset && normal == o.normal;
  }
};

/// Scales (normal, offset) so the first nonzero normal entry becomes +1.
/// Throws Error(EmptyInput) on an all-zero normal.
Hyperplane make_canonical_hyperplane(Vec normal, Rational offset);

/// Total order used for deterministic tie-breaks: lexicographic on the
/// normal, then on the offset.
int compare_hyperplanes(const Hyperplane& a, const Hyperplane& b);

/// Exact row-echelon accumulator. Rows are inserted one at a time;
/// dependent rows are dropped, independent rows are normalized to a +1
/// leading entry and kept sorted by pivot column. Existing rows are never
/// modified by add(), so pop() (LIFO undo) restores the previous state
/// exactly -- the search code relies on that.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  /// Eliminates every pivot column from v in place; the residual is zero
  /// iff v lies in the current row space.
  void reduce(Vec& v) const;

  /// Adds a row; returns true iff it was independent (rank grew).
  bool add(Vec v);

  /// Undoes the most recent successful add().
  void pop();

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Rows brought to reduced echelon form (each pivot column is zero in
  /// every other row). Canonical for the row space.
  std::vector<Vec> reduced_rows() const;

  /// Smallest column index that is not a pivot, or -1 if all are pivots.
  int first_free_column() const;

  /// Kernel vector of the row space with value 1 at free column f and 0
  /// at every other free column.
  Vec kernel_vector(int f) const;

 private:
  int cols_;
  std::vector<Vec> rows_;    // sorted by pivots_, strictly increasing
  std::vector<int> pivots_;  // pivot column of each row
  std::vector<int> insert_log_;  // position each add() inserted at
};

// --- exact affine primitives --------------------------------------------

/// Dimension of the affine hull (0 for a single point). Throws on empty
/// input or mixed dimensions.
int affine_rank(const std::vector<Point>& points);

/// A nontrivial lambda with sum(lambda) = 0 and sum(lambda_i p_i) = 0,
/// normalized so the first nonzero entry is +1; nullopt if the points are
/// affinely independent. Deterministic: the kernel vector of the smallest
/// free column.
std::optional<std::vector<Rational>> affine_dependence(
    const std::vector<Point>& points);

/// Affine hull as base + echelon basis.
Flat flat_from_points(const std::vector<Point>& points);

bool flat_contains(const Flat& flat, const Point& p);

/// Coordinates t with base + basis*t = p; nullopt if p is off the flat.
std::optional<Vec> flat_coordinates(const Flat& flat, const Point& p);

/// The canonical hyperplane containing all given points, whose affine
/// rank must be <= D-1 (else Error(RankTooHigh)). When the rank is lower,
/// the normal is completed deterministically: the kernel vector of the
/// hull basis at its smallest free column.
Hyperplane hyperplane_through(const std::vector<Point>& points, int dimension);

}  // namespace flatsep
