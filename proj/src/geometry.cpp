#include <flatsep/geometry.hpp>

#include <algorithm>

namespace flatsep {

void PointFamily::validate() const {
  if (dimension < 1)
    throw Error(ErrorCode::MalformedInstance, "ambient dimension must be >= 1");
  if (sets.empty()) throw Error(ErrorCode::EmptyInput, "family has no sets");
  for (size_t i = 0; i < sets.size(); ++i)
    for (const auto& p : sets[i])
      if (static_cast<int>(p.size()) != dimension)
        throw Error(ErrorCode::DimensionMismatch,
                    "point in set " + std::to_string(i + 1) +
                        " does not match the ambient dimension",
                    static_cast<long>(i));
}

Hyperplane make_canonical_hyperplane(Vec normal, Rational offset) {
  size_t lead = normal.size();
  for (size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) {
      lead = i;
      break;
    }
  if (lead == normal.size())
    throw Error(ErrorCode::EmptyInput, "hyperplane normal is zero");
  Rational c = normal[lead];
  if (c != 1) {
    for (auto& x : normal) x /= c;
    offset /= c;
  }
  return Hyperplane{std::move(normal), std::move(offset)};
}

int compare_hyperplanes(const Hyperplane& a, const Hyperplane& b) {
  int c = lex_compare(a.normal, b.normal);
  if (c != 0) return c;
  if (a.offset < b.offset) return -1;
  if (a.offset > b.offset) return 1;
  return 0;
}

// --- Echelon --------------------------------------------------------------

void Echelon::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = pivots_[r];
    if (v[c] == 0) continue;
    Rational coef = v[c];
    const Vec& row = rows_[r];
    for (int j = c; j < cols_; ++j)
      if (row[j] != 0) v[j] -= coef * row[j];
  }
}

bool Echelon::add(Vec v) {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
  reduce(v);
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  if (v[lead] != 1) {
    Rational c = v[lead];
    for (int j = lead; j < cols_; ++j)
      if (v[j] != 0) v[j] /= c;
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  int pos = static_cast<int>(it - pivots_.begin());
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  insert_log_.push_back(pos);
  return true;
}

void Echelon::pop() {
  if (insert_log_.empty())
    throw Error(ErrorCode::Internal, "pop on empty echelon");
  int pos = insert_log_.back();
  insert_log_.pop_back();
  rows_.erase(rows_.begin() + pos);
  pivots_.erase(pivots_.begin() + pos);
}

std::vector<Vec> Echelon::reduced_rows() const {
  std::vector<Vec> out = rows_;
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    int c = pivots_[i];
    for (int j = 0; j < i; ++j) {
      if (out[j][c] == 0) continue;
      Rational coef = out[j][c];
      for (int t = c; t < cols_; ++t)
        if (out[i][t] != 0) out[j][t] -= coef * out[i][t];
    }
  }
  return out;
}

int Echelon::first_free_column() const {
  size_t r = 0;
  for (int j = 0; j < cols_; ++j) {
    if (r < pivots_.size() && pivots_[r] == j)
      ++r;
    else
      return j;
  }
  return -1;
}

Vec Echelon::kernel_vector(int f) const {
  std::vector<Vec> rr = reduced_rows();
  Vec v(cols_, Rational(0));
  v[f] = 1;
  for (size_t r = 0; r < rr.size(); ++r) v[pivots_[r]] = -rr[r][f];
  return v;
}

// --- affine primitives -----------------------------------------------------

static void check_points(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points given");
  for (const auto& p : points)
    if (p.size() != points[0].size())
      throw Error(ErrorCode::DimensionMismatch,
                  "points of different dimensions");
}

int affine_rank(const std::vector<Point>& points) {
  check_points(points);
  Echelon e(static_cast<int>(points[0].size()));
  for (size_t i = 1; i < points.size(); ++i) e.add(sub(points[i], points[0]));
  return e.rank();
}

std::optional<std::vector<Rational>> affine_dependence(
    const std::vector<Point>& points) {
  check_points(points);
  int n = static_cast<int>(points.size());
  int d = static_cast<int>(points[0].size());
  Echelon e(n);
  for (int eq = 0; eq < d; ++eq) {
    Vec row(n);
    for (int j = 0; j < n; ++j) row[j] = points[j][eq];
    e.add(std::move(row));
  }
  e.add(Vec(n, Rational(1)));
  if (e.rank() == n) return std::nullopt;
  Vec lambda = e.kernel_vector(e.first_free_column());
  size_t lead = 0;
  while (lambda[lead] == 0) ++lead;
  if (lambda[lead] != 1) {
    Rational c = lambda[lead];
    for (auto& x : lambda) x /= c;
  }
  return lambda;
}

Flat flat_from_points(const std::vector<Point>& points) {
  check_points(points);
  Echelon e(static_cast<int>(points[0].size()));
  for (size_t i = 1; i < points.size(); ++i) e.add(sub(points[i], points[0]));
  return Flat{points[0], e.reduced_rows()};
}

bool flat_contains(const Flat& flat, const Point& p) {
  if (p.size() != flat.base.size())
    throw Error(ErrorCode::DimensionMismatch, "point/flat dimension mismatch");
  Echelon e(static_cast<int>(flat.base.size()));
  for (const auto& b : flat.basis) e.add(b);
  Vec v = sub(p, flat.base);
  e.reduce(v);
  return is_zero(v);
}

std::optional<Vec> flat_coordinates(const Flat& flat, const Point& p) {
  if (p.size() != flat.base.size())
    throw Error(ErrorCode::DimensionMismatch, "point/flat dimension mismatch");
  // Reduced basis rows have a unit pivot column each, so the coordinate
  // along row r is just the residual's pivot entry.
  Vec v = sub(p, flat.base);
  Vec t(flat.basis.size());
  for (size_t r = 0; r < flat.basis.size(); ++r) {
    int c = -1;
    for (size_t j = 0; j < flat.basis[r].size(); ++j)
      if (flat.basis[r][j] != 0) {
        c = static_cast<int>(j);
        break;
      }
    t[r] = v[c];
  }
  Vec back = flat.base;
  for (size_t r = 0; r < flat.basis.size(); ++r)
    if (t[r] != 0) back = add(back, scale(flat.basis[r], t[r]));
  if (back != p) return std::nullopt;
  return t;
}

Hyperplane hyperplane_through(const std::vector<Point>& points,
                              int dimension) {
  check_points(points);
  if (static_cast<int>(points[0].size()) != dimension)
    throw Error(ErrorCode::DimensionMismatch,
                "points do not live in the stated dimension");
  Echelon e(dimension);
  for (size_t i = 1; i < points.size(); ++i) e.add(sub(points[i], points[0]));
  if (e.rank() > dimension - 1)
    throw Error(ErrorCode::RankTooHigh,
                "points affinely span the whole space");
  Vec normal = e.kernel_vector(e.first_free_column());
  Rational offset = dot(normal, points[0]);
  return make_canonical_hyperplane(std::move(normal), std::move(offset));
}

}  // namespace flatsep
