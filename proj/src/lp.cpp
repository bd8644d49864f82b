#include <flatsep/lp.hpp>

#include <algorithm>
#include <string>

namespace flatsep {

namespace {

/// Dense exact simplex tableau. Column layout: 2n split structural
/// columns (x_j = z[2j] - z[2j+1]), one slack per inequality row, one
/// artificial per row. Rows are sign-normalized so every right-hand side
/// starts nonnegative; phase 1 starts from the all-artificial basis.
class Simplex {
 public:
  explicit Simplex(const LPInstance& in) {
    n_ = in.variables;
    m_ = static_cast<int>(in.rows.size());
    int nslack = 0;
    for (const auto& r : in.rows)
      if (r.rel != Rel::EQ) ++nslack;
    int cols = 2 * n_ + nslack + m_;
    ncols_ = cols;
    nonart_cols_ = 2 * n_ + nslack;
    M_.assign(m_, Vec(cols, Rational(0)));
    rhs_.assign(m_, Rational(0));
    basis_.assign(m_, -1);
    artcol_.assign(m_, -1);
    sigma_.assign(m_, 1);
    art_.assign(cols, false);
    banned_.assign(cols, false);

    int slackAt = 2 * n_;
    for (int i = 0; i < m_; ++i) {
      const LPRow& row = in.rows[i];
      int s = (row.rhs < 0) ? -1 : 1;
      sigma_[i] = s;
      for (int j = 0; j < n_; ++j) {
        if (row.coeffs[j] == 0) continue;
        Rational v = row.coeffs[j] * s;
        M_[i][2 * j] = v;
        M_[i][2 * j + 1] = -v;
      }
      if (row.rel != Rel::EQ) {
        Rational sl = (row.rel == Rel::LE) ? Rational(s) : Rational(-s);
        M_[i][slackAt++] = sl;
      }
      int ac = 2 * n_ + nslack + i;
      artcol_[i] = ac;
      art_[ac] = true;
      M_[i][ac] = 1;
      rhs_[i] = row.rhs * s;
      basis_[i] = ac;
    }
  }

  /// Minimizes the artificial sum; returns the optimum (0 iff feasible).
  Rational phase1() {
    rc_.assign(ncols_, Rational(0));
    objval_ = 0;
    for (int c = 0; c < ncols_; ++c) {
      Rational s = art_[c] ? Rational(1) : Rational(0);
      for (int i = 0; i < m_; ++i) s -= M_[i][c];
      rc_[c] = s;
    }
    for (int i = 0; i < m_; ++i) objval_ += rhs_[i];
    bool opt = iterate();
    if (!opt)
      throw Error(ErrorCode::Internal, "artificial objective unbounded");
    return objval_;
  }

  /// Signed Farkas multipliers per original row (see lp.hpp).
  Vec farkas() const {
    Vec mult(m_);
    for (int i = 0; i < m_; ++i)
      mult[i] = -Rational(sigma_[i]) * (Rational(1) - rc_[artcol_[i]]);
    return mult;
  }

  /// Pivots basic artificials out (or drops redundant rows) and bans all
  /// artificial columns from ever entering again.
  void retire_artificials() {
    for (int r = m_ - 1; r >= 0; --r) {
      if (!art_[basis_[r]]) continue;
      int e = -1;
      for (int c = 0; c < nonart_cols_; ++c)
        if (M_[r][c] != 0) {
          e = c;
          break;
        }
      if (e >= 0) {
        basis_[r] = e;
        pivot(r, e);
      } else {
        M_.erase(M_.begin() + r);
        rhs_.erase(rhs_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
      }
    }
    for (int c = 0; c < ncols_; ++c)
      if (art_[c]) banned_[c] = true;
  }

  /// Minimizes the given internal cost row; true = optimal, false =
  /// unbounded (entering column left in unbound_col_).
  bool phase2(const Vec& cost) {
    rc_ = cost;
    objval_ = 0;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      objval_ += cb * rhs_[i];
      for (int c = 0; c < ncols_; ++c)
        if (M_[i][c] != 0) rc_[c] -= cb * M_[i][c];
    }
    return iterate();
  }

  Vec extract_x() const {
    Vec z(ncols_, Rational(0));
    for (int i = 0; i < m_; ++i) z[basis_[i]] = rhs_[i];
    Vec x(n_);
    for (int j = 0; j < n_; ++j) x[j] = z[2 * j] - z[2 * j + 1];
    return x;
  }

  Vec extract_ray() const {
    Vec dz(ncols_, Rational(0));
    dz[unbound_col_] = 1;
    for (int i = 0; i < m_; ++i) dz[basis_[i]] = -M_[i][unbound_col_];
    Vec r(n_);
    for (int j = 0; j < n_; ++j) r[j] = dz[2 * j] - dz[2 * j + 1];
    return r;
  }

  const Rational& objval() const { return objval_; }
  int ncols() const { return ncols_; }

 private:
  void pivot(int r, int e) {
    Rational piv = M_[r][e];
    if (piv != 1) {
      for (int c = 0; c < ncols_; ++c)
        if (M_[r][c] != 0) M_[r][c] /= piv;
      rhs_[r] /= piv;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r || M_[i][e] == 0) continue;
      Rational coef = M_[i][e];
      for (int c = 0; c < ncols_; ++c)
        if (M_[r][c] != 0) M_[i][c] -= coef * M_[r][c];
      rhs_[i] -= coef * rhs_[r];
    }
    if (rc_[e] != 0) {
      Rational coef = rc_[e];
      for (int c = 0; c < ncols_; ++c)
        if (M_[r][c] != 0) rc_[c] -= coef * M_[r][c];
      objval_ += coef * rhs_[r];
    }
  }

  /// Bland: entering = smallest-index eligible column with negative
  /// reduced cost; leaving = minimum ratio, ties by smallest basic
  /// column. Artificials are banned from re-entering once they leave.
  bool iterate() {
    for (;;) {
      int e = -1;
      for (int c = 0; c < ncols_; ++c)
        if (!banned_[c] && rc_[c] < 0) {
          e = c;
          break;
        }
      if (e < 0) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (M_[i][e] <= 0) continue;
        Rational ratio = rhs_[i] / M_[i][e];
        if (r < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) {
        unbound_col_ = e;
        return false;
      }
      int leaving = basis_[r];
      if (art_[leaving]) banned_[leaving] = true;
      basis_[r] = e;
      pivot(r, e);
    }
  }

  int n_ = 0, m_ = 0, ncols_ = 0, nonart_cols_ = 0;
  std::vector<Vec> M_;
  Vec rhs_;
  std::vector<int> basis_;
  std::vector<int> artcol_;
  std::vector<signed char> sigma_;
  std::vector<char> art_;
  std::vector<char> banned_;
  Vec rc_;
  Rational objval_;
  int unbound_col_ = -1;
};

void validate_instance(const LPInstance& in) {
  if (in.variables < 0)
    throw Error(ErrorCode::MalformedInstance, "negative variable count");
  for (const auto& r : in.rows)
    if (static_cast<int>(r.coeffs.size()) != in.variables)
      throw Error(ErrorCode::MalformedInstance, "constraint row length");
  if (in.objective &&
      static_cast<int>(in.objective->coeffs.size()) != in.variables)
    throw Error(ErrorCode::MalformedInstance, "objective row length");
}

bool row_satisfied(const LPRow& row, const Vec& x) {
  Rational lhs = dot(row.coeffs, x);
  switch (row.rel) {
    case Rel::LE:
      return lhs <= row.rhs;
    case Rel::EQ:
      return lhs == row.rhs;
    case Rel::GE:
      return lhs >= row.rhs;
  }
  return false;
}

void check_assignment(const LPInstance& in, const Vec& x) {
  for (const auto& row : in.rows)
    if (!row_satisfied(row, x))
      throw Error(ErrorCode::Internal, "solver produced invalid assignment");
}

}  // namespace

LPOutcome lp_solve(const LPInstance& in, Stats* stats) {
  if (stats != nullptr) ++stats->lps;
  validate_instance(in);
  Simplex sx(in);
  LPOutcome out;
  if (sx.phase1() != 0) {
    out.status = LPStatus::Infeasible;
    out.farkas = sx.farkas();
    if (!farkas_is_valid(in, out.farkas))
      throw Error(ErrorCode::Internal, "invalid infeasibility certificate");
    return out;
  }
  sx.retire_artificials();
  if (!in.objective) {
    out.status = LPStatus::Feasible;
    out.assignment = sx.extract_x();
    check_assignment(in, out.assignment);
    return out;
  }
  bool maximize = in.objective->direction == Direction::Maximize;
  Vec cost(sx.ncols(), Rational(0));
  for (int j = 0; j < in.variables; ++j) {
    Rational c = in.objective->coeffs[j];
    if (maximize) c = -c;
    cost[2 * j] = c;
    cost[2 * j + 1] = -c;
  }
  if (sx.phase2(cost)) {
    out.status = LPStatus::Optimal;
    out.assignment = sx.extract_x();
    check_assignment(in, out.assignment);
    out.value = maximize ? -sx.objval() : sx.objval();
    if (dot(in.objective->coeffs, out.assignment) != out.value)
      throw Error(ErrorCode::Internal, "objective value mismatch");
    return out;
  }
  out.status = LPStatus::Unbounded;
  out.ray = sx.extract_ray();
  // The ray must keep every constraint satisfied and strictly improve
  // the objective.
  for (const auto& row : in.rows) {
    Rational along = dot(row.coeffs, out.ray);
    bool ok = (row.rel == Rel::LE && along <= 0) ||
              (row.rel == Rel::GE && along >= 0) ||
              (row.rel == Rel::EQ && along == 0);
    if (!ok) throw Error(ErrorCode::Internal, "invalid unbounded ray");
  }
  Rational drift = dot(in.objective->coeffs, out.ray);
  if ((maximize && drift <= 0) || (!maximize && drift >= 0))
    throw Error(ErrorCode::Internal, "ray does not improve objective");
  return out;
}

bool farkas_is_valid(const LPInstance& in, const Vec& mult) {
  if (static_cast<int>(mult.size()) != static_cast<int>(in.rows.size()))
    return false;
  Vec combo(in.variables, Rational(0));
  Rational bound = 0;
  for (size_t i = 0; i < in.rows.size(); ++i) {
    const LPRow& row = in.rows[i];
    if (row.rel == Rel::LE && mult[i] < 0) return false;
    if (row.rel == Rel::GE && mult[i] > 0) return false;
    if (mult[i] == 0) continue;
    for (int j = 0; j < in.variables; ++j)
      combo[j] += mult[i] * row.coeffs[j];
    bound += mult[i] * row.rhs;
  }
  return is_zero(combo) && bound < 0;
}

SeparationResult hulls_intersect(const std::vector<Point>& A,
                                 const std::vector<Point>& B, Stats* stats) {
  if (A.empty() || B.empty())
    throw Error(ErrorCode::EmptyInput, "hull test on an empty point set");
  size_t D = A[0].size();
  for (const auto& p : A)
    if (p.size() != D)
      throw Error(ErrorCode::DimensionMismatch, "hull points disagree");
  for (const auto& q : B)
    if (q.size() != D)
      throw Error(ErrorCode::DimensionMismatch, "hull points disagree");

  int nA = static_cast<int>(A.size());
  int nB = static_cast<int>(B.size());
  LPInstance feas;
  feas.variables = nA + nB;
  for (size_t d = 0; d < D; ++d) {
    LPRow row{Vec(feas.variables, Rational(0)), Rel::EQ, Rational(0)};
    for (int i = 0; i < nA; ++i) row.coeffs[i] = A[i][d];
    for (int j = 0; j < nB; ++j) row.coeffs[nA + j] = -B[j][d];
    feas.rows.push_back(std::move(row));
  }
  {
    LPRow sa{Vec(feas.variables, Rational(0)), Rel::EQ, Rational(1)};
    for (int i = 0; i < nA; ++i) sa.coeffs[i] = 1;
    feas.rows.push_back(std::move(sa));
    LPRow sb{Vec(feas.variables, Rational(0)), Rel::EQ, Rational(1)};
    for (int j = 0; j < nB; ++j) sb.coeffs[nA + j] = 1;
    feas.rows.push_back(std::move(sb));
  }
  for (int v = 0; v < feas.variables; ++v) {
    LPRow nn{Vec(feas.variables, Rational(0)), Rel::GE, Rational(0)};
    nn.coeffs[v] = 1;
    feas.rows.push_back(std::move(nn));
  }

  LPOutcome fo = lp_solve(feas, stats);
  SeparationResult res;
  if (fo.status == LPStatus::Feasible) {
    res.intersecting = true;
    res.weightsA.assign(fo.assignment.begin(), fo.assignment.begin() + nA);
    res.weightsB.assign(fo.assignment.begin() + nA, fo.assignment.end());
    res.point.assign(D, Rational(0));
    for (int i = 0; i < nA; ++i)
      for (size_t d = 0; d < D; ++d) res.point[d] += res.weightsA[i] * A[i][d];
    return res;
  }
  if (fo.status != LPStatus::Infeasible)
    throw Error(ErrorCode::Internal, "unexpected hull feasibility outcome");

  // Disjoint: maximize the margin g of a separator with the normal in
  // the unit box; variables (a_1..a_D, offset, g).
  LPInstance sep;
  sep.variables = static_cast<int>(D) + 2;
  int offIdx = static_cast<int>(D);
  int gIdx = offIdx + 1;
  for (const auto& p : A) {
    LPRow row{Vec(sep.variables, Rational(0)), Rel::GE, Rational(0)};
    for (size_t d = 0; d < D; ++d) row.coeffs[d] = p[d];
    row.coeffs[offIdx] = -1;
    row.coeffs[gIdx] = -1;
    sep.rows.push_back(std::move(row));
  }
  for (const auto& q : B) {
    LPRow row{Vec(sep.variables, Rational(0)), Rel::LE, Rational(0)};
    for (size_t d = 0; d < D; ++d) row.coeffs[d] = q[d];
    row.coeffs[offIdx] = -1;
    row.coeffs[gIdx] = 1;
    sep.rows.push_back(std::move(row));
  }
  for (size_t d = 0; d < D; ++d) {
    LPRow up{Vec(sep.variables, Rational(0)), Rel::LE, Rational(1)};
    up.coeffs[d] = 1;
    sep.rows.push_back(std::move(up));
    LPRow lo{Vec(sep.variables, Rational(0)), Rel::GE, Rational(-1)};
    lo.coeffs[d] = 1;
    sep.rows.push_back(std::move(lo));
  }
  sep.objective = LPObjective{Direction::Maximize, Vec(sep.variables, 0)};
  sep.objective->coeffs[gIdx] = 1;

  LPOutcome so = lp_solve(sep, stats);
  if (so.status != LPStatus::Optimal || so.value <= 0)
    throw Error(ErrorCode::Internal, "separator extraction failed");
  res.intersecting = false;
  res.normal.assign(so.assignment.begin(), so.assignment.begin() + D);
  res.offset = so.assignment[offIdx];
  res.margin = so.assignment[gIdx];
  return res;
}

std::optional<FlatHullMeet> flat_meets_hull_weighted(
    const Flat& flat, const std::vector<Point>& S, Stats* stats) {
  if (S.empty())
    throw Error(ErrorCode::EmptyInput, "hull of an empty point set");
  size_t D = flat.base.size();
  for (const auto& p : S)
    if (p.size() != D)
      throw Error(ErrorCode::DimensionMismatch, "flat/hull dimension clash");
  if (flat.dim() == static_cast<int>(D)) {
    Vec w(S.size(), Rational(0));
    w[0] = 1;
    return FlatHullMeet{S[0], std::move(w)};
  }

  int ns = static_cast<int>(S.size());
  int nt = flat.dim();
  LPInstance lp;
  lp.variables = ns + nt;
  for (size_t d = 0; d < D; ++d) {
    LPRow row{Vec(lp.variables, Rational(0)), Rel::EQ, flat.base[d]};
    for (int i = 0; i < ns; ++i) row.coeffs[i] = S[i][d];
    for (int r = 0; r < nt; ++r) row.coeffs[ns + r] = -flat.basis[r][d];
    lp.rows.push_back(std::move(row));
  }
  LPRow sum{Vec(lp.variables, Rational(0)), Rel::EQ, Rational(1)};
  for (int i = 0; i < ns; ++i) sum.coeffs[i] = 1;
  lp.rows.push_back(std::move(sum));
  for (int i = 0; i < ns; ++i) {
    LPRow nn{Vec(lp.variables, Rational(0)), Rel::GE, Rational(0)};
    nn.coeffs[i] = 1;
    lp.rows.push_back(std::move(nn));
  }

  LPOutcome o = lp_solve(lp, stats);
  if (o.status != LPStatus::Feasible) return std::nullopt;
  FlatHullMeet meet;
  meet.weights.assign(o.assignment.begin(), o.assignment.begin() + ns);
  meet.point.assign(D, Rational(0));
  for (int i = 0; i < ns; ++i)
    for (size_t d = 0; d < D; ++d) meet.point[d] += meet.weights[i] * S[i][d];
  return meet;
}

std::optional<Point> flat_meets_hull(const Flat& flat,
                                     const std::vector<Point>& S,
                                     Stats* stats) {
  auto meet = flat_meets_hull_weighted(flat, S, stats);
  if (!meet) return std::nullopt;
  return meet->point;
}

}  // namespace flatsep
