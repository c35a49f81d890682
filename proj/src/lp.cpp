#include "catmaj/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmaj/errors.hpp"

namespace catmaj::lp {

void LinearProgram::add_eq(std::vector<Rational> row, Rational rhs) {
  if (row.size() != num_vars) throw std::invalid_argument("eq row length");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_le(std::vector<Rational> row, Rational rhs) {
  if (row.size() != num_vars) throw std::invalid_argument("le row length");
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

void LinearProgram::validate() const {
  if (num_vars == 0) throw std::invalid_argument("LP with no variables");
  if (eq_rows.size() != eq_rhs.size() || le_rows.size() != le_rhs.size()) {
    throw std::invalid_argument("constraint/rhs count mismatch");
  }
  for (const auto& r : eq_rows) {
    if (r.size() != num_vars) throw std::invalid_argument("eq row length");
  }
  for (const auto& r : le_rows) {
    if (r.size() != num_vars) throw std::invalid_argument("le row length");
  }
  if (objective && objective->size() != num_vars) {
    throw std::invalid_argument("objective length");
  }
  if (!lower_bounds.empty() && lower_bounds.size() != num_vars) {
    throw std::invalid_argument("lower_bounds length");
  }
}

namespace {

// Dense exact tableau.  Columns: standard-form variables (shifted/split
// user variables), slacks, artificials, then the RHS column.
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram& prog, const LpConfig& config)
      : prog_(prog), config_(config) {
    build();
  }

  LpOutcome run() {
    LpOutcome out;
    if (!phase_one()) {
      out.status = LpStatus::Infeasible;
      out.farkas = extract_farkas();
      out.pivots = pivots_;
      return out;
    }
    if (!prog_.objective) {
      out.status = LpStatus::Feasible;
      out.point = extract_point();
      out.pivots = pivots_;
      return out;
    }
    drive_out_artificials();
    const bool bounded = phase_two();
    out.point = extract_point();
    if (bounded) {
      out.status = LpStatus::Optimal;
      Rational val(0);
      for (std::size_t k = 0; k < prog_.num_vars; ++k) {
        val += (*prog_.objective)[k] * out.point[k];
      }
      out.value = val;
    } else {
      out.status = LpStatus::Unbounded;
    }
    out.pivots = pivots_;
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const LinearProgram& prog_;
  const LpConfig& config_;

  std::size_t n_user_ = 0;   // user variables
  std::size_t n_std_ = 0;    // standard-form variable columns
  std::size_t n_slack_ = 0;  // one per <= row
  std::size_t n_art_ = 0;

  // col_of_var_[k] = first std column of user var k; free vars own two
  // adjacent columns (plus, minus).
  std::vector<std::size_t> col_of_var_;
  std::vector<bool> var_free_;
  std::vector<Rational> var_shift_;  // lower bound, 0 for free vars

  std::vector<std::vector<Rational>> rows_;  // m x (ncols)
  std::vector<Rational> rhs_;
  std::vector<Rational> row_sign_;           // sigma per row (+1/-1)
  std::vector<std::size_t> art_col_of_row_;  // kNone if none
  std::vector<std::size_t> slack_col_of_row_;
  std::vector<bool> row_is_eq_;
  std::vector<std::size_t> orig_row_index_;  // index into eq or le lists

  std::vector<std::size_t> basis_;     // basic column per row
  std::vector<Rational> cost_;        // current reduced-cost row
  Rational cost_value_{0};            // current objective of the cost row
  std::vector<bool> col_allowed_;     // artificials get disabled
  std::size_t first_art_col_ = 0;
  std::size_t pivots_ = 0;
  bool infeasible_ = false;
  std::vector<Rational> phase1_duals_;  // pi per row, filled on infeasibility

  std::size_t ncols() const { return n_std_ + n_slack_ + n_art_; }

  void build() {
    n_user_ = prog_.num_vars;
    col_of_var_.resize(n_user_);
    var_free_.resize(n_user_);
    var_shift_.assign(n_user_, Rational(0));
    std::size_t col = 0;
    for (std::size_t k = 0; k < n_user_; ++k) {
      const bool has_bound =
          prog_.lower_bounds.empty() || prog_.lower_bounds[k].has_value();
      var_free_[k] = !has_bound;
      if (has_bound && !prog_.lower_bounds.empty()) {
        var_shift_[k] = *prog_.lower_bounds[k];
      }
      col_of_var_[k] = col;
      col += var_free_[k] ? 2 : 1;
    }
    n_std_ = col;
    n_slack_ = prog_.le_rows.size();

    const std::size_t m = prog_.eq_rows.size() + prog_.le_rows.size();
    rows_.reserve(m);
    rhs_.reserve(m);

    auto shifted_rhs = [&](const std::vector<Rational>& row,
                           const Rational& rhs) {
      Rational r = rhs;
      for (std::size_t k = 0; k < n_user_; ++k) {
        if (!var_free_[k] && var_shift_[k] != 0) r -= row[k] * var_shift_[k];
      }
      return r;
    };

    std::size_t slack_idx = 0;
    std::size_t art_count = 0;
    // First pass to learn which rows need artificials (so columns can be
    // laid out contiguously): eq rows always, le rows with negative
    // shifted rhs.
    std::vector<int> need_art;
    for (std::size_t i = 0; i < prog_.eq_rows.size(); ++i) need_art.push_back(1);
    for (std::size_t j = 0; j < prog_.le_rows.size(); ++j) {
      const Rational r = shifted_rhs(prog_.le_rows[j], prog_.le_rhs[j]);
      need_art.push_back(r < 0 ? 1 : 0);
    }
    for (int x : need_art) art_count += static_cast<std::size_t>(x);
    n_art_ = art_count;
    first_art_col_ = n_std_ + n_slack_;

    std::size_t art_idx = 0;
    auto emit_row = [&](const std::vector<Rational>& urow, const Rational& urhs,
                        bool is_eq, std::size_t orig_idx) {
      std::vector<Rational> row(ncols(), Rational(0));
      Rational r = shifted_rhs(urow, urhs);
      Rational sigma = (r < 0) ? Rational(-1) : Rational(1);
      for (std::size_t k = 0; k < n_user_; ++k) {
        if (urow[k] == 0) continue;
        row[col_of_var_[k]] = sigma * urow[k];
        if (var_free_[k]) row[col_of_var_[k] + 1] = -sigma * urow[k];
      }
      std::size_t slack_col = kNone;
      if (!is_eq) {
        slack_col = n_std_ + slack_idx;
        row[slack_col] = sigma;
        ++slack_idx;
      }
      r = sigma * r;
      std::size_t art_col = kNone;
      const bool needs_art = is_eq || row[slack_col] < 0;
      if (needs_art) {
        art_col = first_art_col_ + art_idx;
        row[art_col] = 1;
        ++art_idx;
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(r);
      row_sign_.push_back(sigma);
      art_col_of_row_.push_back(art_col);
      slack_col_of_row_.push_back(slack_col);
      row_is_eq_.push_back(is_eq);
      orig_row_index_.push_back(orig_idx);
      basis_.push_back(needs_art ? art_col : slack_col);
    };

    for (std::size_t i = 0; i < prog_.eq_rows.size(); ++i) {
      emit_row(prog_.eq_rows[i], prog_.eq_rhs[i], true, i);
    }
    for (std::size_t j = 0; j < prog_.le_rows.size(); ++j) {
      emit_row(prog_.le_rows[j], prog_.le_rhs[j], false, j);
    }
    col_allowed_.assign(ncols(), true);
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    if (++pivots_ > config_.max_pivots) {
      throw resource_limit_error("simplex pivot cap exceeded");
    }
    const Rational inv = 1 / rows_[prow][pcol];
    if (inv != 1) {
      for (auto& v : rows_[prow]) {
        if (v != 0) v *= inv;
      }
      rhs_[prow] *= inv;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == prow) continue;
      const Rational f = rows_[r][pcol];
      if (f == 0) continue;
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (rows_[prow][c] != 0) rows_[r][c] -= f * rows_[prow][c];
      }
      rhs_[r] -= f * rhs_[prow];
    }
    const Rational fc = cost_[pcol];
    if (fc != 0) {
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (rows_[prow][c] != 0) cost_[c] -= fc * rows_[prow][c];
      }
      cost_value_ -= fc * rhs_[prow];
    }
    basis_[prow] = pcol;
  }

  // Minimizes the current cost row with Bland's rule. Returns false on
  // unboundedness.
  bool minimize() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (col_allowed_[c] && cost_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][enter];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return false;
      const std::size_t leaving_col = basis_[leave];
      pivot(leave, enter);
      if (leaving_col >= first_art_col_) col_allowed_[leaving_col] = false;
    }
  }

  void set_cost_for_basis(const std::vector<Rational>& raw_cost) {
    cost_ = raw_cost;
    cost_value_ = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational cb = raw_cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < ncols(); ++c) {
        if (rows_[r][c] != 0) cost_[c] -= cb * rows_[r][c];
      }
      cost_value_ -= cb * rhs_[r];
    }
  }

  bool phase_one() {
    std::vector<Rational> c(ncols(), Rational(0));
    for (std::size_t a = 0; a < n_art_; ++a) c[first_art_col_ + a] = 1;
    set_cost_for_basis(c);
    if (!minimize()) {
      throw std::logic_error("phase I cannot be unbounded");
    }
    // cost_value_ tracks -objective for the chosen sign convention; the
    // phase-I objective value is Sum of artificials = -cost_value_.
    const Rational w = -cost_value_;
    if (w > 0) {
      // Farkas duals: pi_i read off artificial / initial-slack columns.
      phase1_duals_.assign(rows_.size(), Rational(0));
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (art_col_of_row_[r] != kNone) {
          phase1_duals_[r] = 1 - cost_[art_col_of_row_[r]];
        } else {
          phase1_duals_[r] = -cost_[slack_col_of_row_[r]];
        }
      }
      infeasible_ = true;
      return false;
    }
    return true;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < first_art_col_) {
        ++r;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < first_art_col_; ++j) {
        if (rows_[r][j] != 0) {
          c = j;
          break;
        }
      }
      if (c != kNone) {
        pivot(r, c);
        col_allowed_[basis_[r]] = true;  // real column entering basis
        ++r;
      } else {
        // Redundant constraint; remove the row entirely.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        row_sign_.erase(row_sign_.begin() + static_cast<std::ptrdiff_t>(r));
        art_col_of_row_.erase(art_col_of_row_.begin() +
                              static_cast<std::ptrdiff_t>(r));
        slack_col_of_row_.erase(slack_col_of_row_.begin() +
                                static_cast<std::ptrdiff_t>(r));
        row_is_eq_.erase(row_is_eq_.begin() + static_cast<std::ptrdiff_t>(r));
        orig_row_index_.erase(orig_row_index_.begin() +
                              static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (std::size_t a = 0; a < n_art_; ++a) {
      col_allowed_[first_art_col_ + a] = false;
    }
  }

  bool phase_two() {
    // maximize c.x == minimize -c.(std vars); shift constant is dropped
    // (the final value is recomputed from the point).
    std::vector<Rational> c(ncols(), Rational(0));
    for (std::size_t k = 0; k < n_user_; ++k) {
      const Rational& ck = (*prog_.objective)[k];
      if (ck == 0) continue;
      c[col_of_var_[k]] = -ck;
      if (var_free_[k]) c[col_of_var_[k] + 1] = ck;
    }
    set_cost_for_basis(c);
    return minimize();
  }

  std::vector<Rational> extract_point() const {
    std::vector<Rational> std_vals(ncols(), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std_vals[basis_[r]] = rhs_[r];
    }
    std::vector<Rational> x(n_user_);
    for (std::size_t k = 0; k < n_user_; ++k) {
      if (var_free_[k]) {
        x[k] = std_vals[col_of_var_[k]] - std_vals[col_of_var_[k] + 1];
      } else {
        x[k] = std_vals[col_of_var_[k]] + var_shift_[k];
      }
    }
    return x;
  }

  FarkasCertificate extract_farkas() const {
    // User multipliers from phase-I duals: u = -sigma*pi on eq rows,
    // v = -sigma*pi on <= rows, w = u.A + v.G (>= 0 on bounded vars).
    FarkasCertificate cert;
    cert.eq_mult.assign(prog_.eq_rows.size(), Rational(0));
    cert.le_mult.assign(prog_.le_rows.size(), Rational(0));
    cert.bound_mult.assign(n_user_, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational m = -row_sign_[r] * phase1_duals_[r];
      if (row_is_eq_[r]) {
        cert.eq_mult[orig_row_index_[r]] = m;
      } else {
        cert.le_mult[orig_row_index_[r]] = m;
      }
    }
    for (std::size_t k = 0; k < n_user_; ++k) {
      Rational wk(0);
      for (std::size_t i = 0; i < prog_.eq_rows.size(); ++i) {
        wk += cert.eq_mult[i] * prog_.eq_rows[i][k];
      }
      for (std::size_t j = 0; j < prog_.le_rows.size(); ++j) {
        wk += cert.le_mult[j] * prog_.le_rows[j][k];
      }
      cert.bound_mult[k] = wk;
    }
    return cert;
  }
};

}  // namespace

LpOutcome solve(const LinearProgram& prog, const LpConfig& config) {
  prog.validate();
  SimplexTableau tab(prog, config);
  LpOutcome out = tab.run();
  if (out.feasible() && !verify_point(prog, out.point)) {
    throw std::logic_error("simplex returned a non-verifying point");
  }
  if (out.status == LpStatus::Infeasible &&
      (!out.farkas || !verify_farkas(prog, *out.farkas))) {
    throw std::logic_error("simplex returned a non-verifying Farkas certificate");
  }
  return out;
}

bool verify_point(const LinearProgram& prog, const std::vector<Rational>& x) {
  if (x.size() != prog.num_vars) return false;
  for (std::size_t i = 0; i < prog.eq_rows.size(); ++i) {
    Rational lhs(0);
    for (std::size_t k = 0; k < prog.num_vars; ++k) {
      lhs += prog.eq_rows[i][k] * x[k];
    }
    if (lhs != prog.eq_rhs[i]) return false;
  }
  for (std::size_t j = 0; j < prog.le_rows.size(); ++j) {
    Rational lhs(0);
    for (std::size_t k = 0; k < prog.num_vars; ++k) {
      lhs += prog.le_rows[j][k] * x[k];
    }
    if (lhs > prog.le_rhs[j]) return false;
  }
  for (std::size_t k = 0; k < prog.num_vars; ++k) {
    if (prog.lower_bounds.empty()) {
      if (x[k] < 0) return false;
    } else if (prog.lower_bounds[k] && x[k] < *prog.lower_bounds[k]) {
      return false;
    }
  }
  return true;
}

bool verify_farkas(const LinearProgram& prog, const FarkasCertificate& cert) {
  if (cert.eq_mult.size() != prog.eq_rows.size() ||
      cert.le_mult.size() != prog.le_rows.size() ||
      cert.bound_mult.size() != prog.num_vars) {
    return false;
  }
  for (const auto& v : cert.le_mult) {
    if (v < 0) return false;
  }
  for (std::size_t k = 0; k < prog.num_vars; ++k) {
    const bool is_free =
        !prog.lower_bounds.empty() && !prog.lower_bounds[k].has_value();
    if (cert.bound_mult[k] < 0) return false;
    if (is_free && cert.bound_mult[k] != 0) return false;
    Rational combo(0);
    for (std::size_t i = 0; i < prog.eq_rows.size(); ++i) {
      combo += cert.eq_mult[i] * prog.eq_rows[i][k];
    }
    for (std::size_t j = 0; j < prog.le_rows.size(); ++j) {
      combo += cert.le_mult[j] * prog.le_rows[j][k];
    }
    if (combo != cert.bound_mult[k]) return false;
  }
  Rational rhs(0);
  for (std::size_t i = 0; i < prog.eq_rows.size(); ++i) {
    rhs += cert.eq_mult[i] * prog.eq_rhs[i];
  }
  for (std::size_t j = 0; j < prog.le_rows.size(); ++j) {
    rhs += cert.le_mult[j] * prog.le_rhs[j];
  }
  for (std::size_t k = 0; k < prog.num_vars; ++k) {
    if (cert.bound_mult[k] == 0) continue;
    const Rational lb = prog.lower_bounds.empty()
                            ? Rational(0)
                            : prog.lower_bounds[k].value_or(Rational(0));
    rhs -= cert.bound_mult[k] * lb;
  }
  return rhs < 0;
}

std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("linear system shape");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("linear system shape");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t c = col; c < n; ++c) a[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace catmaj::lp
