#include "povm_robust/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "povm_robust/error.hpp"

namespace povm {

std::string_view to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::Optimal:
      return "Optimal";
    case LpStatus::Infeasible:
      return "Infeasible";
    case LpStatus::Unbounded:
      return "Unbounded";
    case LpStatus::IterationLimit:
      return "IterationLimit";
  }
  return "Unknown";
}

void LpProblem::validate() const {
  const std::size_t n = variables();
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(objective.begin(), objective.end(), finite))
    throw Error(ErrorCode::NotFinite, "LP objective has non-finite coefficients");
  if (!bounds.empty() && bounds.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "LP bounds list has the wrong length");
  auto check_block = [&](const std::vector<std::vector<double>>& rows,
                         const std::vector<double>& rhs, const char* name) {
    if (rows.size() != rhs.size())
      throw Error(ErrorCode::ShapeMismatch, std::string("LP ") + name + " rows/rhs mismatch");
    for (const auto& row : rows) {
      if (row.size() != n)
        throw Error(ErrorCode::ShapeMismatch, std::string("LP ") + name + " row has wrong width");
      if (!std::all_of(row.begin(), row.end(), finite))
        throw Error(ErrorCode::NotFinite, std::string("LP ") + name + " row is non-finite");
    }
    if (!std::all_of(rhs.begin(), rhs.end(), finite))
      throw Error(ErrorCode::NotFinite, std::string("LP ") + name + " rhs is non-finite");
  };
  check_block(ge_rows, ge_rhs, "inequality");
  check_block(eq_rows, eq_rhs, "equality");
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr int kDegenerateStreakBeforeBland = 50;
constexpr int kMaxRefactorPasses = 20;
constexpr std::size_t kRefactorInterval = 32;

constexpr double kSingularPivot = 1e-11;
constexpr double kHarrisSlack = 1e-9;

// Dense LU with partial pivoting.
class Lu {
 public:
  // Returns kNone on success, otherwise the first column whose pivot is
  // negligible against the largest entry; pending_row() then names the row
  // that column failed to cover.
  std::size_t factor(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double scale = 1.0;
    for (const auto& row : a)
      for (double v : row) scale = std::max(scale, std::abs(v));
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
      if (std::abs(a[piv][k]) < kSingularPivot * scale) return k;
      std::swap(a[piv], a[k]);
      std::swap(perm_[piv], perm_[k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        a[i][k] /= a[k][k];
        const double f = a[i][k];
        if (f != 0.0)
          for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }
    lu_ = std::move(a);
    return kNone;
  }

  std::size_t pending_row(std::size_t k) const { return perm_[k]; }

  void solve(std::vector<double>& rhs) const {
    const std::size_t n = lu_.size();
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) {
      double v = rhs[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) v -= lu_[i][j] * z[j];
      z[i] = v;
    }
    for (std::size_t i = n; i-- > 0;) {
      double v = z[i];
      for (std::size_t j = i + 1; j < n; ++j) v -= lu_[i][j] * z[j];
      z[i] = v / lu_[i][i];
    }
    rhs = std::move(z);
  }

 private:
  std::vector<std::vector<double>> lu_;
  std::vector<std::size_t> perm_;
};

class Simplex {
 public:
  Simplex(const LpProblem& p, const LpOptions& opt) : problem_(p), opt_(opt) { build(); }

  LpSolution run() {
    LpSolution out;
    // Phase one: minimize the sum of artificials.
    for (std::size_t j = 0; j < width_; ++j) obj(j) = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_std_; ++j) obj(j) -= at(i, j);
      obj(rhs_col()) -= at(i, rhs_col());
    }
    auto status = iterate(n_std_);
    out.pivots = pivots_;
    if (status == LpStatus::IterationLimit) {
      out.status = status;
      return out;
    }
    double bmax = 0.0;
    for (double v : b_) bmax = std::max(bmax, std::abs(v));
    const double phase_one = -obj(rhs_col());
    if (phase_one > opt_.feasibility_tol * (1.0 + bmax)) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    drive_out_artificials();
    phase_one_ = false;

    // Phase two on the original costs; artificials may no longer enter.
    for (std::size_t j = 0; j < width_; ++j) obj(j) = j < n_std_ ? c_[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost_of(basis_[i]);
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) obj(j) -= cb * at(i, j);
    }
    status = iterate(n_std_);
    // Rebuild the tableau from the original data and keep pivoting until
    // the refreshed reduced costs agree that the basis is optimal.
    for (int pass = 0; status == LpStatus::Optimal && pass < kMaxRefactorPasses; ++pass) {
      if (!refactor()) break;
      const std::size_t before = pivots_;
      status = iterate(n_std_);
      if (pivots_ == before) break;
    }
    out.pivots = pivots_;
    out.status = status;
    if (status != LpStatus::Optimal) return out;
    extract(out);
    return out;
  }

 private:
  void build() {
    const std::size_t n = problem_.variables();
    const bool all_nonneg = problem_.bounds.empty();
    pos_col_.assign(n, kNone);
    neg_col_.assign(n, kNone);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = cols++;
      if (!all_nonneg && problem_.bounds[j] == VariableBound::Free) neg_col_[j] = cols++;
    }
    const std::size_t n_ge = problem_.ge_rows.size();
    surplus_col_.resize(n_ge);
    for (std::size_t i = 0; i < n_ge; ++i) surplus_col_[i] = cols++;
    n_std_ = cols;
    m_ = n_ge + problem_.eq_rows.size();
    width_ = n_std_ + m_ + 1;

    c_.assign(n_std_, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      c_[pos_col_[j]] = problem_.objective[j];
      if (neg_col_[j] != kNone) c_[neg_col_[j]] = -problem_.objective[j];
    }

    a_.assign(m_, std::vector<double>(n_std_, 0.0));
    b_.assign(m_, 0.0);
    sign_.assign(m_, 1.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool ge = i < n_ge;
      const auto& row = ge ? problem_.ge_rows[i] : problem_.eq_rows[i - n_ge];
      const double rhs = ge ? problem_.ge_rhs[i] : problem_.eq_rhs[i - n_ge];
      for (std::size_t j = 0; j < n; ++j) {
        a_[i][pos_col_[j]] = row[j];
        if (neg_col_[j] != kNone) a_[i][neg_col_[j]] = -row[j];
      }
      if (ge) a_[i][surplus_col_[i]] = -1.0;
      b_[i] = rhs;
      if (rhs < 0.0) {
        sign_[i] = -1.0;
        for (double& v : a_[i]) v = -v;
        b_[i] = -rhs;
      }
    }

    tableau_.assign((m_ + 1) * width_, 0.0);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_std_; ++j) at(i, j) = a_[i][j];
      at(i, n_std_ + i) = 1.0;
      at(i, rhs_col()) = b_[i];
      basis_[i] = n_std_ + i;
    }
  }

  double& at(std::size_t i, std::size_t j) { return tableau_[i * width_ + j]; }
  double& obj(std::size_t j) { return tableau_[m_ * width_ + j]; }
  std::size_t rhs_col() const { return width_ - 1; }
  double cost_of(std::size_t col) const {
    if (phase_one_) return col < n_std_ ? 0.0 : 1.0;
    return col < n_std_ ? c_[col] : 0.0;
  }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j < width_; ++j) at(r, j) /= p;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = tableau_[i * width_ + c];
      if (f == 0.0) continue;
      double* row = &tableau_[i * width_];
      const double* prow = &tableau_[r * width_];
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Minimum ratio, ties to the smallest basic index, as Bland's rule needs.
  std::size_t ratio_test_bland(std::size_t enter) {
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, enter);
      if (a > opt_.pivot_tol)
        best_ratio = std::min(best_ratio, std::max(0.0, at(i, rhs_col())) / a);
    }
    if (!std::isfinite(best_ratio)) return kNone;
    const double tie = 1e-12 * (1.0 + best_ratio);
    std::size_t leave = kNone;
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, enter);
      if (a <= opt_.pivot_tol) continue;
      if (std::max(0.0, at(i, rhs_col())) / a <= best_ratio + tie &&
          (leave == kNone || basis_[i] < basis_[leave]))
        leave = i;
    }
    return leave;
  }

  // Harris two-pass test: bound the step with the feasibility tolerance as
  // slack, then take the largest pivot among the rows within that bound.
  std::size_t ratio_test_harris(std::size_t enter) {
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, enter);
      if (a > opt_.pivot_tol)
        bound = std::min(bound, (std::max(0.0, at(i, rhs_col())) + kHarrisSlack) / a);
    }
    if (!std::isfinite(bound)) return kNone;
    std::size_t leave = kNone;
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, enter);
      if (a <= opt_.pivot_tol || std::max(0.0, at(i, rhs_col())) / a > bound) continue;
      if (leave == kNone || a > at(leave, enter)) leave = i;
    }
    return leave;
  }

  LpStatus iterate(std::size_t entering_limit) {
    int degenerate_streak = 0;
    while (true) {
      if (pivots_ >= opt_.max_pivots) return LpStatus::IterationLimit;
      const bool bland = degenerate_streak > kDegenerateStreakBeforeBland;
      std::size_t enter = kNone;
      double best = -opt_.optimality_tol;
      for (std::size_t j = 0; j < entering_limit; ++j) {
        const double r = obj(j);
        if (r < best) {
          enter = j;
          if (bland) break;
          best = r;
        }
      }
      if (enter == kNone) return LpStatus::Optimal;

      const std::size_t leave = bland ? ratio_test_bland(enter) : ratio_test_harris(enter);
      if (leave == kNone) return LpStatus::Unbounded;
      // Steps that barely move the objective count as degenerate too: the
      // Harris slack lets tiny positive steps cycle just like zero ones.
      const double step = std::max(0.0, at(leave, rhs_col())) / at(leave, enter);
      const double gain = -obj(enter) * step;
      degenerate_streak = gain <= 1e-12 * (1.0 + std::abs(obj(rhs_col()))) ? degenerate_streak + 1 : 0;
      pivot(leave, enter);
      if (++since_refactor_ >= kRefactorInterval) {
        refactor();
        since_refactor_ = 0;
      }
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_std_) continue;
      std::size_t best = kNone;
      double mag = opt_.pivot_tol;
      for (std::size_t j = 0; j < n_std_; ++j)
        if (std::abs(at(i, j)) > mag) {
          mag = std::abs(at(i, j));
          best = j;
        }
      // No candidate: the row is redundant and its artificial stays at zero.
      if (best != kNone) pivot(i, best);
    }
  }

  // Column of the (sign-flipped) standard-form matrix, artificials included.
  double column_entry(std::size_t i, std::size_t col) const {
    if (col < n_std_) return a_[i][col];
    return col - n_std_ == i ? 1.0 : 0.0;
  }

  // Recomputes every tableau row as B^-1 [A | I | b] and the reduced costs
  // c_j - pi^T A_j with B^T pi = c_B, so optimality is judged with exactly
  // the multipliers that extract() reports. A numerically singular basis
  // is repaired with artificials first; false if that fails.
  bool refactor() {
    Lu lu, lu_t;
    for (std::size_t attempt = 0;; ++attempt) {
      std::vector<std::vector<double>> basis_matrix(m_, std::vector<double>(m_));
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t k = 0; k < m_; ++k) basis_matrix[i][k] = column_entry(i, basis_[k]);
      const std::size_t dependent = lu.factor(std::move(basis_matrix));
      if (dependent == kNone) break;
      if (attempt == m_) return false;
      // Swap the dependent column for the artificial of the row it left
      // uncovered; that artificial has a unit pivot there.
      basis_[dependent] = n_std_ + lu.pending_row(dependent);
    }
    std::vector<std::vector<double>> transpose(m_, std::vector<double>(m_));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) transpose[k][i] = column_entry(i, basis_[k]);
    if (lu_t.factor(std::move(transpose)) != kNone) return false;

    std::vector<double> column(m_);
    for (std::size_t j = 0; j < width_; ++j) {
      for (std::size_t i = 0; i < m_; ++i)
        column[i] = j == rhs_col() ? b_[i] : column_entry(i, j);
      lu.solve(column);
      for (std::size_t i = 0; i < m_; ++i) at(i, j) = column[i];
    }
    for (std::size_t k = 0; k < m_; ++k) {
      for (std::size_t i = 0; i < m_; ++i) at(i, basis_[k]) = i == k ? 1.0 : 0.0;
      at(k, rhs_col()) = std::max(0.0, at(k, rhs_col()));
    }

    std::vector<double> pi(m_);
    for (std::size_t k = 0; k < m_; ++k) pi[k] = cost_of(basis_[k]);
    lu_t.solve(pi);
    double value = 0.0;
    for (std::size_t k = 0; k < m_; ++k) value += cost_of(basis_[k]) * at(k, rhs_col());
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      double r = cost_of(j);
      for (std::size_t i = 0; i < m_; ++i) r -= pi[i] * column_entry(i, j);
      obj(j) = r;
    }
    for (std::size_t k = 0; k < m_; ++k) obj(basis_[k]) = 0.0;
    obj(rhs_col()) = -value;
    return true;
  }

  void extract(LpSolution& out) {
    std::vector<double> x_std(n_std_, 0.0);
    for (std::size_t k = 0; k < m_; ++k)
      if (basis_[k] < n_std_) x_std[basis_[k]] = std::max(0.0, at(k, rhs_col()));

    const std::size_t n = problem_.variables();
    out.x.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      out.x[j] = x_std[pos_col_[j]];
      if (neg_col_[j] != kNone) out.x[j] -= x_std[neg_col_[j]];
    }
    out.value = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.value += problem_.objective[j] * out.x[j];

    // The reduced cost of artificial i is -pi_i.
    const std::size_t n_ge = problem_.ge_rows.size();
    out.ge_duals.resize(n_ge);
    out.eq_duals.resize(problem_.eq_rows.size());
    for (std::size_t i = 0; i < m_; ++i) {
      const double y = -sign_[i] * obj(n_std_ + i);
      if (i < n_ge)
        out.ge_duals[i] = y;
      else
        out.eq_duals[i - n_ge] = y;
    }
  }

  const LpProblem& problem_;
  LpOptions opt_;
  std::vector<std::size_t> pos_col_, neg_col_, surplus_col_;
  std::size_t n_std_ = 0, m_ = 0, width_ = 0;
  std::vector<double> c_;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<double> sign_;
  std::vector<double> tableau_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
  std::size_t since_refactor_ = 0;
  bool phase_one_ = true;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options) {
  problem.validate();
  if (problem.variables() == 0)
    throw Error(ErrorCode::ShapeMismatch, "LP has no variables");
  return Simplex(problem, options).run();
}

}  // namespace povm
