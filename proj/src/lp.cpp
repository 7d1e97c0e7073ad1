#include "coopgame/lp.hpp"

#include <stdexcept>

namespace coopgame {

namespace {

// Dense exact tableau. Columns: for each original variable j the split pair
// (p_j, q_j) with x_j = p_j - q_j, then one slack per inequality row, then one
// artificial per row. Rows are oriented so the right-hand side is nonnegative.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const int m = static_cast<int>(lp.constraints.size());
    const int v = lp.num_vars;
    int slacks = 0;
    for (const auto& c : lp.constraints)
      if (c.rel != Relation::Equal) ++slacks;
    slack_col_.assign(m, -1);
    art_col_.assign(m, -1);
    ncols_ = 2 * v + slacks + m;
    rows_.assign(m, std::vector<Rational>(ncols_ + 1, Rational(0)));
    row_sign_.assign(m, 1);

    int next_slack = 2 * v;
    for (int k = 0; k < m; ++k) {
      const auto& c = lp.constraints[k];
      if (static_cast<int>(c.coeffs.size()) != v)
        throw std::invalid_argument("lp constraint has wrong arity");
      auto& row = rows_[k];
      for (int j = 0; j < v; ++j) {
        row[2 * j] = c.coeffs[j];
        row[2 * j + 1] = -c.coeffs[j];
      }
      if (c.rel != Relation::Equal) {
        slack_col_[k] = next_slack++;
        row[slack_col_[k]] = c.rel == Relation::LessEq ? Rational(1) : Rational(-1);
      }
      row[ncols_] = c.rhs;
      if (row[ncols_] < 0) {
        row_sign_[k] = -1;
        for (auto& t : row) t = -t;
      }
      art_col_[k] = 2 * v + slacks + k;
      row[art_col_[k]] = 1;
    }
    basis_.assign(m, 0);
    for (int k = 0; k < m; ++k) basis_[k] = art_col_[k];
  }

  int rows() const { return static_cast<int>(rows_.size()); }

  void set_costs(std::vector<Rational> costs) {
    costs_ = std::move(costs);
    costs_.resize(ncols_, Rational(0));
    obj_.assign(ncols_ + 1, Rational(0));
    for (int j = 0; j <= ncols_; ++j) {
      Rational acc = j < ncols_ ? costs_[j] : Rational(0);
      for (int k = 0; k < rows(); ++k) acc -= costs_[basis_[k]] * rows_[k][j];
      obj_[j] = acc;
    }
  }

  Rational objective_value() const {
    Rational acc(0);
    for (int k = 0; k < rows(); ++k) acc += costs_[basis_[k]] * rows_[k][ncols_];
    return acc;
  }

  // One Bland pivot: least-index entering among negative reduced costs;
  // least ratio, then least basis index, leaving.
  enum class Step { Optimal, Pivoted, Unbounded };
  Step step(int* unbounded_col) {
    int enter = -1;
    for (int j = 0; j < ncols_; ++j)
      if (!disabled_[j] && obj_[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return Step::Optimal;
    int leave = -1;
    Rational best;
    for (int k = 0; k < rows(); ++k) {
      if (rows_[k][enter] <= 0) continue;
      Rational ratio = rows_[k][ncols_] / rows_[k][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis_[k] < basis_[leave])) {
        leave = k;
        best = ratio;
      }
    }
    if (leave < 0) {
      if (unbounded_col) *unbounded_col = enter;
      return Step::Unbounded;
    }
    pivot(leave, enter);
    return Step::Pivoted;
  }

  void pivot(int r, int e) {
    auto& prow = rows_[r];
    const Rational inv = Rational(1) / prow[e];
    for (auto& t : prow) t *= inv;
    prow[e] = 1;  // exact, but keep it explicit
    for (int k = 0; k < rows(); ++k) {
      if (k == r) continue;
      eliminate(rows_[k], prow, e);
    }
    eliminate(obj_, prow, e);
    basis_[r] = e;
  }

  static void eliminate(std::vector<Rational>& row, const std::vector<Rational>& prow,
                        int e) {
    if (row[e] == 0) return;
    const Rational f = row[e];
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    row[e] = 0;
  }

  void run(int* unbounded_col, bool* unbounded) {
    *unbounded = false;
    while (true) {
      Step s = step(unbounded_col);
      if (s == Step::Optimal) return;
      if (s == Step::Unbounded) {
        *unbounded = true;
        return;
      }
    }
  }

  // Phase I: minimize the sum of artificials.
  bool phase1() {
    disabled_.assign(ncols_, false);
    std::vector<Rational> costs(ncols_, Rational(0));
    for (int k = 0; k < rows(); ++k) costs[art_col_[k]] = 1;
    set_costs(std::move(costs));
    int dummy;
    bool unbounded;
    run(&dummy, &unbounded);  // bounded below by 0
    return objective_value() == 0;
  }

  // Farkas multipliers for the original constraints (phase I optimum > 0).
  std::vector<Rational> farkas() const {
    std::vector<Rational> u(rows());
    for (int k = 0; k < rows(); ++k) {
      Rational y = Rational(1) - obj_[art_col_[k]];  // c_B B^-1 e_k
      u[k] = Rational(row_sign_[k]) * y;
    }
    return u;
  }

  // After a successful phase I: pivot artificials out of the basis where
  // possible, drop redundant rows, then disable artificial columns.
  void retire_artificials() {
    for (int k = rows() - 1; k >= 0; --k) {
      if (basis_[k] < art_col_[0]) continue;
      int col = -1;
      for (int j = 0; j < art_col_[0]; ++j)
        if (rows_[k][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(k, col);
      } else {
        rows_.erase(rows_.begin() + k);
        basis_.erase(basis_.begin() + k);
      }
    }
    for (int k = 0; k < rows(); ++k)
      for (int a : art_col_) rows_[k][a] = 0;
    for (int a : art_col_) disabled_[a] = true;
  }

  // Phase II over internal costs (minimization).
  void phase2(const std::vector<Rational>& internal_costs, int* unb_col, bool* unb) {
    set_costs(internal_costs);
    run(unb_col, unb);
  }

  std::vector<Rational> current_point() const {
    std::vector<Rational> internal(ncols_, Rational(0));
    for (int k = 0; k < rows(); ++k) internal[basis_[k]] = rows_[k][ncols_];
    return to_original(internal);
  }

  std::vector<Rational> ray_from(int enter) const {
    std::vector<Rational> dir(ncols_, Rational(0));
    dir[enter] = 1;
    for (int k = 0; k < rows(); ++k) dir[basis_[k]] = -rows_[k][enter];
    return to_original(dir);
  }

  std::vector<Rational> to_original(const std::vector<Rational>& internal) const {
    std::vector<Rational> x(lp_.num_vars, Rational(0));
    for (int j = 0; j < lp_.num_vars; ++j)
      x[j] = internal[2 * j] - internal[2 * j + 1];
    return x;
  }

 private:
  const LinearProgram& lp_;
  int ncols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj_;
  std::vector<Rational> costs_;
  std::vector<int> basis_;
  std::vector<int> slack_col_;
  std::vector<int> art_col_;
  std::vector<int> row_sign_;
  std::vector<bool> disabled_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.num_vars) return false;
  for (const auto& c : lp.constraints) {
    Rational lhs = dot(c.coeffs, x);
    switch (c.rel) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

bool valid_infeasibility_certificate(const LinearProgram& lp,
                                     const std::vector<Rational>& y) {
  if (y.size() != lp.constraints.size()) return false;
  std::vector<Rational> combo(lp.num_vars, Rational(0));
  Rational rhs(0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    const auto& c = lp.constraints[k];
    if (c.rel == Relation::LessEq && y[k] > 0) return false;
    if (c.rel == Relation::GreaterEq && y[k] < 0) return false;
    for (int j = 0; j < lp.num_vars; ++j) combo[j] += y[k] * c.coeffs[j];
    rhs += y[k] * c.rhs;
  }
  for (const auto& v : combo)
    if (v != 0) return false;
  return rhs > 0;
}

bool valid_ray(const LinearProgram& lp, const std::vector<Rational>& point,
               const std::vector<Rational>& ray) {
  if (!satisfies(lp, point)) return false;
  bool any = false;
  for (const auto& v : ray) any = any || v != 0;
  if (!any) return false;
  for (const auto& c : lp.constraints) {
    Rational along = dot(c.coeffs, ray);
    if (c.rel == Relation::LessEq && along > 0) return false;
    if (c.rel == Relation::GreaterEq && along < 0) return false;
    if (c.rel == Relation::Equal && along != 0) return false;
  }
  Rational gain = dot(lp.objective, ray);
  return lp.sense == Sense::Minimize ? gain < 0 : gain > 0;
}

LpResult lp_solve(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("objective has wrong arity");

  Tableau tab(lp);
  if (!tab.phase1()) {
    LpInfeasible bad{tab.farkas()};
    if (!valid_infeasibility_certificate(lp, bad.multipliers))
      throw std::logic_error("simplex produced an invalid infeasibility certificate");
    return bad;
  }
  tab.retire_artificials();

  std::vector<Rational> costs(2 * lp.num_vars, Rational(0));
  for (int j = 0; j < lp.num_vars; ++j) {
    Rational c = lp.sense == Sense::Minimize ? lp.objective[j] : -lp.objective[j];
    costs[2 * j] = c;
    costs[2 * j + 1] = -c;
  }
  int unb_col = -1;
  bool unbounded = false;
  tab.phase2(costs, &unb_col, &unbounded);

  if (unbounded) {
    LpUnbounded out{tab.current_point(), tab.ray_from(unb_col)};
    if (!valid_ray(lp, out.point, out.ray))
      throw std::logic_error("simplex produced an invalid unbounded ray");
    return out;
  }

  LpOptimal out;
  out.point = tab.current_point();
  out.value = dot(lp.objective, out.point);
  if (!satisfies(lp, out.point))
    throw std::logic_error("simplex produced an infeasible optimum");
  return out;
}

}  // namespace coopgame
