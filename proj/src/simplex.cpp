#include "pipm/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pipm/errors.hpp"

namespace pipm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Incremental column-independence filter: candidate columns are reduced
// against the accepted ones (Gaussian elimination with per-column max
// pivots) and accepted when a residual entry survives the tolerance.
class IndependenceFilter {
 public:
  IndependenceFilter(int m, double tol) : m_(m), tol_(tol) {}

  bool try_add(const Vector& col) {
    Vector v = col;
    for (size_t k = 0; k < reduced_.size(); ++k) {
      const double mult = v[pivot_row_[k]] / reduced_[k][pivot_row_[k]];
      if (mult != 0.0) v -= mult * reduced_[k];
    }
    int piv;
    if (v.cwiseAbs().maxCoeff(&piv) <= tol_) return false;
    reduced_.push_back(std::move(v));
    pivot_row_.push_back(piv);
    return true;
  }

  int rank() const { return static_cast<int>(reduced_.size()); }
  bool full() const { return rank() == m_; }

 private:
  int m_;
  double tol_;
  std::vector<Vector> reduced_;
  std::vector<int> pivot_row_;
};

Matrix gather_columns(const Matrix& A, const std::vector<int>& cols) {
  Matrix B(A.rows(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) B.col(static_cast<Eigen::Index>(k)) = A.col(cols[k]);
  return B;
}

Basis finalize_basis(const StandardLP& lp, std::vector<int> columns, bool check_cond) {
  Basis basis;
  basis.columns = std::move(columns);
  auto lu = std::make_shared<Eigen::PartialPivLU<Matrix>>(gather_columns(lp.A, basis.columns));
  basis.rcond = lu->rcond();
  basis.factor = std::move(lu);
  if (check_cond && !(basis.rcond > 1e-12)) {
    throw SingularError("basis condition estimate " + std::to_string(1.0 / basis.rcond) +
                        " exceeds 1e12");
  }
  return basis;
}

}  // namespace

Basis build_basis(const StandardLP& lp, const IndexSet& predicted_active, const Vector& s) {
  validate(lp);
  const int m = lp.rows();
  const int n = lp.cols();
  const double tol = 1e-10 * lp.A.norm();

  IndependenceFilter filter(m, tol);
  std::vector<int> chosen;
  chosen.reserve(m);

  for (const int j : complement(predicted_active, n)) {
    if (filter.full()) break;
    if (filter.try_add(lp.A.col(j))) chosen.push_back(j);
  }

  if (!filter.full()) {
    // Complete with predicted-active columns ordered by ascending dual
    // slack, ties by index.
    std::vector<int> order(predicted_active.begin(), predicted_active.end());
    std::stable_sort(order.begin(), order.end(),
                     [&s](int a, int b) { return s[a] < s[b]; });
    for (const int j : order) {
      if (filter.full()) break;
      if (filter.try_add(lp.A.col(j))) chosen.push_back(j);
    }
  }

  if (!filter.full()) {
    throw SingularError("could not extend the predicted set to a rank-" + std::to_string(m) +
                        " basis; is A full row rank?");
  }
  return finalize_basis(lp, std::move(chosen), true);
}

namespace {

struct Pricing {
  int entering = -1;
  double reduced_cost = 0.0;
};

// Most negative reduced cost; under Bland, smallest index with a negative
// one.
Pricing price(const StandardLP& lp, const std::vector<char>& in_basis, const Vector& y,
              const Vector& costs, double opt_tol, bool bland) {
  Pricing out;
  const int n = lp.cols();
  for (int j = 0; j < n; ++j) {
    if (in_basis[j]) continue;
    const double z = costs[j] - lp.A.col(j).dot(y);
    if (z < -opt_tol && (out.entering < 0 || (!bland && z < out.reduced_cost))) {
      out.entering = j;
      out.reduced_cost = z;
      if (bland) break;
    }
  }
  return out;
}

}  // namespace

SimplexResult revised_simplex(const StandardLP& lp, const Basis& start, int iter_limit) {
  validate(lp);
  const int m = lp.rows();
  const int n = lp.cols();
  if (static_cast<int>(start.columns.size()) != m) {
    throw ContractError("starting basis must have exactly m columns");
  }

  const double feas_tol = 1e-9 * (1.0 + lp.b.norm());
  const double opt_tol = 1e-9;
  const double piv_tol = 1e-11 * (1.0 + lp.A.norm());
  const double degen_tol = 1e-12;

  std::vector<int> basic = start.columns;
  std::vector<char> in_basis(n, 0);
  for (const int j : basic) in_basis[j] = 1;

  SimplexResult res;
  res.iterations = 0;
  int degenerate_streak = 0;
  bool bland = false;

  Vector phase1_costs = Vector::Zero(n);  // rebuilt each phase-1 iteration

  while (res.iterations < iter_limit) {
    Eigen::PartialPivLU<Matrix> lu(gather_columns(lp.A, basic));
    Vector xb = lu.solve(lp.b);

    const bool feasible = xb.minCoeff() >= -feas_tol;

    Vector y;
    Pricing pick;
    if (feasible) {
      Vector cb(m);
      for (int i = 0; i < m; ++i) cb[i] = lp.c[basic[i]];
      y = lu.transpose().solve(cb);
      pick = price(lp, in_basis, y, lp.c, opt_tol, bland);
      if (pick.entering < 0) {
        res.status = SimplexStatus::Optimal;
        res.x = Vector::Zero(n);
        for (int i = 0; i < m; ++i) res.x[basic[i]] = std::max(xb[i], 0.0);
        res.objective = lp.objective(res.x);
        res.final_basis = finalize_basis(lp, basic, false);
        return res;
      }
    } else {
      // Composite phase 1: basic variables below zero get cost -1, so the
      // objective is the total infeasibility.
      Vector db = Vector::Zero(m);
      for (int i = 0; i < m; ++i) {
        if (xb[i] < -feas_tol) db[i] = -1.0;
      }
      y = lu.transpose().solve(db);
      phase1_costs.setZero();
      pick = price(lp, in_basis, y, phase1_costs, opt_tol, bland);
      if (pick.entering < 0) {
        res.status = SimplexStatus::Failed;  // no feasible point
        return res;
      }
    }

    const Vector w = lu.solve(lp.A.col(pick.entering));

    int leaving = -1;
    double step = kInf;
    for (int i = 0; i < m; ++i) {
      double t = kInf;
      if (feasible || xb[i] >= -feas_tol) {
        if (w[i] > piv_tol) t = std::max(xb[i], 0.0) / w[i];
      } else if (w[i] < -piv_tol) {
        t = xb[i] / w[i];  // infeasible basic rising to its bound
      }
      if (t < step - degen_tol || (t < step + degen_tol && leaving >= 0 &&
                                   basic[i] < basic[leaving])) {
        step = t;
        leaving = i;
      }
    }

    if (leaving < 0) {
      if (feasible) {
        res.status = SimplexStatus::Unbounded;
        return res;
      }
      res.status = SimplexStatus::Failed;  // cannot happen: infeasibility is bounded below
      return res;
    }

    in_basis[basic[leaving]] = 0;
    in_basis[pick.entering] = 1;
    basic[leaving] = pick.entering;
    ++res.iterations;

    if (step <= degen_tol) {
      if (++degenerate_streak > 5 * m) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }
  }

  res.status = SimplexStatus::IterLimit;
  return res;
}

double basis_relative_difference(const Basis& b1, const Basis& b2) {
  const IndexSet s1 = b1.sorted_columns();
  const IndexSet s2 = b2.sorted_columns();
  const IndexSet uni = set_union(s1, s2);
  if (uni.empty()) return 0.0;
  const IndexSet inter = set_intersection(s1, s2);
  return static_cast<double>(uni.size() - inter.size()) / static_cast<double>(uni.size());
}

double relative_iteration_count(int iter_perturbed, int iter_unperturbed) {
  if (iter_perturbed < 0 || iter_unperturbed < 0) {
    throw ContractError("iteration counts must be nonnegative");
  }
  if (iter_perturbed == iter_unperturbed) return 0.0;
  if (iter_unperturbed == 0) return -kInf;
  if (iter_perturbed == 0) return kInf;
  return -std::log2(static_cast<double>(iter_perturbed) /
                    static_cast<double>(iter_unperturbed));
}

}  // namespace pipm
