#include "pipm/preprocess.hpp"

#include <cmath>
#include <vector>

#include "pipm/errors.hpp"

namespace pipm {

StandardLP ensure_full_rank(const StandardLP& lp) {
  validate(lp);
  const int m = lp.rows();
  const int n = lp.cols();
  const double pivot_tol = 1e-10 * lp.A.norm();
  const double rhs_tol = 1e-8 * (1.0 + lp.b.norm());

  // Gaussian elimination over the rows of [A | b], in row order. A row that
  // reduces to (numerically) zero in the A-part is dependent; its reduced b
  // entry is then the mismatch against the combination of kept rows.
  Matrix reduced(0, n);
  Vector reduced_b(0);
  std::vector<int> pivot_col;
  std::vector<int> kept;

  for (int i = 0; i < m; ++i) {
    Vector row = lp.A.row(i).transpose();
    double brow = lp.b[i];
    for (int k = 0; k < reduced.rows(); ++k) {
      const double mult = row[pivot_col[k]] / reduced(k, pivot_col[k]);
      if (mult != 0.0) {
        row -= mult * reduced.row(k).transpose();
        brow -= mult * reduced_b[k];
      }
    }
    int piv;
    const double mag = row.cwiseAbs().maxCoeff(&piv);
    if (mag > pivot_tol) {
      reduced.conservativeResize(reduced.rows() + 1, Eigen::NoChange);
      reduced.row(reduced.rows() - 1) = row.transpose();
      reduced_b.conservativeResize(reduced_b.size() + 1);
      reduced_b[reduced_b.size() - 1] = brow;
      pivot_col.push_back(piv);
      kept.push_back(i);
    } else if (std::abs(brow) > rhs_tol) {
      const std::string name =
          lp.row_names.empty() ? "row " + std::to_string(i) : "row '" + lp.row_names[i] + "'";
      throw InfeasibleError(name + " is a combination of earlier rows but its right-hand side "
                                   "is inconsistent");
    }
  }

  if (static_cast<int>(kept.size()) == m) return lp;

  StandardLP out;
  const int r = static_cast<int>(kept.size());
  out.A.resize(r, n);
  out.b.resize(r);
  out.c = lp.c;
  out.objective_offset = lp.objective_offset;
  out.col_names = lp.col_names;
  if (!lp.row_names.empty()) out.row_names.reserve(r);
  for (int k = 0; k < r; ++k) {
    out.A.row(k) = lp.A.row(kept[k]);
    out.b[k] = lp.b[kept[k]];
    if (!lp.row_names.empty()) out.row_names.push_back(lp.row_names[kept[k]]);
  }
  validate(out);
  return out;
}

}  // namespace pipm
