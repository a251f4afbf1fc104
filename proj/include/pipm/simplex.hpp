#pragma once

#include <memory>
#include <vector>

#include "pipm/lp.hpp"
#include "pipm/types.hpp"

namespace pipm {

// An ordered set of m column indices whose submatrix of A is nonsingular,
// with its factorization attached.
struct Basis {
  std::vector<int> columns;
  std::shared_ptr<const Eigen::PartialPivLU<Matrix>> factor;
  double rcond = 0.0;

  IndexSet sorted_columns() const {
    IndexSet s(columns.begin(), columns.end());
    std::sort(s.begin(), s.end());
    return s;
  }
};

// Builds a starting basis from a predicted active set: greedily takes
// independent columns over the predicted-inactive complement in ascending
// index order, then completes rank with predicted-active columns in
// ascending order of their dual slack values. Pivot tolerance for the
// independence test is 1e-10 * ||A||. Throws SingularError if rank m cannot
// be reached or the built basis is numerically singular.
Basis build_basis(const StandardLP& lp, const IndexSet& predicted_active, const Vector& s);

enum class SimplexStatus { Optimal, Unbounded, IterLimit, Failed };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Failed;
  int iterations = 0;
  double objective = 0.0;
  Vector x;
  Basis final_basis;
};

// Primal revised simplex with Dantzig pricing and the classical ratio test.
// An infeasible starting basic solution triggers a composite (artificial-
// cost, big-M free) phase 1 first; iterations are summed over phases.
// Bland's rule engages after 5m consecutive degenerate pivots.
SimplexResult revised_simplex(const StandardLP& lp, const Basis& start,
                              int iter_limit = 100000);

// |symmetric difference| / |union| of the two column sets.
double basis_relative_difference(const Basis& b1, const Basis& b2);

// -log2(iter_perturbed / iter_unperturbed); 0 when both are equal (or both
// zero), signed infinity when exactly one is zero.
double relative_iteration_count(int iter_perturbed, int iter_unperturbed);

}  // namespace pipm
