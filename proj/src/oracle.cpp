#include "pipm/oracle.hpp"

#include "pipm/errors.hpp"
#include "pipm/ipm.hpp"
#include "pipm/simplex.hpp"

namespace pipm {
namespace {

IndexSet active_below(const Vector& x, double tol) {
  IndexSet out;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < tol) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

OracleSolution oracle_solve(const StandardLP& lp, OracleKind kind) {
  OracleSolution sol;
  if (kind == OracleKind::Simplex) {
    const Basis cold = build_basis(lp, IndexSet{}, Vector::Zero(lp.cols()));
    const SimplexResult r = revised_simplex(lp, cold);
    if (r.status == SimplexStatus::Unbounded) throw OracleError("problem is unbounded");
    if (r.status != SimplexStatus::Optimal) {
      throw OracleError("simplex oracle did not reach optimality");
    }
    sol.x = r.x;
    Vector cb(lp.rows());
    for (int i = 0; i < lp.rows(); ++i) cb[i] = lp.c[r.final_basis.columns[i]];
    sol.y = r.final_basis.factor->transpose().solve(cb);
    sol.s = lp.c - lp.A.transpose() * sol.y;
    sol.objective = r.objective;
    sol.label.source = ActiveSetLabel::Source::SimplexOracle;
  } else {
    SolveOptions opts;
    opts.initial_perturbation = 0.0;
    opts.relres_tol = 1e-8;
    opts.max_iters = 100;
    const SolveTrace trace = solve(lp, opts);
    if (trace.status != SolveStatus::Converged) {
      throw OracleError("path-following oracle did not converge to relres < 1e-8");
    }
    const Iterate& it = trace.last().it;
    sol.x = it.x;
    sol.y = it.y;
    sol.s = it.s;
    sol.objective = lp.objective(it.x);
    sol.label.source = ActiveSetLabel::Source::IpmOracle;
  }
  sol.label.indices = active_below(sol.x, kActivityTol);
  return sol;
}

ActiveSetLabel actual_active_set(const StandardLP& lp, OracleKind kind) {
  return oracle_solve(lp, kind).label;
}

}  // namespace pipm
