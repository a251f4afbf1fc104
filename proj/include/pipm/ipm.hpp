#pragma once

#include <optional>
#include <vector>

#include "pipm/activity.hpp"
#include "pipm/lp.hpp"

namespace pipm {

struct Iterate {
  Vector x;  // n
  Vector y;  // m
  Vector s;  // n
  int k = 0;
};

// Nonnegative shifts relaxing x >= -lambda and s >= -phi, together with
// their shrink parameters. Zero vectors reproduce the unperturbed method
// exactly.
struct PerturbationState {
  Vector lambda;  // n, >= 0
  Vector phi;     // n, >= 0
  double eta = 1.0;   // scale applied when the new iterate stays positive
  double zeta = 0.5;  // blend towards -min(x) when a component is nonpositive

  static PerturbationState zero(int n, double eta = 1.0, double zeta = 0.5);
  static PerturbationState uniform(int n, double level, double eta = 1.0, double zeta = 0.5);
};

struct SolveOptions {
  double sigma_cap = 0.1;        // centering: sigma = min(sigma_cap, sigma_mu_scale * mu)
  double sigma_mu_scale = 100.0;
  double step_fraction = 0.9995;  // fraction of the step to the boundary
  int max_iters = 100;

  // Stopping: iter_exact runs exactly that many iterations and excludes the
  // other two; mu_cap and relres_tol may be combined, first satisfied wins
  // (checked in that order after the predict step).
  std::optional<double> mu_cap;
  std::optional<double> relres_tol;
  std::optional<int> iter_exact;

  double initial_perturbation = 1e-2;  // level for both shift vectors
  double eta = 1.0;
  double zeta = 0.5;
  double cutoff = 1e-5;  // threshold C for the activity predictor
};

enum class SolveStatus { Converged, IterLimit, IllConditioned };
enum class StopReason { MuCap, RelRes, IterExact, MaxIters, Failure };

struct TraceRow {
  int k = 0;
  Iterate it;
  // The shifts active during the step that produced this iterate (for the
  // starting row, the initial shifts).
  PerturbationState pert;
  double mu = 0.0;
  double relres = 0.0;
  double alpha_p = 0.0;
  double alpha_d = 0.0;
  double sigma = 0.0;
  ActivityPartition partition;
};

struct SolveTrace {
  TraceRow start;               // k = 0
  std::vector<TraceRow> rows;   // k = 1..iterations()
  SolveStatus status = SolveStatus::IterLimit;
  StopReason reason = StopReason::MaxIters;
  PerturbationState final_pert;
  int failed_iteration = -1;    // set when status == IllConditioned

  int iterations() const { return static_cast<int>(rows.size()); }
  const TraceRow& at(int k) const { return k == 0 ? start : rows[k - 1]; }
  const TraceRow& last() const { return rows.empty() ? start : rows.back(); }

  // One row per iteration: k, mu_lambda, relres, alpha_p, alpha_d,
  // n_active, n_inactive, n_undetermined, max_lambda, max_phi.
  void write_csv(std::ostream& out) const;
};

// Least-squares starting point with nonnegativity shifts; x0 > 0 and s0 > 0.
Iterate mehrotra_start(const StandardLP& lp);

// mu_lambda = (x + lambda)'(s + phi) / n.
double duality_measure(const Iterate& it, const PerturbationState& p);

// ||(Ax - b, A'y + s - c, (x+lambda).*(s+phi) - mu_lambda e)|| scaled by
// 1 + max(||b||, ||c||).
double relative_residual(const StandardLP& lp, const Iterate& it, const PerturbationState& p);

struct Direction {
  Vector dx, dy, ds;
};

// Newton step for the shifted central-path equations with centering sigma,
// via the reduced symmetric indefinite (augmented) system. The
// back-substituted residual of the full 3-block system is brought below
// 1e-8 * (1 + ||rhs||) with iterative refinement; SingularError otherwise.
Direction newton_direction(const StandardLP& lp, const Iterate& it, const PerturbationState& p,
                           double sigma);

struct StepLengths {
  double alpha_p = 1.0;
  double alpha_d = 1.0;
};

// Largest fraction-damped steps keeping x + alpha dx + lambda > 0 and
// s + alpha ds + phi > 0, capped at 1.
StepLengths step_lengths(const Iterate& it, const Direction& dir, const PerturbationState& p,
                         double fraction);

// Shrink rule: with t = min(x), lambda' = eta*lambda if t > 0, else
// (1-zeta)*lambda + zeta*(-t)*e; the dual side uses v = min(s) and phi.
// Requires x + lambda > 0 and s + phi > 0; guarantees the same for the
// output shifts.
PerturbationState shrink_perturbations(const Iterate& next_it, PerturbationState p);

// Full loop: solve -> step -> predict -> terminate -> shrink, per iteration.
// The overload without an explicit PerturbationState builds uniform shifts
// from options.initial_perturbation (zero level gives the unperturbed
// method).
SolveTrace solve(const StandardLP& lp, const SolveOptions& options, PerturbationState initial);
SolveTrace solve(const StandardLP& lp, const SolveOptions& options);

}  // namespace pipm
