#pragma once

#include <cstdint>

#include "pipm/lp.hpp"
#include "pipm/types.hpp"

namespace pipm {

// Constants entering the activity-prediction bounds and thresholds.
// epsilon is the margin of the original problem, epsilon_perturbed the one
// of the shifted problem; c1 = epsilon_perturbed / n,
// c2 = n sqrt(n) / epsilon_perturbed + n, rho = psi_p / max(tau_p, tau_d).
struct TheoryConstants {
  double epsilon = 0.0;
  double epsilon_perturbed = 0.0;
  double psi_p = 0.0;
  double psi_d = 0.0;
  double tau_p = 0.0;
  double tau_d = 0.0;
  double gamma = 0.01;
  int n = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double rho = 0.0;

  static TheoryConstants make(double epsilon, double epsilon_perturbed, double psi_p,
                              double psi_d, double tau_p, double tau_d, double gamma, int n);
};

// Componentwise positive root of l^2 + (x*_i + s*_i) l - mu_hat = 0 in the
// cancellation-free form 2 mu_hat / (x+s + sqrt((x+s)^2 + 4 mu_hat)); puts
// the complementary pair (x*, s*) exactly on the shifted central path at
// mu_hat. Requires max |x_i s_i| <= 1e-10 and mu_hat > 0.
Vector perfect_perturbation(const Vector& x_star, const Vector& s_star, double mu_hat);

// Componentwise interval [lower, upper] such that any shift vector inside
// keeps (x*+l)(s*+l) within [xi mu_hat, mu_hat / xi]. Requires xi in (0,1).
struct PerturbationInterval {
  Vector lower;
  Vector upper;
  double xi = 0.0;
  double mu_hat = 0.0;
};
PerturbationInterval relaxed_interval(const Vector& x_star, const Vector& s_star, double mu_hat,
                                      double xi);

struct Residuals {
  double r = 0.0;
  double w = 0.0;
};

// General residual pair for an arbitrary point, with s = c - A'y:
//   r = ||(min(x,s), min(y+, Ax-b), min(y-, b-Ax))||
//   w = ||(-s, b-Ax, Ax-b, -x, c'x - b'y)_+||
Residuals error_residuals(const StandardLP& lp, const Vector& x, const Vector& y);

// Specialization for primal-dual feasible points: r = ||min(x, s)||,
// w = ||(-x, -s, x's)_+||. Coincides with the general form when Ax = b and
// A'y + s = c.
Residuals error_residuals_feasible(const Vector& x, const Vector& s);

// Shifted problem in nonnegative variables: data (A, b + A l, c + l).
StandardLP perturbed_problem(const StandardLP& lp, const Vector& lambda);

// Margin of a problem with a unique solution: the smallest of the inactive
// x*_i and the active s*_i, with activity decided at activity_tol.
double solution_margin(const Vector& x_star, const Vector& s_star, double activity_tol = 1e-5);

// Smallest inactive primal value (psi_p when the solution is unique);
// +infinity when every index is active.
double min_inactive_value(const Vector& x_star, double activity_tol = 1e-5);
// Smallest strictly-active dual slack (psi_d); +infinity when none.
double min_strictly_active_value(const Vector& s_star, double activity_tol = 1e-5);

// Sampling-based lower bound for the error-bound constants: maximizes
// ||x - x*|| / (r + w) (and the dual analogue) over strictly feasible
// points of the shifted problem, with local coordinate refinement whenever
// a sample improves the running maximum. Deterministic per seed and
// monotone in sample_count.
struct TauOptions {
  int sample_count = 2000;
  std::uint64_t seed = 1;
  Vector lambda;  // empty: 1e-2 * ones
};
struct TauEstimate {
  double tau_p = 0.0;
  double tau_d = 0.0;
};
TauEstimate estimate_tau(const StandardLP& lp, const TauOptions& options = {});

// Threshold triple: mu_max_lambda from (psi_p, epsilon_perturbed, tau, n),
// mu_bar_max_lambda = epsilon_perturbed^2 gamma / n^2 and
// mu_max = epsilon^2 gamma / n^2.
struct MuThresholds {
  double mu_max_lambda = 0.0;
  double mu_bar_max_lambda = 0.0;
  double mu_max = 0.0;
};
MuThresholds mu_thresholds(const TheoryConstants& tc);

}  // namespace pipm
