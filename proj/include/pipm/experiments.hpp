#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pipm/activity.hpp"
#include "pipm/generators.hpp"
#include "pipm/ipm.hpp"
#include "pipm/theory.hpp"

namespace pipm {

// Algorithmic knobs shared by every experiment.
struct IpmParams {
  double lambda0 = 1e-2;  // initial shift level for the perturbed run
  double eta = 1.0;
  double zeta = 0.5;
  double cutoff = 1e-5;
  double step_fraction = 0.9995;
  int max_iters = 100;
};

struct RandomBatch {
  InstanceKind kind = InstanceKind::FeasiblePoint;
  int count = 100;
  std::uint64_t seed = 1;
  GeneratorLimits limits;
};

struct MpsDir {
  std::string path;  // every *.mps file inside, sorted by name
};

using ProblemSource = std::variant<RandomBatch, MpsDir>;

struct ProblemFailure {
  int problem = 0;
  std::string name;
  std::string what;
};

// ---------------------------------------------------------------------------
// Prediction-ratio sweep: run both algorithms to the last grid iteration,
// compare the stateful predicted active set at each grid point against the
// oracle active sets from the in-repo simplex and path-following solvers.

struct RatioSweepConfig {
  ProblemSource source;
  std::vector<int> grid;  // strictly increasing, entries >= 0
  IpmParams ipm;
  int jobs = 1;
};

struct RatioRow {
  int problem = 0;
  std::string name;
  std::uint64_t seed = 0;
  int m = 0, n = 0;
  int k = 0;       // iteration at which the prediction was read
  int offset = 0;  // k - M for the tail sweep; 0 in the plain sweep
  double relres_perturbed = 0.0;
  double relres_unperturbed = 0.0;
  PredictionRatios p_vs_simplex, p_vs_ipm, u_vs_simplex, u_vs_ipm;
};

struct RatioAggregate {
  int key = 0;  // grid iteration (plain sweep) or offset (tail sweep)
  int problems = 0;
  double relres_perturbed = 0.0;
  double relres_unperturbed = 0.0;
  PredictionRatios p_vs_simplex, p_vs_ipm, u_vs_simplex, u_vs_ipm;
};

struct RatioSweepReport {
  std::vector<RatioRow> rows;
  std::vector<RatioAggregate> aggregates;
  std::vector<ProblemFailure> failures;
  bool offset_axis = false;  // tail sweep: aggregate key is k - M
};

RatioSweepReport run_ratio_sweep(const RatioSweepConfig& cfg);

// Tail variant for problems of widely varying length: solve unperturbed to
// the target residual, note the iteration count M, then compare predictions
// over the last ten iterations up to and including M.
struct NetlibSweepConfig {
  std::string mps_dir;
  IpmParams ipm;
  double relres_target = 1e-8;
  int jobs = 1;
};

RatioSweepReport run_ratio_sweep_netlib(const NetlibSweepConfig& cfg);

// ---------------------------------------------------------------------------
// Crossover: stop the perturbed run at mu < mu_cap (or relres < relres_tol
// when configured, first satisfied wins) after K iterations, run the
// unperturbed method for exactly K iterations, build a starting basis from
// each prediction and count simplex iterations to optimality.

struct CrossoverConfig {
  ProblemSource source;
  IpmParams ipm;
  double mu_cap = 1e-3;
  std::optional<double> relres_tol;  // set for right-hand sides of large norm
  int simplex_iter_limit = 100000;
  int jobs = 1;
};

struct CrossoverRow {
  int problem = 0;
  std::string name;
  std::uint64_t seed = 0;
  int m = 0, n = 0;
  int ipm_iters = 0;  // K, identical for both runs by construction
  double mu_perturbed = 0.0;
  double mu_unperturbed = 0.0;
  double basis_diff = 0.0;
  bool simplex_ok_perturbed = false;
  bool simplex_ok_unperturbed = false;
  int simplex_iters_perturbed = -1;
  int simplex_iters_unperturbed = -1;
  double rl = 0.0;  // finite only when both simplex runs succeeded
};

struct CrossoverAggregate {
  int problems = 0;  // rows where both simplex runs succeeded
  double mean_simplex_perturbed = 0.0;
  double mean_simplex_unperturbed = 0.0;
  double iteration_ratio = 0.0;  // mean_p / mean_u
  double mean_ipm_iters = 0.0;
  double mean_mu_perturbed = 0.0;
  double mean_mu_unperturbed = 0.0;
  double mean_basis_diff = 0.0;
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;
  CrossoverAggregate aggregate;
  std::vector<ProblemFailure> failures;
};

CrossoverReport run_crossover(const CrossoverConfig& cfg);

// ---------------------------------------------------------------------------
// Deterministic CSV + SVG emission. rows.csv / aggregates.csv always appear
// (headers even when empty); charts only when there is data.

void emit_ratio_report(const RatioSweepReport& report, const std::string& out_dir);
void emit_crossover_report(const CrossoverReport& report, const std::string& out_dir);

// ---------------------------------------------------------------------------
// Built-in two-variable demo (min x1 + 2 x2 s.t. x1 + x2 = 1, x >= 0) and
// its threshold study with shifts (0.01, 0.05).

StandardLP demo_problem();
Vector demo_perturbation();

struct ThresholdReport {
  Vector x_perturbed;  // solution of the shifted problem, original variables
  Vector y_perturbed;
  Vector s_perturbed;
  TheoryConstants constants;
  MuThresholds thresholds;
  IndexSet predicted_active;  // cutoff prediction at the shifted solution
  double cutoff = 0.0;        // psi_p / 2

  std::string to_text() const;
};

ThresholdReport threshold_report(double gamma = 0.01, int tau_samples = 2000,
                                 std::uint64_t tau_seed = 1);

}  // namespace pipm
