#pragma once

#include "pipm/lp.hpp"
#include "pipm/types.hpp"

namespace pipm {

// Variables below this value count as active when reading a solution.
inline constexpr double kActivityTol = 1e-5;

enum class OracleKind { Simplex, Ipm };

struct ActiveSetLabel {
  IndexSet indices;  // sorted, 0-based
  enum class Source { SimplexOracle, IpmOracle, Predicted } source = Source::Predicted;
};

struct OracleSolution {
  Vector x, y, s;
  double objective = 0.0;
  ActiveSetLabel label;
};

// Solves the problem to optimality with the in-repo revised simplex or the
// unperturbed path-following method (relative residual < 1e-8) and reads
// off {i : x*_i < 1e-5}. Throws OracleError when the solve does not reach
// optimality.
OracleSolution oracle_solve(const StandardLP& lp, OracleKind kind);
ActiveSetLabel actual_active_set(const StandardLP& lp, OracleKind kind);

}  // namespace pipm
