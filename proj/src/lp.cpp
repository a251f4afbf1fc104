#include "pipm/lp.hpp"

#include <cmath>

#include "pipm/errors.hpp"

namespace pipm {

void validate(const StandardLP& lp) {
  const int m = lp.rows();
  const int n = lp.cols();
  if (lp.b.size() != m || lp.c.size() != n) {
    throw ContractError("problem data dimensions disagree");
  }
  if (m > n) {
    throw ContractError("standard form requires m <= n, got m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
  }
  if (!lp.A.allFinite() || !lp.b.allFinite() || !lp.c.allFinite()) {
    throw ContractError("problem data contains non-finite entries");
  }
  if (!lp.row_names.empty() && static_cast<int>(lp.row_names.size()) != m) {
    throw ContractError("row label count does not match m");
  }
  if (!lp.col_names.empty() && static_cast<int>(lp.col_names.size()) != n) {
    throw ContractError("column label count does not match n");
  }
}

}  // namespace pipm
