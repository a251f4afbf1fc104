#pragma once

#include "pipm/lp.hpp"

namespace pipm {

// Returns an equivalent problem whose A has full row rank. Rows are scanned
// in order and a row is dropped when it is (numerically) a linear
// combination of the rows kept so far, with pivot tolerance 1e-10 * ||A||.
// A dropped row whose right-hand side does not match the combination makes
// the problem infeasible and raises InfeasibleError naming the row.
// Full-rank input is returned unchanged; the operation is idempotent.
StandardLP ensure_full_rank(const StandardLP& lp);

}  // namespace pipm
