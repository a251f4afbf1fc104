#pragma once

#include <string>

#include "pipm/lp.hpp"

namespace pipm {

// Reads a fixed-format MPS file (NAME/ROWS/COLUMNS/RHS/RANGES/BOUNDS) and
// returns the problem in standard form:
//   - the first N row is the objective; any further N rows are dropped;
//   - inequality rows gain nonnegative slacks; ranged rows become an
//     equality with a bounded slack;
//   - simple bounds are folded by shifts and slack rows so every variable
//     satisfies x >= 0; free variables split into a positive and a negative
//     part; bound types other than UP/LO/FX/FR are rejected;
//   - constraint rows with no coefficients are dropped after a consistency
//     check, and variables pinned by a singleton equality row are
//     substituted out (cascading until stable).
// Throws ParseError (with line number) on malformed input and
// InfeasibleError when a removed row or pinned variable is inconsistent.
StandardLP load_mps(const std::string& path);

}  // namespace pipm
