#pragma once

#include <string>
#include <vector>

#include "pipm/types.hpp"

namespace pipm {

// Standard-form problem data: min c'x s.t. Ax = b, x >= 0, with the dual
// max b'y s.t. A'y + s = c, s >= 0. Requires m <= n; after preprocessing A
// has full row rank and all entries are finite.
struct StandardLP {
  Matrix A;  // m x n, dense
  Vector b;  // m
  Vector c;  // n
  // Constant added to c'x when reporting objective values (from folded
  // bounds and eliminated fixed variables).
  double objective_offset = 0.0;
  // Optional labels; empty when the problem was not read from a file.
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;

  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }

  double objective(const Vector& x) const { return c.dot(x) + objective_offset; }
};

// Throws ContractError unless dimensions agree, m <= n, and all data finite.
void validate(const StandardLP& lp);

}  // namespace pipm
