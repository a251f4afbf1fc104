#pragma once

#include <vector>

#include "pipm/types.hpp"

namespace pipm {

// Dense symmetric indefinite factorization (Bunch-Kaufman pivoting via
// LAPACK dsytrf) with multiple right-hand-side solves. The matrix is taken
// by value; only its lower triangle is referenced.
class SymmetricIndefiniteSolver {
 public:
  // Throws SingularError when the factorization detects exact singularity.
  explicit SymmetricIndefiniteSolver(Matrix K);

  Vector solve(const Vector& rhs) const;

 private:
  Matrix factors_;
  std::vector<int> ipiv_;
};

}  // namespace pipm
