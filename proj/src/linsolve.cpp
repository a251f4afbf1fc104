#include "pipm/linsolve.hpp"

#include <lapacke.h>

#include "pipm/errors.hpp"

namespace pipm {

static_assert(sizeof(lapack_int) == sizeof(int), "ipiv storage assumes 32-bit lapack_int");

SymmetricIndefiniteSolver::SymmetricIndefiniteSolver(Matrix K)
    : factors_(std::move(K)), ipiv_(factors_.rows()) {
  const auto n = static_cast<lapack_int>(factors_.rows());
  if (factors_.cols() != factors_.rows()) throw ContractError("matrix must be square");
  const lapack_int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, factors_.data(), n,
                                         ipiv_.data());
  if (info > 0) {
    throw SingularError("symmetric indefinite factorization hit a zero pivot at index " +
                        std::to_string(info));
  }
  if (info < 0) throw Error("dsytrf: illegal argument " + std::to_string(-info));
}

Vector SymmetricIndefiniteSolver::solve(const Vector& rhs) const {
  const auto n = static_cast<lapack_int>(factors_.rows());
  Vector x = rhs;
  const lapack_int info = LAPACKE_dsytrs(LAPACK_COL_MAJOR, 'L', n, 1, factors_.data(), n,
                                         ipiv_.data(), x.data(), n);
  if (info != 0) throw Error("dsytrs: illegal argument " + std::to_string(-info));
  return x;
}

}  // namespace pipm
