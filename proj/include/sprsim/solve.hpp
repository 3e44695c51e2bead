#pragma once

#include <Eigen/Cholesky>
#include <limits>
#include <string>

#include "sprsim/types.hpp"

namespace sprsim {

// Solves g * x = rhs for Hermitian positive-definite g. Pivoted Cholesky with
// an explicit pivot-ratio test: plain LLT happily factors a numerically
// rank-deficient Gram matrix, which must throw here instead.
inline MatC solve_hermitian_pd(const MatC& g, const MatC& rhs,
                               const std::string& context) {
  Eigen::LDLT<MatC> ldlt(g);
  VecD d = ldlt.vectorD().real();
  const double d_max = d.size() > 0 ? d.maxCoeff() : 0.0;
  const double tol = d_max * static_cast<double>(g.rows()) *
                     std::numeric_limits<double>::epsilon() * 64.0;
  if (ldlt.info() != Eigen::Success || d_max <= 0.0 || d.minCoeff() <= tol)
    throw SingularMatrixError(context + ": singular Gram matrix");
  return ldlt.solve(rhs);
}

}  // namespace sprsim
