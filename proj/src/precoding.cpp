#include "sprsim/precoding.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <string>

#include "sprsim/solve.hpp"

namespace sprsim {

namespace {

// Shared by the ZF variants: W = lifted * (lifted^H lifted)^-1 / sqrt(gamma),
// gamma = trace of that inverse over K. Columns are equilibrated first so the
// rank test is independent of the users' power spread.
MatC zf_from_columns(const MatC& lifted, int cell, double* gamma_out) {
  const std::string ctx = "zf precoder, cell " + std::to_string(cell);
  const int k = static_cast<int>(lifted.cols());
  VecD norms = lifted.colwise().norm().transpose();
  if (norms.minCoeff() <= 0.0)
    throw SingularMatrixError(ctx + ": zero estimate column");
  VecD inv = norms.cwiseInverse();
  MatC ln = lifted * inv.asDiagonal();
  MatC gninv =
      solve_hermitian_pd(ln.adjoint() * ln, MatC::Identity(k, k), ctx);
  double gamma =
      (gninv.diagonal().real().array() * inv.array().square()).sum() /
      static_cast<double>(k);
  *gamma_out = gamma;
  return ln * gninv * inv.asDiagonal() / std::sqrt(gamma);
}

}  // namespace

NullSpaceBasis null_space(const MatC& a, int antennas) {
  NullSpaceBasis ns;
  if (a.rows() == 0) {
    ns.basis = MatC::Identity(antennas, antennas);
    ns.singular_values = VecD();
    ns.rank = 0;
    return ns;
  }
  Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullV);
  ns.singular_values = svd.singularValues();
  const double eps = std::numeric_limits<double>::epsilon();
  double cutoff = ns.singular_values(0) *
                  static_cast<double>(std::max(a.rows(), a.cols())) * eps;
  int rank = 0;
  for (int i = 0; i < ns.singular_values.size(); ++i) {
    if (ns.singular_values(i) > cutoff) ++rank;
  }
  ns.rank = rank;
  ns.basis = svd.matrixV().rightCols(antennas - rank);
  return ns;
}

MatC projector(const NullSpaceBasis& ns) {
  return ns.basis * ns.basis.adjoint();
}

PrecodeResult mf_precoder(const MatC& hhat) {
  PrecodeResult r;
  double k = static_cast<double>(hhat.cols());
  r.gamma = hhat.squaredNorm() / k;
  if (r.gamma <= 0.0) {
    throw SingularMatrixError("mf precoder: zero channel estimate");
  }
  r.w = hhat.conjugate() / std::sqrt(r.gamma);
  return r;
}

PrecodeResult zf_precoder(const MatC& hhat, int cell) {
  PrecodeResult r;
  r.w = zf_from_columns(hhat.conjugate(), cell, &r.gamma);
  return r;
}

PrecodeResult mf_mbd_precoder(const MatC& hhat, const NullSpaceBasis& ns) {
  PrecodeResult r;
  MatC reduced = ns.basis.adjoint() * hhat.conjugate();
  double k = static_cast<double>(hhat.cols());
  r.gamma = reduced.squaredNorm() / k;
  if (r.gamma <= 0.0) {
    throw SingularMatrixError("mf-mbd precoder: estimate lies in the blocked subspace");
  }
  r.w = ns.basis * reduced / std::sqrt(r.gamma);
  return r;
}

PrecodeResult zf_mbd_precoder(const MatC& hhat, const NullSpaceBasis& ns,
                              int cell) {
  PrecodeResult r;
  MatC reduced = ns.basis.adjoint() * hhat.conjugate();
  r.w = ns.basis * zf_from_columns(reduced, cell, &r.gamma);
  return r;
}

}  // namespace sprsim
