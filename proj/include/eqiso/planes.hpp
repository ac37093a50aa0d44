#pragma once

// Equi-isoclinic plane tuples recovered from a Seidel matrix.
//
// With lambda = 1/(2k-2) the Gram matrix A = I + sqrt(lambda) S equals twice
// the projector onto the +sqrt(2k-2) eigenspace, so its spectrum is {0, 2}
// and its rank is 2k-1. Factoring A = X^T X gives 2k-1 planes in R^(2k-1),
// plane i spanned by columns 2i and 2i+1 of X.

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include <cstdint>

#include "eqiso/seidel.hpp"

namespace eqiso {

using Rational = boost::rational<std::int64_t>;

struct PlaneTuple {
  int r = 0;
  int n = 0;
  Rational lambda{0};
  Eigen::MatrixXd basis;  // r x 2n
  Eigen::MatrixXd gram;   // 2n x 2n
};

/// 1/(2k-2) for the Seidel matrix of order 2(2k-1).
Rational isoclinic_parameter(int k);

/// A = I + S / sqrt(2k-2).
Eigen::MatrixXd build_gram(const SeidelMatrix& s);

/// Factors gram = X^T X from the eigenpairs with eigenvalue above 1, in
/// descending eigenvalue order, each eigenvector signed so its first entry
/// of magnitude above 1e-12 is positive. Throws RankMismatch when the number
/// of kept eigenpairs differs from r.
PlaneTuple extract_bases(const Eigen::MatrixXd& gram, int r, Rational lambda);

/// max over i != j of |B_ij^T B_ij - lambda I|, B_ij = X_i^T X_j.
double verify_isoclinic(const PlaneTuple& pt);

/// max over i of |X_i^T X_i - I|.
double orthonormality_deviation(const PlaneTuple& pt);

/// max |X^T X - gram|.
double gram_reconstruction_residual(const PlaneTuple& pt);

struct RankCertificate {
  int rank = 0;                  // eigenvalues above 1
  double spectrum_spread = 0.0;  // max distance of an eigenvalue from {0, 2}
};

RankCertificate rank_certificate(const Eigen::MatrixXd& gram);

struct LsBound {
  /// r(1-lambda)/(2-r lambda), or +inf when 2 - r lambda <= 0.
  double bound = 0.0;
  bool tight = false;
};

/// Bound (2 - r lambda) v <= r (1 - lambda) on the number v of equi-isoclinic
/// planes in R^r with parameter lambda, evaluated in exact rationals.
/// Requires 0 < lambda < 1 and r >= 4.
LsBound check_ls_bound(int r, Rational lambda, int v);

}  // namespace eqiso
