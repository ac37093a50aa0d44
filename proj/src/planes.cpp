#include "eqiso/planes.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {

constexpr double kRankThreshold = 1.0;
constexpr double kSignThreshold = 1e-12;

double to_double(Rational x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

Eigen::MatrixXd plane(const PlaneTuple& pt, int i) { return pt.basis.middleCols(2 * i, 2); }

}  // namespace

Rational isoclinic_parameter(int k) { return Rational(1, 2 * k - 2); }

Eigen::MatrixXd build_gram(const SeidelMatrix& s) {
  const auto n = s.dense().rows();
  return Eigen::MatrixXd::Identity(n, n) + s.dense() / std::sqrt(static_cast<double>(2 * s.k() - 2));
}

PlaneTuple extract_bases(const Eigen::MatrixXd& gram, int r, Rational lambda) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const auto size = values.size();

  int kept = 0;
  for (Eigen::Index i = 0; i < size; ++i) kept += values(i) > kRankThreshold ? 1 : 0;
  if (kept != r) {
    throw Error(ErrorCode::RankMismatch,
                fmt::format("{} eigenvalues above {} but rank {} requested", kept, kRankThreshold, r));
  }

  PlaneTuple pt;
  pt.r = r;
  pt.n = static_cast<int>(size / 2);
  pt.lambda = lambda;
  pt.gram = gram;
  pt.basis.resize(r, size);
  for (int row = 0; row < r; ++row) {
    const Eigen::Index idx = size - 1 - row;
    Eigen::VectorXd v = vectors.col(idx);
    for (Eigen::Index j = 0; j < size; ++j) {
      if (std::abs(v(j)) > kSignThreshold) {
        if (v(j) < 0) v = -v;
        break;
      }
    }
    pt.basis.row(row) = std::sqrt(values(idx)) * v.transpose();
  }
  return pt;
}

double verify_isoclinic(const PlaneTuple& pt) {
  const double lambda = to_double(pt.lambda);
  double worst = 0.0;
  for (int i = 0; i < pt.n; ++i) {
    const Eigen::MatrixXd xi = plane(pt, i);
    for (int j = 0; j < pt.n; ++j) {
      if (i == j) continue;
      const Eigen::Matrix2d b = xi.transpose() * plane(pt, j);
      const Eigen::Matrix2d dev = b.transpose() * b - lambda * Eigen::Matrix2d::Identity();
      worst = std::max(worst, dev.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double orthonormality_deviation(const PlaneTuple& pt) {
  double worst = 0.0;
  for (int i = 0; i < pt.n; ++i) {
    const Eigen::MatrixXd xi = plane(pt, i);
    const Eigen::Matrix2d dev = xi.transpose() * xi - Eigen::Matrix2d::Identity();
    worst = std::max(worst, dev.cwiseAbs().maxCoeff());
  }
  return worst;
}

double gram_reconstruction_residual(const PlaneTuple& pt) {
  return (pt.basis.transpose() * pt.basis - pt.gram).cwiseAbs().maxCoeff();
}

RankCertificate rank_certificate(const Eigen::MatrixXd& gram) {
  const Eigen::VectorXd values =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram, Eigen::EigenvaluesOnly).eigenvalues();
  RankCertificate cert;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values(i);
    if (v > kRankThreshold) ++cert.rank;
    cert.spectrum_spread = std::max(cert.spectrum_spread, std::min(std::abs(v), std::abs(v - 2.0)));
  }
  return cert;
}

LsBound check_ls_bound(int r, Rational lambda, int v) {
  if (r < 4) throw std::invalid_argument(fmt::format("dimension {} must be at least 4", r));
  if (lambda <= Rational(0) || lambda >= Rational(1)) {
    throw std::invalid_argument("lambda must lie strictly between 0 and 1");
  }
  const Rational slack = Rational(2) - Rational(r) * lambda;
  const Rational rhs = Rational(r) * (Rational(1) - lambda);
  LsBound result;
  if (slack <= Rational(0)) {
    result.bound = std::numeric_limits<double>::infinity();
    return result;
  }
  const Rational bound = rhs / slack;
  result.bound = to_double(bound);
  const std::int64_t floor_bound = bound.numerator() / bound.denominator();
  result.tight = Rational(v) * slack == rhs && floor_bound == v;
  return result;
}

}  // namespace eqiso
