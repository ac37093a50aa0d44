#include "eqiso/hadamard.hpp"

#include <fmt/format.h>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {
constexpr double kConferenceTolerance = 1e-10;
}

HadamardMatrix double_conference(const ConferenceMatrix& c) {
  const Eigen::MatrixXcd& m = c.values;
  const auto n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(ErrorCode::NotConference, "conference matrix must be square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double residual = conference_residual(m);
  if (asym > kConferenceTolerance || residual > kConferenceTolerance) {
    throw Error(ErrorCode::NotConference,
                fmt::format("input is not a symmetric conference matrix (asymmetry {}, residual {})",
                            asym, residual));
  }
  // C symmetric, so C* is its entrywise conjugate.
  const Eigen::MatrixXcd cstar = m.conjugate();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  HadamardMatrix h;
  h.order = static_cast<int>(2 * n);
  h.values.resize(2 * n, 2 * n);
  h.values.topLeftCorner(n, n) = m + id;
  h.values.topRightCorner(n, n) = cstar - id;
  h.values.bottomLeftCorner(n, n) = m - id;
  h.values.bottomRightCorner(n, n) = -cstar - id;
  return h;
}

double verify_hadamard(const Eigen::MatrixXcd& h) {
  const auto n = h.rows();
  if (n == 0) return 0.0;
  const double modulus = (h.cwiseAbs().array() - 1.0).abs().maxCoeff();
  const Eigen::MatrixXcd gram = h * h.adjoint();
  const Eigen::MatrixXcd target =
      Eigen::MatrixXcd::Identity(n, n) * std::complex<double>(static_cast<double>(n), 0.0);
  return std::max(modulus, (gram - target).cwiseAbs().maxCoeff());
}

}  // namespace eqiso
