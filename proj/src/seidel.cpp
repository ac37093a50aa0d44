#include "eqiso/seidel.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {

constexpr double kInvolutionTolerance = 1e-10;
constexpr double kUnimodularTolerance = 1e-10;

void check_index(std::size_t index, std::size_t q) {
  if (index >= q) {
    throw std::out_of_range(fmt::format("block index {} out of range for order {}", index, q));
  }
}

}  // namespace

Block2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Block2 r;
  r << c, -s, s, c;
  return r;
}

Block2 reflection(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Block2 r;
  r << c, s, s, -c;
  return r;
}

SeidelMatrix::SeidelMatrix(std::size_t q, int k, double theta, std::vector<Block2> blocks)
    : q_(q), k_(k), theta_(theta), blocks_(std::move(blocks)) {
  if (blocks_.size() != q_ * q_) {
    throw std::invalid_argument(
        fmt::format("expected {} blocks for order {}, got {}", q_ * q_, q_, blocks_.size()));
  }
  const auto n = static_cast<Eigen::Index>(2 * q_);
  dense_.resize(n, n);
  for (std::size_t a = 0; a < q_; ++a) {
    for (std::size_t b = 0; b < q_; ++b) {
      dense_.block<2, 2>(static_cast<Eigen::Index>(2 * a), static_cast<Eigen::Index>(2 * b)) =
          block(a, b);
    }
  }
}

SeidelMatrix build_seidel(const FieldCtx& ctx, int k) {
  const std::size_t q = ctx.q();
  if (q % 4 != 1 || q != static_cast<std::size_t>(2 * k - 1)) {
    throw Error(ErrorCode::NotSymmetrizable,
                fmt::format("q = {} with k = {} is not an admissible order", q, k));
  }
  const double theta = critical_theta(k);
  const auto chi = chi_table(ctx);
  std::vector<Block2> blocks(q * q, Block2::Zero());
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      const int e = chi[ctx.index_of(sub(ctx, ctx.element(a), ctx.element(b)))];
      blocks[a * q + b] = reflection(theta * e);
    }
  }
  return SeidelMatrix(q, k, theta, std::move(blocks));
}

double seidel_square_residual(const Eigen::MatrixXd& dense, int k) {
  const auto n = dense.rows();
  if (n == 0) return 0.0;
  const Eigen::MatrixXd target = Eigen::MatrixXd::Identity(n, n) * static_cast<double>(2 * k - 2);
  return (dense * dense - target).cwiseAbs().maxCoeff();
}

Block2 rotation_sum_check(const FieldCtx& ctx, double theta, const FieldElement& b) {
  if (b == ctx.zero()) throw Error(ErrorCode::InvalidShift, "shift b must be nonzero");
  const FieldElement minus_b = neg(ctx, b);
  Block2 sum = Block2::Zero();
  for (const auto& a : ctx.elements()) {
    if (a == ctx.zero() || a == minus_b) continue;
    const int e = legendre_chi(ctx, a) - legendre_chi(ctx, add(ctx, a, b));
    sum += rotation(theta * e);
  }
  return sum;
}

EigenStructure eigen_structure(const SeidelMatrix& s) {
  const double residual = verify_seidel_square(s);
  if (residual > kInvolutionTolerance) {
    throw Error(ErrorCode::NotInvolutory,
                fmt::format("S^2 deviates from (2k-2)I by {}", residual));
  }
  const double mu = std::sqrt(static_cast<double>(2 * s.k() - 2));
  const auto n = s.dense().rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd plus = 0.5 * (id + s.dense() / mu);
  const Eigen::MatrixXd minus = 0.5 * (id - s.dense() / mu);

  EigenStructure es;
  es.positive = mu;
  es.negative = -mu;
  es.positive_trace = plus.trace();
  es.negative_trace = minus.trace();
  es.positive_multiplicity = static_cast<int>(std::lround(es.positive_trace));
  es.negative_multiplicity = static_cast<int>(std::lround(es.negative_trace));
  es.projector_residual = std::max((plus * plus - plus).cwiseAbs().maxCoeff(),
                                   (minus * minus - minus).cwiseAbs().maxCoeff());
  return es;
}

SeidelMatrix normalize_seidel(const SeidelMatrix& s) {
  const std::size_t q = s.q();
  std::vector<Block2> gauge(q, Block2::Identity());
  for (std::size_t j = 1; j < q; ++j) gauge[j] = s.block(j, 0);
  std::vector<Block2> blocks(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      blocks[a * q + b] = gauge[a].transpose() * s.block(a, b) * gauge[b];
    }
  }
  return SeidelMatrix(q, s.k(), s.theta(), std::move(blocks));
}

SeidelMatrix transport_scaling(const SeidelMatrix& s, std::size_t index, double eta) {
  check_index(index, s.q());
  const std::size_t q = s.q();
  const Block2 left = rotation(eta);
  const Block2 right = rotation(-eta);
  std::vector<Block2> blocks = s.blocks();
  for (std::size_t b = 0; b < q; ++b) blocks[index * q + b] = left * blocks[index * q + b];
  for (std::size_t a = 0; a < q; ++a) blocks[a * q + index] = blocks[a * q + index] * right;
  return SeidelMatrix(q, s.k(), s.theta(), std::move(blocks));
}

SeidelMatrix permute_blocks(const SeidelMatrix& s, const std::vector<std::size_t>& sigma) {
  const std::size_t q = s.q();
  if (sigma.size() != q) throw Error(ErrorCode::InvalidPermutation, "permutation length mismatch");
  std::vector<bool> seen(q, false);
  for (std::size_t v : sigma) {
    if (v >= q || seen[v]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    seen[v] = true;
  }
  std::vector<Block2> blocks(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) blocks[a * q + b] = s.block(sigma[a], sigma[b]);
  }
  return SeidelMatrix(q, s.k(), s.theta(), std::move(blocks));
}

SeidelMatrix seidel_from_conference(const ConferenceMatrix& c) {
  const std::size_t q = c.q;
  std::vector<Block2> blocks(q * q, Block2::Zero());
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      const std::complex<double> z =
          c.values(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (std::abs(std::abs(z) - 1.0) > kUnimodularTolerance) {
        throw Error(ErrorCode::NotUnimodular,
                    fmt::format("entry ({}, {}) has modulus {}", a, b, std::abs(z)));
      }
      Block2 sym;
      sym << z.real(), z.imag(), z.imag(), -z.real();
      blocks[a * q + b] = sym;
    }
  }
  return SeidelMatrix(q, c.k, c.omega.arg(), std::move(blocks));
}

}  // namespace eqiso
