#pragma once

// Seidel block matrices of plane symmetries.
//
// S has order 2q, zero 2x2 diagonal blocks and off-diagonal blocks
// s_phi = [[cos phi, sin phi], [sin phi, -cos phi]]. For the canonical
// construction phi = theta * chi(a_a - a_b) with cos(2 theta) = (2-k)/(k-1),
// and S^2 = (2k-2) I.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "eqiso/conference.hpp"
#include "eqiso/gf.hpp"

namespace eqiso {

using Block2 = Eigen::Matrix2d;

Block2 rotation(double angle);
Block2 reflection(double angle);

struct Rotation2 {
  double angle = 0.0;
  Block2 entries = Block2::Identity();

  explicit Rotation2(double a) : angle(a), entries(rotation(a)) {}
};

class SeidelMatrix {
 public:
  SeidelMatrix(std::size_t q, int k, double theta, std::vector<Block2> blocks);

  std::size_t q() const noexcept { return q_; }
  int k() const noexcept { return k_; }
  double theta() const noexcept { return theta_; }
  const Block2& block(std::size_t a, std::size_t b) const { return blocks_[a * q_ + b]; }
  const std::vector<Block2>& blocks() const noexcept { return blocks_; }
  const Eigen::MatrixXd& dense() const noexcept { return dense_; }

 private:
  std::size_t q_;
  int k_;
  double theta_;
  std::vector<Block2> blocks_;
  Eigen::MatrixXd dense_;
};

SeidelMatrix build_seidel(const FieldCtx& ctx, int k);

/// max |(S^2 - (2k-2) I)_ij|.
double seidel_square_residual(const Eigen::MatrixXd& dense, int k);
inline double verify_seidel_square(const SeidelMatrix& s) {
  return seidel_square_residual(s.dense(), s.k());
}

/// Sum over a in GF(q)* \ {-b} of r_{theta(chi(a) - chi(a+b))}.
Block2 rotation_sum_check(const FieldCtx& ctx, double theta, const FieldElement& b);

struct EigenStructure {
  double positive = 0.0;
  double negative = 0.0;
  /// Traces of the spectral projectors (I +- S/sqrt(2k-2)) / 2.
  double positive_trace = 0.0;
  double negative_trace = 0.0;
  int positive_multiplicity = 0;
  int negative_multiplicity = 0;
  /// max |P^2 - P| over both projectors.
  double projector_residual = 0.0;
};

/// Throws NotInvolutory when the square residual exceeds 1e-10.
EigenStructure eigen_structure(const SeidelMatrix& s);

/// Right-multiplies block column j by S_j1 and left-multiplies block row j by
/// S_1j for j >= 2, giving identity blocks along the first row and column.
SeidelMatrix normalize_seidel(const SeidelMatrix& s);

/// Image of scale_row_col(C, index, e^{i eta}): block row `index` is
/// left-multiplied by r_eta and block column `index` right-multiplied by
/// r_{-eta}, so s_phi in that row and column becomes s_{phi + eta}.
SeidelMatrix transport_scaling(const SeidelMatrix& s, std::size_t index, double eta);

/// Simultaneous block row/column permutation: result block (a, b) is
/// s(sigma[a], sigma[b]).
SeidelMatrix permute_blocks(const SeidelMatrix& s, const std::vector<std::size_t>& sigma);

/// Replaces each off-diagonal e^{i phi} by s_phi and the zero diagonal by the
/// 2x2 zero block. Throws NotUnimodular on an off-diagonal entry of modulus
/// other than one (tolerance 1e-10).
SeidelMatrix seidel_from_conference(const ConferenceMatrix& c);

}  // namespace eqiso
