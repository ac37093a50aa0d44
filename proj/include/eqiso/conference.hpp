#pragma once

// Complex symmetric conference matrices C(omega) of odd prime-power order
// q = 2k - 1, with c_ab = omega^chi(a_a - a_b) off the diagonal.
//
// A ConferenceMatrix carries two layers: the exact exponent layer (entries in
// {-1, 0, +1}, zero on the diagonal) and the numeric values. The exponent
// layer makes CC* = (2k-2)I checkable by integer counting alone; the numeric
// layer is a cross-check and survives equivalence operations that the
// exponent layer cannot represent.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "eqiso/gf.hpp"

namespace eqiso {

class UnitComplex {
 public:
  UnitComplex() = default;
  /// Throws NotUnimodular when |re^2 + im^2 - 1| > 1e-12.
  UnitComplex(double re, double im);

  static UnitComplex polar(double angle) noexcept;
  static UnitComplex from(std::complex<double> z) { return {z.real(), z.imag()}; }

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  double arg() const noexcept;
  std::complex<double> value() const noexcept { return {re_, im_}; }
  UnitComplex conj() const noexcept;
  UnitComplex operator-() const noexcept;

 private:
  double re_ = 1.0;
  double im_ = 0.0;
};

struct ConferenceMatrix {
  std::size_t q = 0;
  int k = 0;
  UnitComplex omega;
  /// Exact layer; absent once an arbitrary phase scaling has been applied.
  std::optional<Eigen::MatrixXi> exponents;
  Eigen::MatrixXcd values;
};

/// Multiplicities of the terms 1, omega^2 and omega^-2 in one off-diagonal
/// entry of CC*.
struct ExponentCounts {
  int zero = 0;
  int plus_two = 0;
  int minus_two = 0;

  friend bool operator==(const ExponentCounts&, const ExponentCounts&) = default;
};

/// q x q grid of counts; diagonal cells are left zero.
struct CountGrid {
  std::size_t q = 0;
  std::vector<ExponentCounts> cells;

  const ExponentCounts& at(std::size_t a, std::size_t b) const { return cells[a * q + b]; }
  ExponentCounts& at(std::size_t a, std::size_t b) { return cells[a * q + b]; }
};

/// Critical unit omega0 = e^{i theta}, theta = acos((2-k)/(k-1)) / 2 on the
/// principal branch, so Re(omega0^2) = (2-k)/(k-1). Requires k >= 3.
UnitComplex critical_omega(int k);

/// Half-angle theta of the critical omega0.
double critical_theta(int k);

/// Requires q = 2k - 1 with q = 1 (mod 4); otherwise NotSymmetrizable.
ConferenceMatrix build_conference(const FieldCtx& ctx, const UnitComplex& omega);

/// Counts computed from the exponent layer only (no floating point).
CountGrid gram_counts(const ConferenceMatrix& c);

/// True iff the exponent layer is well formed and every off-diagonal cell of
/// gram_counts equals (k-2, (k-1)/2, (k-1)/2).
bool verify_conference_exact(const ConferenceMatrix& c);

/// max |(CC* - (q-1)I)_ab| over all entries.
double conference_residual(const Eigen::MatrixXcd& values);
inline double verify_conference_numeric(const ConferenceMatrix& c) {
  return conference_residual(c.values);
}

/// Off-diagonal constant of CC* = (2k-2-c)I + cJ, c = k-2+(k-1)Re(omega^2).
double gram_offdiag_constant(int k, const UnitComplex& omega);

/// Multiplies row `index` and column `index` by u. Drops the exponent layer.
ConferenceMatrix scale_row_col(const ConferenceMatrix& c, std::size_t index, const UnitComplex& u);

/// Result entry (a, b) is c(sigma[a], sigma[b]).
ConferenceMatrix permute(const ConferenceMatrix& c, const std::vector<std::size_t>& sigma);

/// Witnesses that the four critical choices of omega give equivalent
/// matrices: index permutation a -> a * g (g the first non-square) taking
/// C(omega0^-1) to C(omega0), and the all-i scaling taking -C(omega0) =
/// C(-omega0) to C(omega0). Both are checked before returning.
struct EquivalenceWitnesses {
  std::vector<std::size_t> permutation;
  std::vector<UnitComplex> scaling;
  double permutation_residual = 0.0;
  double scaling_residual = 0.0;
};

EquivalenceWitnesses equivalence_witnesses(const FieldCtx& ctx, int k);

/// Sum over a in GF(q)* \ {-b} of omega^(chi(a) - chi(a+b)), evaluated
/// directly over the field.
std::complex<double> character_shift_sum(const FieldCtx& ctx, const UnitComplex& omega,
                                         const FieldElement& b);

}  // namespace eqiso
