#include "eqiso/conference.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kWitnessTolerance = 1e-12;

std::complex<double> omega_power(const UnitComplex& omega, int e) {
  switch (e) {
    case 1: return omega.value();
    case -1: return std::conj(omega.value());
    case 0: return {1.0, 0.0};
    default: return std::pow(omega.value(), e);
  }
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

UnitComplex::UnitComplex(double re, double im) : re_(re), im_(im) {
  if (std::abs(re * re + im * im - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::NotUnimodular,
                fmt::format("({}, {}) is not of modulus one", re, im));
  }
}

UnitComplex UnitComplex::polar(double angle) noexcept {
  UnitComplex u;
  u.re_ = std::cos(angle);
  u.im_ = std::sin(angle);
  return u;
}

double UnitComplex::arg() const noexcept { return std::atan2(im_, re_); }

UnitComplex UnitComplex::conj() const noexcept {
  UnitComplex u = *this;
  u.im_ = -u.im_;
  return u;
}

UnitComplex UnitComplex::operator-() const noexcept {
  UnitComplex u = *this;
  u.re_ = -u.re_;
  u.im_ = -u.im_;
  return u;
}

double critical_theta(int k) {
  if (k < 3) {
    throw Error(ErrorCode::InvalidOrder, fmt::format("critical omega needs k >= 3, got {}", k));
  }
  const double cos2 = static_cast<double>(2 - k) / static_cast<double>(k - 1);
  return 0.5 * std::acos(cos2);
}

UnitComplex critical_omega(int k) { return UnitComplex::polar(critical_theta(k)); }

ConferenceMatrix build_conference(const FieldCtx& ctx, const UnitComplex& omega) {
  const std::size_t q = ctx.q();
  if (q % 4 != 1) {
    throw Error(ErrorCode::NotSymmetrizable,
                fmt::format("q = {} is not 1 mod 4; chi(-1) = -1 breaks symmetry", q));
  }
  const auto chi = chi_table(ctx);
  const auto n = static_cast<Eigen::Index>(q);

  ConferenceMatrix c;
  c.q = q;
  c.k = static_cast<int>((q + 1) / 2);
  c.omega = omega;
  Eigen::MatrixXi exponents = Eigen::MatrixXi::Zero(n, n);
  c.values = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      const int e = chi[ctx.index_of(sub(ctx, ctx.element(a), ctx.element(b)))];
      const auto i = static_cast<Eigen::Index>(a);
      const auto j = static_cast<Eigen::Index>(b);
      exponents(i, j) = e;
      c.values(i, j) = omega_power(omega, e);
    }
  }
  c.exponents = std::move(exponents);
  return c;
}

CountGrid gram_counts(const ConferenceMatrix& c) {
  if (!c.exponents) {
    throw Error(ErrorCode::ExactLayerUnavailable, "exact layer unavailable");
  }
  const auto& e = *c.exponents;
  const std::size_t q = c.q;
  CountGrid grid{q, std::vector<ExponentCounts>(q * q)};
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      if (a == b) continue;
      ExponentCounts counts;
      for (std::size_t g = 0; g < q; ++g) {
        if (g == a || g == b) continue;
        // Entry (a, b) of CC* collects omega^e(a,g) * conj(omega^e(b,g)).
        const int d = e(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(g)) -
                      e(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(b));
        if (d == 0) {
          ++counts.zero;
        } else if (d == 2) {
          ++counts.plus_two;
        } else if (d == -2) {
          ++counts.minus_two;
        }
      }
      grid.at(a, b) = counts;
    }
  }
  return grid;
}

bool verify_conference_exact(const ConferenceMatrix& c) {
  if (!c.exponents) {
    throw Error(ErrorCode::ExactLayerUnavailable, "exact layer unavailable");
  }
  const auto& e = *c.exponents;
  const auto n = static_cast<Eigen::Index>(c.q);
  if (e.rows() != n || e.cols() != n || c.q != static_cast<std::size_t>(2 * c.k - 1)) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j ? e(i, j) != 0 : (e(i, j) != 1 && e(i, j) != -1)) return false;
    }
  }
  const ExponentCounts expected{c.k - 2, (c.k - 1) / 2, (c.k - 1) / 2};
  const CountGrid grid = gram_counts(c);
  for (std::size_t a = 0; a < c.q; ++a) {
    for (std::size_t b = 0; b < c.q; ++b) {
      if (a != b && !(grid.at(a, b) == expected)) return false;
    }
  }
  return true;
}

double conference_residual(const Eigen::MatrixXcd& values) {
  const auto n = values.rows();
  const Eigen::MatrixXcd gram = values * values.adjoint();
  const Eigen::MatrixXcd target =
      Eigen::MatrixXcd::Identity(n, n) * std::complex<double>(static_cast<double>(n - 1), 0.0);
  return max_abs_diff(gram, target);
}

double gram_offdiag_constant(int k, const UnitComplex& omega) {
  const double re_sq = std::real(omega.value() * omega.value());
  return (k - 2) + (k - 1) * re_sq;
}

ConferenceMatrix scale_row_col(const ConferenceMatrix& c, std::size_t index, const UnitComplex& u) {
  if (index >= c.q) {
    throw std::out_of_range(fmt::format("row index {} out of range for order {}", index, c.q));
  }
  ConferenceMatrix r = c;
  const auto i = static_cast<Eigen::Index>(index);
  r.values.row(i) *= u.value();
  r.values.col(i) *= u.value();
  r.exponents.reset();
  return r;
}

ConferenceMatrix permute(const ConferenceMatrix& c, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != c.q) {
    throw Error(ErrorCode::InvalidPermutation,
                fmt::format("permutation has {} entries, order is {}", sigma.size(), c.q));
  }
  std::vector<bool> seen(c.q, false);
  for (std::size_t s : sigma) {
    if (s >= c.q || seen[s]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    seen[s] = true;
  }
  ConferenceMatrix r = c;
  const auto n = static_cast<Eigen::Index>(c.q);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto sa = static_cast<Eigen::Index>(sigma[static_cast<std::size_t>(a)]);
      const auto sb = static_cast<Eigen::Index>(sigma[static_cast<std::size_t>(b)]);
      r.values(a, b) = c.values(sa, sb);
      if (c.exponents) (*r.exponents)(a, b) = (*c.exponents)(sa, sb);
    }
  }
  return r;
}

EquivalenceWitnesses equivalence_witnesses(const FieldCtx& ctx, int k) {
  if (ctx.q() != static_cast<std::size_t>(2 * k - 1)) {
    throw Error(ErrorCode::InvalidOrder, fmt::format("q = {} but 2k - 1 = {}", ctx.q(), 2 * k - 1));
  }
  const UnitComplex omega0 = critical_omega(k);
  const ConferenceMatrix target = build_conference(ctx, omega0);

  EquivalenceWitnesses w;
  const FieldElement g = find_nonsquare(ctx);
  w.permutation.reserve(ctx.q());
  for (const auto& a : ctx.elements()) w.permutation.push_back(ctx.index_of(mul(ctx, a, g)));
  const ConferenceMatrix moved = permute(build_conference(ctx, omega0.conj()), w.permutation);
  w.permutation_residual = max_abs_diff(moved.values, target.values);

  w.scaling.assign(ctx.q(), UnitComplex(0.0, 1.0));
  ConferenceMatrix scaled = build_conference(ctx, -omega0);
  for (std::size_t a = 0; a < ctx.q(); ++a) scaled = scale_row_col(scaled, a, w.scaling[a]);
  w.scaling_residual = max_abs_diff(scaled.values, target.values);

  if (w.permutation_residual > kWitnessTolerance || w.scaling_residual > kWitnessTolerance) {
    throw Error(ErrorCode::WitnessMismatch,
                fmt::format("witness residuals {} (permutation), {} (scaling)",
                            w.permutation_residual, w.scaling_residual));
  }
  return w;
}

std::complex<double> character_shift_sum(const FieldCtx& ctx, const UnitComplex& omega,
                                         const FieldElement& b) {
  if (b == ctx.zero()) throw Error(ErrorCode::InvalidShift, "shift b must be nonzero");
  const FieldElement minus_b = neg(ctx, b);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : ctx.elements()) {
    if (a == ctx.zero() || a == minus_b) continue;
    const int e = legendre_chi(ctx, a) - legendre_chi(ctx, add(ctx, a, b));
    sum += omega_power(omega, e);
  }
  return sum;
}

}  // namespace eqiso
