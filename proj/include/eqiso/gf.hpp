#pragma once

// Arithmetic in GF(p^alpha) for odd p, and the quadratic character.
//
// Elements are residues modulo (p, modulus) stored as coefficient vectors,
// constant term first. The canonical enumeration maps index i to the element
// whose coefficients are the base-p digits of i, so index 0 is zero and
// index 1 is one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace eqiso {

struct FieldElement {
  std::vector<int> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct PrimePower {
  std::int64_t p = 0;
  int alpha = 0;
};

bool is_prime(std::int64_t n) noexcept;

/// Returns (p, alpha) with n = p^alpha for prime p, by trial division.
std::optional<PrimePower> as_prime_power(std::int64_t n) noexcept;

class FieldCtx {
 public:
  int p() const noexcept { return p_; }
  int alpha() const noexcept { return alpha_; }
  std::size_t q() const noexcept { return q_; }

  /// Monic irreducible polynomial of degree alpha; length alpha + 1,
  /// constant term first.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  const std::vector<FieldElement>& elements() const noexcept { return elements_; }

  const FieldElement& element(std::size_t index) const { return elements_.at(index); }
  std::size_t index_of(const FieldElement& x) const;

  FieldElement zero() const { return elements_[0]; }
  FieldElement one() const { return elements_[1]; }
  FieldElement from_int(std::int64_t value) const;

  bool contains(const FieldElement& x) const noexcept;

 private:
  friend FieldCtx make_field(int p, int alpha);
  FieldCtx(int p, int alpha, std::vector<int> modulus);

  int p_;
  int alpha_;
  std::size_t q_;
  std::vector<int> modulus_;
  std::vector<FieldElement> elements_;
};

/// Builds GF(p^alpha) over the lexicographically smallest monic irreducible
/// modulus (smallest canonical index of its lower coefficients).
FieldCtx make_field(int p, int alpha);

/// Irreducibility over Z/p by trial division against every monic polynomial
/// of degree 1..deg/2. `poly` is constant term first and must be monic.
bool is_irreducible(const std::vector<int>& poly, int p);

FieldElement add(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldCtx& ctx, const FieldElement& x);
FieldElement mul(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement pow(const FieldCtx& ctx, const FieldElement& x, std::uint64_t exponent);
FieldElement inv(const FieldCtx& ctx, const FieldElement& x);

/// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
/// Evaluated as x^((q-1)/2).
int legendre_chi(const FieldCtx& ctx, const FieldElement& x);

/// Character of every element, indexed canonically.
std::vector<int> chi_table(const FieldCtx& ctx);

/// First element in canonical order with character -1.
FieldElement find_nonsquare(const FieldCtx& ctx);

}  // namespace eqiso
