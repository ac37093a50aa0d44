#include "eqiso/gf.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {

constexpr std::size_t kMaxFieldOrder = std::size_t{1} << 20;

using Poly = std::vector<int>;

int mod_p(std::int64_t v, int p) {
  auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = mod_p(a[shift + i] - static_cast<std::int64_t>(lead) * m[i], p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::size_t index, int p, int len) {
  Poly d(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(p));
    index /= static_cast<std::size_t>(p);
  }
  return d;
}

void require_member(const FieldCtx& ctx, const FieldElement& x) {
  if (!ctx.contains(x)) {
    throw std::invalid_argument("field element does not belong to this field");
  }
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::int64_t n) noexcept {
  if (n < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  int alpha = 0;
  while (n % p == 0) {
    n /= p;
    ++alpha;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, alpha};
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int degree = static_cast<int>(poly.size()) - 1;
  if (degree < 1) return false;
  if (degree == 1) return true;
  for (int d = 1; d <= degree / 2; ++d) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t idx = 0; idx < count; ++idx) {
      Poly divisor = digits_of(idx, p, d);
      divisor.push_back(1);
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(int p, int alpha, std::vector<int> modulus)
    : p_(p), alpha_(alpha), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < alpha; ++i) q_ *= static_cast<std::size_t>(p);
  elements_.reserve(q_);
  for (std::size_t i = 0; i < q_; ++i) {
    elements_.push_back(FieldElement{digits_of(i, p, alpha)});
  }
}

std::size_t FieldCtx::index_of(const FieldElement& x) const {
  require_member(*this, x);
  std::size_t index = 0;
  for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it) {
    index = index * static_cast<std::size_t>(p_) + static_cast<std::size_t>(*it);
  }
  return index;
}

FieldElement FieldCtx::from_int(std::int64_t value) const {
  FieldElement x = zero();
  x.coeffs[0] = mod_p(value, p_);
  return x;
}

bool FieldCtx::contains(const FieldElement& x) const noexcept {
  if (x.coeffs.size() != static_cast<std::size_t>(alpha_)) return false;
  for (int c : x.coeffs) {
    if (c < 0 || c >= p_) return false;
  }
  return true;
}

FieldCtx make_field(int p, int alpha) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidPrime, fmt::format("{} is not an odd prime", p));
  }
  if (alpha < 1) {
    throw Error(ErrorCode::InvalidExponent, fmt::format("exponent {} must be at least 1", alpha));
  }
  std::size_t q = 1;
  for (int i = 0; i < alpha; ++i) {
    q *= static_cast<std::size_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::InvalidExponent,
                  fmt::format("{}^{} exceeds the supported field order {}", p, alpha, kMaxFieldOrder));
    }
  }
  for (std::size_t idx = 0; idx < q; ++idx) {
    Poly candidate = digits_of(idx, p, alpha);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return FieldCtx(p, alpha, std::move(candidate));
  }
  // Irreducible polynomials exist in every degree.
  throw std::logic_error("no irreducible modulus found");
}

FieldElement add(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y) {
  require_member(ctx, x);
  require_member(ctx, y);
  FieldElement r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % ctx.p();
  }
  return r;
}

FieldElement neg(const FieldCtx& ctx, const FieldElement& x) {
  require_member(ctx, x);
  FieldElement r = x;
  for (int& c : r.coeffs) c = c == 0 ? 0 : ctx.p() - c;
  return r;
}

FieldElement sub(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y) {
  return add(ctx, x, neg(ctx, y));
}

FieldElement mul(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y) {
  require_member(ctx, x);
  require_member(ctx, y);
  const int p = ctx.p();
  const std::size_t n = x.coeffs.size();
  Poly product(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      product[i + j] = (product[i + j] + x.coeffs[i] * y.coeffs[j]) % p;
    }
  }
  Poly rem = poly_rem(std::move(product), ctx.modulus(), p);
  rem.resize(n, 0);
  return FieldElement{std::move(rem)};
}

FieldElement pow(const FieldCtx& ctx, const FieldElement& x, std::uint64_t exponent) {
  FieldElement result = ctx.one();
  FieldElement base = x;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(ctx, result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(ctx, base, base);
  }
  return result;
}

FieldElement inv(const FieldCtx& ctx, const FieldElement& x) {
  require_member(ctx, x);
  if (x == ctx.zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(ctx, x, ctx.q() - 2);
}

int legendre_chi(const FieldCtx& ctx, const FieldElement& x) {
  require_member(ctx, x);
  if (x == ctx.zero()) return 0;
  const FieldElement r = pow(ctx, x, (ctx.q() - 1) / 2);
  if (r == ctx.one()) return 1;
  if (r == neg(ctx, ctx.one())) return -1;
  throw std::logic_error("Euler criterion produced neither 1 nor -1");
}

std::vector<int> chi_table(const FieldCtx& ctx) {
  std::vector<int> table;
  table.reserve(ctx.q());
  for (const auto& x : ctx.elements()) table.push_back(legendre_chi(ctx, x));
  return table;
}

FieldElement find_nonsquare(const FieldCtx& ctx) {
  for (const auto& x : ctx.elements()) {
    if (legendre_chi(ctx, x) == -1) return x;
  }
  throw std::logic_error("odd-order field without a non-square");
}

}  // namespace eqiso
