// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and nowhere else.

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "eqiso/commands.hpp"
#include "eqiso/conference.hpp"
#include "eqiso/gf.hpp"
#include "eqiso/hadamard.hpp"
#include "eqiso/planes.hpp"
#include "eqiso/seidel.hpp"

namespace {

using namespace eqiso;
using cd = std::complex<double>;

constexpr double kTolConference = 1e-10;
constexpr double kTolGeneral = 1e-10;
constexpr double kTolOrderFive = 1e-12;
constexpr double kTolSeidel = 1e-10;
constexpr double kTolMultiplicity = 1e-8;
constexpr double kTolOrthonormal = 1e-10;
constexpr double kTolIsoclinic = 1e-9;
constexpr double kTolHadamard = 1e-9;
constexpr double kTolWitness = 1e-12;
constexpr double kMinOrderThreeModulus = 0.999999;
constexpr double kTolRotationSum = 1e-10;
constexpr double kTolConjugation = 1e-14;

struct Field {
  int p;
  int alpha;
  int q;
  int k;
};

const std::vector<Field> kAdmissible{
    {5, 1, 5, 3},    {3, 2, 9, 5},    {13, 1, 13, 7},  {5, 2, 25, 13}, {29, 1, 29, 15},
    {37, 1, 37, 19}, {41, 1, 41, 21}, {7, 2, 49, 25},  {53, 1, 53, 27}, {61, 1, 61, 31},
    {73, 1, 73, 37}, {3, 4, 81, 41},  {89, 1, 89, 45}, {97, 1, 97, 49}, {101, 1, 101, 51}};

const Field& field_of_order(int q) {
  return *std::find_if(kAdmissible.begin(), kAdmissible.end(), [q](const Field& f) { return f.q == q; });
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ac1_exact_counts() {
  for (const auto& f : kAdmissible) {
    const FieldCtx ctx = make_field(f.p, f.alpha);
    const ConferenceMatrix c = build_conference(ctx, critical_omega(f.k));
    const CountGrid grid = gram_counts(c);
    const ExponentCounts want{f.k - 2, (f.k - 1) / 2, (f.k - 1) / 2};
    for (std::size_t a = 0; a < grid.q; ++a) {
      for (std::size_t b = 0; b < grid.q; ++b) {
        if (a != b && !(grid.at(a, b) == want)) return {false, fmt::format("q = {} entry ({}, {})", f.q, a, b)};
      }
    }
  }
  return {true, fmt::format("{} orders, every off-diagonal entry (k-2, (k-1)/2, (k-1)/2)", kAdmissible.size())};
}

Outcome ac2_conference_identity() {
  double worst = 0.0;
  for (const auto& f : kAdmissible) {
    const ConferenceMatrix c = build_conference(make_field(f.p, f.alpha), critical_omega(f.k));
    const auto n = static_cast<Eigen::Index>(f.q);
    const Eigen::MatrixXcd g = oracle::naive_gram(c.values, c.values);
    worst = std::max(worst, oracle::max_abs(Eigen::MatrixXcd(g - (2.0 * f.k - 2.0) * Eigen::MatrixXcd::Identity(n, n))));
  }
  return {worst <= kTolConference, fmt::format("max residual {:.3e}", worst)};
}

Outcome ac3_general_omega() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int q : {5, 9, 13, 25}) {
    const Field& f = field_of_order(q);
    const FieldCtx ctx = make_field(f.p, f.alpha);
    for (int t = 0; t < 20; ++t) {
      const UnitComplex w = UnitComplex::polar(angle(rng));
      const ConferenceMatrix c = build_conference(ctx, w);
      const double cc = f.k - 2 + (f.k - 1) * std::cos(2.0 * w.arg());
      const auto n = static_cast<Eigen::Index>(q);
      const Eigen::MatrixXcd expect = (2.0 * f.k - 2.0 - cc) * Eigen::MatrixXcd::Identity(n, n) +
                                      cc * Eigen::MatrixXcd::Ones(n, n);
      worst = std::max(worst, oracle::max_abs(Eigen::MatrixXcd(oracle::naive_gram(c.values, c.values) - expect)));
    }
  }
  return {worst <= kTolGeneral, fmt::format("80 random omegas, max residual {:.3e}", worst)};
}

Outcome ac4_order_five_match() {
  const cd j = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cd j2 = j * j;
  // Reference order-5 matrix: circulant with first row (0, j, j^2, j^2, j).
  const std::vector<cd> first{0.0, j, j2, j2, j};
  Eigen::MatrixXcd shown(5, 5);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) shown(a, b) = first[static_cast<std::size_t>((b - a + 5) % 5)];
  }
  const ConferenceMatrix c = build_conference(make_field(5, 1), UnitComplex::from(j2));
  std::vector<std::size_t> sigma{0, 1, 2, 3, 4};
  double best = 1e300;
  std::vector<std::size_t> witness;
  do {
    double dev = 0.0;
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = 0; b < 5; ++b) {
        dev = std::max(dev, std::abs(c.values(static_cast<Eigen::Index>(sigma[a]), static_cast<Eigen::Index>(sigma[b])) -
                                     shown(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
      }
    }
    if (dev < best) {
      best = dev;
      witness = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {best <= kTolOrderFive, fmt::format("omega = j^2, witness ({}), deviation {:.3e}",
                                             fmt::format("{}, {}, {}, {}, {}", witness[0], witness[1], witness[2],
                                                         witness[3], witness[4]),
                                             best)};
}

Outcome ac5_seidel() {
  double worst = 0.0;
  double worst_mult = 0.0;
  for (const auto& f : kAdmissible) {
    const SeidelMatrix s = build_seidel(make_field(f.p, f.alpha), f.k);
    const Eigen::MatrixXd sq = oracle::naive_product(s.dense(), s.dense());
    const auto n = static_cast<Eigen::Index>(2 * f.q);
    worst = std::max(worst, oracle::max_abs(Eigen::MatrixXd(sq - (2.0 * f.k - 2.0) * Eigen::MatrixXd::Identity(n, n))));
    if (s.dense().trace() != 0.0) return {false, fmt::format("trace(S) = {} at q = {}", s.dense().trace(), f.q)};
    const EigenStructure es = eigen_structure(s);
    const double want = 2.0 * f.k - 1.0;
    worst_mult = std::max({worst_mult, std::abs(es.positive_trace - want), std::abs(es.negative_trace - want)});
    if (es.positive_multiplicity != f.q || es.negative_multiplicity != f.q) {
      return {false, fmt::format("multiplicities {} / {} at q = {}", es.positive_multiplicity,
                                 es.negative_multiplicity, f.q)};
    }
  }
  return {worst <= kTolSeidel && worst_mult <= kTolMultiplicity,
          fmt::format("max S^2 residual {:.3e}, trace 0, multiplicity error {:.3e}", worst, worst_mult)};
}

Outcome ac6_planes() {
  std::string detail;
  bool ok = true;
  for (int q : {5, 9, 13, 25}) {
    const Field& f = field_of_order(q);
    const SeidelMatrix s = build_seidel(make_field(f.p, f.alpha), f.k);
    const Rational lambda = isoclinic_parameter(f.k);
    const PlaneTuple pt = extract_bases(build_gram(s), 2 * f.k - 1, lambda);
    const double ortho = orthonormality_deviation(pt);
    const double iso = verify_isoclinic(pt);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(pt.basis);
    lu.setThreshold(1e-9);
    const int rank = static_cast<int>(lu.rank());
    const LsBound bound = check_ls_bound(2 * f.k - 1, lambda, f.q);
    const bool here = ortho <= kTolOrthonormal && iso <= kTolIsoclinic && rank == 2 * f.k - 1 && bound.tight &&
                      lambda == Rational(1, 2 * f.k - 2);
    ok = ok && here;
    detail += fmt::format("{}k={} v_1/{}(2,{})={}", detail.empty() ? "" : ", ", f.k, 2 * f.k - 2, 2 * f.k - 1,
                          bound.bound);
  }
  return {ok, detail};
}

Outcome ac7_hadamard() {
  double worst = 0.0;
  for (int q : {5, 9, 13, 25}) {
    const Field& f = field_of_order(q);
    const HadamardMatrix h = double_conference(build_conference(make_field(f.p, f.alpha), critical_omega(f.k)));
    worst = std::max(worst, verify_hadamard(h));
  }
  return {worst <= kTolHadamard, fmt::format("orders 10, 18, 26, 50, max residual {:.3e}", worst)};
}

Outcome ac8_enumeration() {
  std::set<int> open;
  for (const auto& row : enumerate_orders(3, 51, true)) {
    if (row.status == OrderStatus::Open) open.insert(row.k);
  }
  const std::set<int> want{11, 17, 23, 29, 33, 35, 39, 43, 47};
  std::string list;
  for (int k : open) list += fmt::format("{}{}", list.empty() ? "" : " ", k);
  return {open == want, fmt::format("open k = {{{}}}", list)};
}

Outcome ac9_witnesses() {
  double worst_perm = 0.0;
  double worst_scale = 0.0;
  for (int q : {5, 9, 13}) {
    const Field& f = field_of_order(q);
    const FieldCtx ctx = make_field(f.p, f.alpha);
    const UnitComplex w = critical_omega(f.k);
    const ConferenceMatrix c = build_conference(ctx, w);
    const ConferenceMatrix c_inv = build_conference(ctx, w.conj());
    const EquivalenceWitnesses wit = equivalence_witnesses(ctx, f.k);
    const ConferenceMatrix moved = permute(c_inv, wit.permutation);
    worst_perm = std::max(worst_perm, oracle::max_abs(Eigen::MatrixXcd(moved.values - c.values)));

    const auto n = static_cast<Eigen::Index>(q);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = wit.scaling[static_cast<std::size_t>(i)].value();
    const Eigen::MatrixXcd scaled = d * (-c.values) * d;
    worst_scale = std::max(worst_scale, oracle::max_abs(Eigen::MatrixXcd(scaled - c.values)));
  }
  return {worst_perm <= kTolWitness && worst_scale <= kTolWitness,
          fmt::format("permutation {:.3e}, scaling {:.3e}", worst_perm, worst_scale)};
}

Outcome ac10_order_three() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double least = 1e300;
  for (int t = 0; t < 1000; ++t) {
    const cd a = std::polar(1.0, angle(rng));
    const cd b = std::polar(1.0, angle(rng));
    const cd c = std::polar(1.0, angle(rng));
    Eigen::MatrixXcd m(3, 3);
    m << 0.0, a, b, a, 0.0, c, b, c, 0.0;
    const Eigen::MatrixXcd g = oracle::naive_gram(m, m);
    least = std::min(least, std::abs(g(0, 1)));
  }
  return {least >= kMinOrderThreeModulus, fmt::format("1000 candidates, min |G_12| = {:.15f}", least)};
}

Outcome ac11_rotation_identities() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst_sum = 0.0;
  for (int q : {5, 9, 13}) {
    const Field& f = field_of_order(q);
    const FieldCtx ctx = make_field(f.p, f.alpha);
    for (int t = 0; t < 5; ++t) {
      const double theta = angle(rng);
      const double scalar = f.k - 2 + (f.k - 1) * std::cos(2.0 * theta);
      for (const auto& b : ctx.elements()) {
        if (b == ctx.zero()) continue;
        const Block2 got = rotation_sum_check(ctx, theta, b);
        worst_sum = std::max(worst_sum, (got - scalar * Block2::Identity()).cwiseAbs().maxCoeff());
      }
    }
  }
  double worst_conj = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double eta = angle(rng);
    const double theta = angle(rng);
    const Block2 lhs = oracle::rot(eta / 2) * oracle::refl(theta) * oracle::rot(-eta / 2);
    worst_conj = std::max(worst_conj, (lhs - oracle::refl(eta + theta)).cwiseAbs().maxCoeff());
  }
  return {worst_sum <= kTolRotationSum && worst_conj <= kTolConjugation,
          fmt::format("rotation sums {:.3e}, conjugation {:.3e}", worst_sum, worst_conj)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1  exact Gram exponent counts", ac1_exact_counts},
      {"AC2  C C* = (2k-2) I at critical omega", ac2_conference_identity},
      {"AC3  Gram identity for random omega", ac3_general_omega},
      {"AC4  order-5 reference matrix match", ac4_order_five_match},
      {"AC5  S^2 = (2k-2) I and spectrum", ac5_seidel},
      {"AC6  equi-isoclinic tuple and tight bound", ac6_planes},
      {"AC7  doubled Hadamard matrix", ac7_hadamard},
      {"AC8  open orders for odd k <= 51", ac8_enumeration},
      {"AC9  conjugation and scaling witnesses", ac9_witnesses},
      {"AC10 order-3 nonexistence", ac10_order_three},
      {"AC11 rotation sums and block conjugation", ac11_rotation_identities},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    fmt::print("{} {:<44} {}  [{:.2f}s]\n", o.pass ? "PASS" : "FAIL", name, o.detail, secs);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
