#include "eqiso/commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <ostream>

#include "eqiso/conference.hpp"
#include "eqiso/errors.hpp"
#include "eqiso/hadamard.hpp"
#include "eqiso/planes.hpp"
#include "eqiso/seidel.hpp"

namespace eqiso {

namespace {

constexpr double kPipelineTolerance = 1e-10;
constexpr double kPlaneTolerance = 1e-9;
constexpr double kTraceTolerance = 1e-8;

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Eigen::Index expected_rows(RecordKind kind, Eigen::Index q) {
  switch (kind) {
    case RecordKind::Conference: return q;
    case RecordKind::Planes: return q;
    default: return 2 * q;
  }
}

Eigen::Index expected_cols(RecordKind kind, Eigen::Index q) {
  return kind == RecordKind::Conference ? q : 2 * q;
}

void add(VerifyReport& report, std::string name, double value, double tol) {
  report.residuals.push_back({std::move(name), value, value <= tol});
}

void add_flag(VerifyReport& report, std::string name, bool ok) {
  report.residuals.push_back({std::move(name), ok ? 0.0 : 1.0, ok});
}

double asymmetry(const Eigen::MatrixXcd& m) { return (m - m.transpose()).cwiseAbs().maxCoeff(); }

void verify_conference_record(const ExportRecord& r, double tol, bool exact, VerifyReport& report) {
  const Eigen::MatrixXcd& c = r.entries;
  const auto n = c.rows();
  double diagonal = 0.0;
  double modulus = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        diagonal = std::max(diagonal, std::abs(c(i, j)));
      } else {
        modulus = std::max(modulus, std::abs(std::abs(c(i, j)) - 1.0));
      }
    }
  }
  add(report, "symmetry", asymmetry(c), tol);
  add(report, "diagonal", diagonal, tol);
  add(report, "unimodularity", modulus, tol);
  add(report, "conference", conference_residual(c), tol);
  if (!exact) return;

  const auto& m = r.metadata;
  const UnitComplex omega(m.omega_re, m.omega_im);
  ConferenceMatrix cm;
  cm.q = static_cast<std::size_t>(n);
  cm.k = r.k;
  cm.omega = omega;
  cm.exponents = *r.exponents;
  cm.values = c;
  add_flag(report, "exact-counts", verify_conference_exact(cm));
  double consistency = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const int e = (*r.exponents)(i, j);
      const std::complex<double> expected =
          i == j ? std::complex<double>{0.0, 0.0} : std::pow(omega.value(), e);
      consistency = std::max(consistency, std::abs(c(i, j) - expected));
    }
  }
  add(report, "exponent-consistency", consistency, tol);
}

void verify_seidel_record(const ExportRecord& r, double tol, VerifyReport& report) {
  const Eigen::MatrixXd s = r.entries.real();
  const auto q = s.rows() / 2;
  double diag = 0.0;
  double orth = 0.0;
  for (Eigen::Index a = 0; a < q; ++a) {
    for (Eigen::Index b = 0; b < q; ++b) {
      const Eigen::Matrix2d blk = s.block<2, 2>(2 * a, 2 * b);
      if (a == b) {
        diag = std::max(diag, blk.cwiseAbs().maxCoeff());
      } else {
        orth = std::max(orth, (blk.transpose() * blk - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
      }
    }
  }
  add(report, "symmetry", (s - s.transpose()).cwiseAbs().maxCoeff(), tol);
  add(report, "diagonal-blocks", diag, tol);
  add(report, "block-orthogonality", orth, tol);
  add(report, "square", seidel_square_residual(s, r.k), tol);
}

Rational record_lambda(const ExportRecord& r) {
  const auto& m = r.metadata;
  if (m.lambda_num <= 0 || m.lambda_den <= 0 || m.lambda_num >= m.lambda_den) {
    precondition("record carries no valid plane parameter lambda");
  }
  return Rational(m.lambda_num, m.lambda_den);
}

void verify_gram_record(const ExportRecord& r, double tol, VerifyReport& report) {
  const Eigen::MatrixXd a = r.entries.real();
  const Rational lambda_exact = record_lambda(r);
  const double lambda =
      static_cast<double>(lambda_exact.numerator()) / static_cast<double>(lambda_exact.denominator());
  const auto n = a.rows() / 2;
  double diag = 0.0;
  double iso = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Matrix2d blk = a.block<2, 2>(2 * i, 2 * j);
      if (i == j) {
        diag = std::max(diag, (blk - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
      } else {
        const Eigen::Matrix2d dev = blk.transpose() * blk - lambda * Eigen::Matrix2d::Identity();
        iso = std::max(iso, dev.cwiseAbs().maxCoeff());
      }
    }
  }
  add(report, "symmetry", (a - a.transpose()).cwiseAbs().maxCoeff(), tol);
  add(report, "diagonal-blocks", diag, tol);
  add(report, "isoclinic-blocks", iso, tol);
  add(report, "idempotence", (a * a - 2.0 * a).cwiseAbs().maxCoeff(), tol);
  const RankCertificate cert = rank_certificate(a);
  add_flag(report, fmt::format("rank={}", cert.rank), cert.rank == 2 * r.k - 1);
}

void verify_planes_record(const ExportRecord& r, double tol, VerifyReport& report) {
  PlaneTuple pt;
  pt.basis = r.entries.real();
  pt.r = static_cast<int>(pt.basis.rows());
  pt.n = static_cast<int>(pt.basis.cols() / 2);
  pt.lambda = record_lambda(r);
  pt.gram = pt.basis.transpose() * pt.basis;
  add(report, "orthonormality", orthonormality_deviation(pt), tol);
  add(report, "isoclinic", verify_isoclinic(pt), tol);
  const auto rank = Eigen::FullPivLU<Eigen::MatrixXd>(pt.basis).rank();
  add_flag(report, fmt::format("rank={}", rank), rank == 2 * r.k - 1);
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& res : report.residuals) {
    fmt::print(out, "{:<22} {:>12.3e}  {}\n", res.name, res.value, res.pass ? "ok" : "FAIL");
  }
  fmt::print(out, "{}\n", report.pass() ? "PASS" : "FAIL");
}

std::string_view status_name(OrderStatus s) {
  switch (s) {
    case OrderStatus::Admissible: return "ADMISSIBLE";
    case OrderStatus::Open: return "OPEN";
    case OrderStatus::Excluded: return "EXCLUDED";
  }
  return "?";
}

}  // namespace

Admissibility check_admissible(int k) {
  Admissibility a;
  a.k = k;
  a.q = 2 * static_cast<std::int64_t>(k) - 1;
  if (k < 3) {
    a.reason = "k must be at least 3";
    return a;
  }
  a.prime_power = as_prime_power(a.q);
  if (!a.prime_power || a.prime_power->p == 2) {
    a.prime_power.reset();
    a.reason = fmt::format("2k-1 not an odd prime power (q = {})", a.q);
    return a;
  }
  if (a.q % 4 != 1) {
    a.reason = fmt::format("2k not 2 mod 4 (q = {} is 3 mod 4, so chi(-1) = -1)", a.q);
    return a;
  }
  a.admissible = true;
  return a;
}

std::vector<EnumerationRow> enumerate_orders(int k_min, int k_max, bool odd_only) {
  std::vector<EnumerationRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    if (odd_only && k % 2 == 0) continue;
    EnumerationRow row;
    row.k = k;
    row.q = 2 * static_cast<std::int64_t>(k) - 1;
    if (k % 2 == 0) {
      row.status = OrderStatus::Excluded;
    } else {
      const Admissibility a = check_admissible(k);
      row.status = a.admissible ? OrderStatus::Admissible : OrderStatus::Open;
      row.prime_power = a.prime_power;
    }
    rows.push_back(row);
  }
  return rows;
}

ExportRecord make_record(RecordKind kind, int k, std::optional<std::size_t> scale_row, double eta) {
  const Admissibility adm = check_admissible(k);
  if (!adm.admissible) throw Error(ErrorCode::InvalidOrder, adm.reason);
  const FieldCtx ctx = make_field(static_cast<int>(adm.prime_power->p), adm.prime_power->alpha);
  const std::size_t q = ctx.q();
  if (scale_row && *scale_row >= q) {
    throw std::out_of_range(fmt::format("scale row {} out of range for order {}", *scale_row, q));
  }
  const UnitComplex omega0 = critical_omega(k);

  ExportRecord r;
  r.kind = kind;
  r.order = static_cast<int>(q);
  r.k = k;
  r.theta = critical_theta(k);
  auto& m = r.metadata;
  m.p = ctx.p();
  m.alpha = ctx.alpha();
  m.modulus = ctx.modulus();
  m.omega_re = omega0.re();
  m.omega_im = omega0.im();
  m.omega_branch = "principal";
  m.cos2theta = static_cast<double>(2 - k) / static_cast<double>(k - 1);
  const Rational lambda = isoclinic_parameter(k);
  m.lambda_num = lambda.numerator();
  m.lambda_den = lambda.denominator();
  if (scale_row) {
    m.scale_row = scale_row;
    m.scale_eta = eta;
  }

  auto conference = [&] {
    ConferenceMatrix c = build_conference(ctx, omega0);
    return scale_row ? scale_row_col(c, *scale_row, UnitComplex::polar(eta)) : c;
  };
  auto seidel = [&] {
    SeidelMatrix s = build_seidel(ctx, k);
    return scale_row ? transport_scaling(s, *scale_row, eta) : s;
  };

  switch (kind) {
    case RecordKind::Conference: {
      ConferenceMatrix c = conference();
      r.entries = c.values;
      r.exponents = c.exponents;
      break;
    }
    case RecordKind::Seidel:
      r.entries = seidel().dense().cast<std::complex<double>>();
      break;
    case RecordKind::Gram:
      r.entries = build_gram(seidel()).cast<std::complex<double>>();
      break;
    case RecordKind::Planes: {
      const PlaneTuple pt = extract_bases(build_gram(seidel()), 2 * k - 1, lambda);
      r.entries = pt.basis.cast<std::complex<double>>();
      break;
    }
    case RecordKind::Hadamard:
      r.entries = double_conference(conference()).values;
      break;
  }
  return r;
}

bool VerifyReport::pass() const {
  if (residuals.empty()) return false;
  for (const auto& r : residuals) {
    if (!r.pass) return false;
  }
  return true;
}

VerifyReport verify_record(const ExportRecord& record, double tol, bool exact) {
  if (record.k < 3 || record.order != 2 * record.k - 1) {
    precondition(fmt::format("order {} is not 2k-1 for k = {}", record.order, record.k));
  }
  const auto q = static_cast<Eigen::Index>(record.order);
  if (record.entries.rows() != expected_rows(record.kind, q) ||
      record.entries.cols() != expected_cols(record.kind, q)) {
    precondition(fmt::format("{} record of order {} cannot be {}x{}", to_string(record.kind), q,
                             record.entries.rows(), record.entries.cols()));
  }
  if (exact && (record.kind != RecordKind::Conference || !record.exponents)) {
    throw Error(ErrorCode::ExactLayerUnavailable, "exact layer unavailable");
  }
  if (record.exponents && (record.exponents->rows() != q || record.exponents->cols() != q)) {
    precondition("exponent layer has the wrong shape");
  }

  VerifyReport report;
  switch (record.kind) {
    case RecordKind::Conference: verify_conference_record(record, tol, exact, report); break;
    case RecordKind::Seidel: verify_seidel_record(record, tol, report); break;
    case RecordKind::Gram: verify_gram_record(record, tol, report); break;
    case RecordKind::Planes: verify_planes_record(record, tol, report); break;
    case RecordKind::Hadamard: add(report, "hadamard", verify_hadamard(record.entries), tol); break;
  }
  return report;
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  const Admissibility adm = check_admissible(opts.k);
  if (!adm.admissible) {
    fmt::print(err, "inadmissible k = {}: {}\n", opts.k, adm.reason);
    return kExitInadmissible;
  }
  ExportRecord record;
  try {
    record = make_record(opts.kind, opts.k, opts.scale_row, opts.eta);
  } catch (const std::out_of_range& e) {
    fmt::print(err, "{}\n", e.what());
    return kExitParseError;
  }
  if (opts.out.empty() || opts.out == "-") {
    write_record(out, record, opts.format);
    return out ? kExitPass : kExitIoError;
  }
  std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    fmt::print(err, "cannot open '{}' for writing\n", opts.out);
    return kExitIoError;
  }
  write_record(file, record, opts.format);
  file.close();
  if (!file) {
    fmt::print(err, "write to '{}' failed\n", opts.out);
    return kExitIoError;
  }
  fmt::print(out, "wrote {} record ({}x{}, k = {}) to {}\n", to_string(record.kind), record.entries.rows(),
             record.entries.cols(), record.k, opts.out);
  return kExitPass;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::ifstream file(opts.in, std::ios::binary);
  if (!file) {
    fmt::print(err, "cannot open '{}'\n", opts.in);
    return kExitIoError;
  }
  try {
    const ExportRecord record = read_record(file);
    fmt::print(out, "{} record, k = {}, order {}\n", to_string(record.kind), record.k, record.order);
    const VerifyReport report = verify_record(record, opts.tol, opts.exact);
    print_report(report, out);
    return report.pass() ? kExitPass : kExitVerificationFailure;
  } catch (const Error& e) {
    fmt::print(err, "{}\n", e.what());
    return kExitParseError;
  }
}

int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.k_min < 3 || opts.k_min > opts.k_max) {
    fmt::print(err, "need 3 <= k-min <= k-max, got [{}, {}]\n", opts.k_min, opts.k_max);
    return kExitParseError;
  }
  int admissible = 0;
  std::vector<int> open;
  for (const auto& row : enumerate_orders(opts.k_min, opts.k_max, opts.odd_only)) {
    if (row.status == OrderStatus::Admissible) {
      ++admissible;
      fmt::print(out, "k={:<4} q={:<6} {:<10} p={} alpha={}\n", row.k, row.q, status_name(row.status),
                 row.prime_power->p, row.prime_power->alpha);
    } else {
      if (row.status == OrderStatus::Open) open.push_back(row.k);
      fmt::print(out, "k={:<4} q={:<6} {}\n", row.k, row.q, status_name(row.status));
    }
  }
  fmt::print(out, "admissible: {}  open: {}\n", admissible, open.size());
  fmt::print(out, "open k: {}\n", fmt::join(open, ", "));
  return kExitPass;
}

int cmd_pipeline(int k, std::ostream& out, std::ostream& err) {
  const Admissibility adm = check_admissible(k);
  if (!adm.admissible) {
    fmt::print(out, "{:<22} FAIL  {}\n", "admissibility", adm.reason);
    fmt::print(err, "inadmissible k = {}: {}\n", k, adm.reason);
    return kExitInadmissible;
  }
  fmt::print(out, "{:<22} PASS  q = {} = {}^{}\n", "admissibility", adm.q, adm.prime_power->p,
             adm.prime_power->alpha);

  std::string failed;
  auto stage = [&](std::string_view name, bool ok, const std::string& detail) {
    fmt::print(out, "{:<22} {}  {}\n", name, ok ? "PASS" : "FAIL", detail);
    if (!ok && failed.empty()) failed = name;
  };

  const FieldCtx ctx = make_field(static_cast<int>(adm.prime_power->p), adm.prime_power->alpha);
  const ConferenceMatrix c = build_conference(ctx, critical_omega(k));
  stage("conference-exact", verify_conference_exact(c),
        fmt::format("counts ({}, {}, {})", k - 2, (k - 1) / 2, (k - 1) / 2));
  const double cres = verify_conference_numeric(c);
  stage("conference-numeric", cres <= kPipelineTolerance, fmt::format("residual {:.3e}", cres));

  const SeidelMatrix s = build_seidel(ctx, k);
  const double sres = verify_seidel_square(s);
  stage("seidel-square", sres <= kPipelineTolerance, fmt::format("residual {:.3e}", sres));
  if (sres <= kPipelineTolerance) {
    const EigenStructure es = eigen_structure(s);
    const bool ok = es.positive_multiplicity == 2 * k - 1 && es.negative_multiplicity == 2 * k - 1 &&
                    std::abs(es.positive_trace - es.positive_multiplicity) <= kTraceTolerance &&
                    std::abs(es.negative_trace - es.negative_multiplicity) <= kTraceTolerance;
    stage("seidel-spectrum", ok,
          fmt::format("+{:.6f} x{}, {:.6f} x{}", es.positive, es.positive_multiplicity, es.negative,
                      es.negative_multiplicity));
  }

  const Rational lambda = isoclinic_parameter(k);
  try {
    const PlaneTuple pt = extract_bases(build_gram(s), 2 * k - 1, lambda);
    const double orth = orthonormality_deviation(pt);
    const double iso = verify_isoclinic(pt);
    const double recon = gram_reconstruction_residual(pt);
    stage("planes-isoclinic", orth <= kPipelineTolerance && iso <= kPlaneTolerance && recon <= kPlaneTolerance,
          fmt::format("{} planes in R^{}, lambda = {}/{}, deviation {:.3e}", pt.n, pt.r,
                      lambda.numerator(), lambda.denominator(), iso));
  } catch (const Error& e) {
    stage("planes-isoclinic", false, e.what());
  }

  const LsBound bound = check_ls_bound(2 * k - 1, lambda, 2 * k - 1);
  stage("bound-tightness", bound.tight, fmt::format("bound {} attained by {}", bound.bound, 2 * k - 1));

  try {
    const double hres = verify_hadamard(double_conference(c));
    stage("hadamard", hres <= kPlaneTolerance, fmt::format("order {}, residual {:.3e}", 2 * c.q, hres));
  } catch (const Error& e) {
    stage("hadamard", false, e.what());
  }

  if (!failed.empty()) {
    fmt::print(err, "pipeline failed at stage {}\n", failed);
    return kExitVerificationFailure;
  }
  fmt::print(out, "all stages PASS\n");
  return kExitPass;
}

}  // namespace eqiso
