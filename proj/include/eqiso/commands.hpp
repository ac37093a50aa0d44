#pragma once

// Command implementations behind the `eqiso` executable. Each command writes
// human-readable output to `out`, diagnostics to `err`, and returns the
// process exit code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqiso/gf.hpp"
#include "eqiso/record.hpp"

namespace eqiso {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInadmissible = 2,
  kExitIoError = 3,
  kExitParseError = 4,
};

struct Admissibility {
  int k = 0;
  std::int64_t q = 0;
  std::optional<PrimePower> prime_power;
  bool admissible = false;
  /// Names the first failed condition; empty when admissible.
  std::string reason;
};

/// q = 2k - 1 must be an odd prime power with q = 1 (mod 4) and k >= 3.
Admissibility check_admissible(int k);

enum class OrderStatus { Admissible, Open, Excluded };

struct EnumerationRow {
  int k = 0;
  std::int64_t q = 0;
  OrderStatus status = OrderStatus::Open;
  std::optional<PrimePower> prime_power;
};

/// Odd k with 2k - 1 an odd prime power are Admissible, other odd k Open;
/// even k (2k = 0 mod 4) are Excluded and skipped when `odd_only` is set.
std::vector<EnumerationRow> enumerate_orders(int k_min, int k_max, bool odd_only);

/// Builds the export record for an admissible k. When `scale_row` is set,
/// row and column `scale_row` of the conference matrix are scaled by
/// e^{i eta} (and the derived objects transported accordingly); the record
/// then has no exact layer.
ExportRecord make_record(RecordKind kind, int k, std::optional<std::size_t> scale_row = std::nullopt,
                         double eta = 0.0);

struct Residual {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Residual> residuals;
  bool pass() const;
};

/// Kind-appropriate checks against `tol`. With `exact`, conference records
/// are additionally certified by exponent counting; a record without the
/// exact layer throws Error(ExactLayerUnavailable).
VerifyReport verify_record(const ExportRecord& record, double tol, bool exact);

struct GenerateOptions {
  RecordKind kind = RecordKind::Conference;
  int k = 3;
  RecordFormat format = RecordFormat::Text;
  std::string out = "-";
  std::optional<std::size_t> scale_row;
  double eta = 0.0;
};

struct VerifyOptions {
  std::string in;
  double tol = 1e-9;
  bool exact = false;
};

struct EnumerateOptions {
  int k_min = 3;
  int k_max = 51;
  bool odd_only = false;
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_pipeline(int k, std::ostream& out, std::ostream& err);

}  // namespace eqiso
