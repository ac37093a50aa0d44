#pragma once

// Self-describing export records for every constructed object.
//
// Two encodings share one data model:
//   text  "key: value" header lines, then one bracketed array per matrix row
//         under "entries:" (and "exponents:" when the exact layer exists),
//         terminated by "end". Reals are written with 17 significant digits.
//   json  a single JSON object with the same keys.
// Complex entries are [re, im] pairs; real entries are plain scalars.

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqiso {

enum class RecordKind { Conference, Seidel, Gram, Planes, Hadamard };
enum class RecordFormat { Text, Json };

std::string_view to_string(RecordKind kind) noexcept;
std::optional<RecordKind> parse_kind(std::string_view name) noexcept;
std::optional<RecordFormat> parse_format(std::string_view name) noexcept;
bool is_complex_kind(RecordKind kind) noexcept;

struct RecordMetadata {
  int p = 0;
  int alpha = 0;
  std::vector<int> modulus;
  double omega_re = 1.0;
  double omega_im = 0.0;
  std::string omega_branch = "principal";
  double cos2theta = 0.0;
  /// Plane parameter 1/(2k-2) of the construction, as an exact fraction.
  std::int64_t lambda_num = 0;
  std::int64_t lambda_den = 1;
  std::optional<std::size_t> scale_row;
  std::optional<double> scale_eta;

  friend bool operator==(const RecordMetadata&, const RecordMetadata&) = default;
};

struct ExportRecord {
  RecordKind kind = RecordKind::Conference;
  /// Construction order q = 2k - 1.
  int order = 0;
  int k = 0;
  double theta = 0.0;
  /// Real kinds keep a zero imaginary part.
  Eigen::MatrixXcd entries;
  std::optional<Eigen::MatrixXi> exponents;
  RecordMetadata metadata;
};

/// Bitwise equality of every field, including the payload.
bool identical(const ExportRecord& a, const ExportRecord& b);

void write_record(std::ostream& os, const ExportRecord& record, RecordFormat format);
std::string to_text(const ExportRecord& record, RecordFormat format);

/// Detects the encoding from the first non-blank character. Throws
/// Error(ParseError) on malformed input.
ExportRecord read_record(std::istream& is);
ExportRecord parse_record(const std::string& text);

}  // namespace eqiso
