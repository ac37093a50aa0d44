#include "eqiso/record.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "eqiso/errors.hpp"

namespace eqiso {

namespace {

using nlohmann::json;

constexpr std::string_view kMagic = "eqiso-record";
constexpr int kVersion = 1;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

// "-0" would read back as the integer 0, so negative zero keeps a decimal point.
std::string real(double v) { return v == 0.0 && std::signbit(v) ? "-0.0" : fmt::format("{:.17g}", v); }

std::string int_array(const std::vector<int>& v) { return fmt::format("[{}]", fmt::join(v, ", ")); }

std::string entry_row(const ExportRecord& r, Eigen::Index i) {
  const bool cplx = is_complex_kind(r.kind);
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(r.entries.cols()));
  for (Eigen::Index j = 0; j < r.entries.cols(); ++j) {
    const auto z = r.entries(i, j);
    cells.push_back(cplx ? fmt::format("[{}, {}]", real(z.real()), real(z.imag())) : real(z.real()));
  }
  return fmt::format("[{}]", fmt::join(cells, ", "));
}

std::string exponent_row(const Eigen::MatrixXi& e, Eigen::Index i) {
  std::vector<int> row(static_cast<std::size_t>(e.cols()));
  for (Eigen::Index j = 0; j < e.cols(); ++j) row[static_cast<std::size_t>(j)] = e(i, j);
  return int_array(row);
}

std::string lambda_text(const RecordMetadata& m) { return fmt::format("{}/{}", m.lambda_num, m.lambda_den); }

void write_text(std::ostream& os, const ExportRecord& r) {
  const auto& m = r.metadata;
  os << "format: " << kMagic << '\n';
  os << "version: " << kVersion << '\n';
  os << "kind: " << to_string(r.kind) << '\n';
  os << "order: " << r.order << '\n';
  os << "k: " << r.k << '\n';
  os << "theta: " << real(r.theta) << '\n';
  os << "cos2theta: " << real(m.cos2theta) << '\n';
  os << "p: " << m.p << '\n';
  os << "alpha: " << m.alpha << '\n';
  os << "modulus: " << int_array(m.modulus) << '\n';
  os << "omega: [" << real(m.omega_re) << ", " << real(m.omega_im) << "]\n";
  os << "omega_branch: " << m.omega_branch << '\n';
  os << "lambda: " << lambda_text(m) << '\n';
  if (m.scale_row) os << "scale_row: " << *m.scale_row << '\n';
  if (m.scale_eta) os << "scale_eta: " << real(*m.scale_eta) << '\n';
  os << "rows: " << r.entries.rows() << '\n';
  os << "cols: " << r.entries.cols() << '\n';
  os << "entries:\n";
  for (Eigen::Index i = 0; i < r.entries.rows(); ++i) os << entry_row(r, i) << '\n';
  if (r.exponents) {
    os << "exponents:\n";
    for (Eigen::Index i = 0; i < r.exponents->rows(); ++i) os << exponent_row(*r.exponents, i) << '\n';
  }
  os << "end\n";
}

json to_json(const ExportRecord& r) {
  const auto& m = r.metadata;
  json j;
  j["format"] = kMagic;
  j["version"] = kVersion;
  j["kind"] = to_string(r.kind);
  j["order"] = r.order;
  j["k"] = r.k;
  j["theta"] = r.theta;
  json meta;
  meta["cos2theta"] = m.cos2theta;
  meta["p"] = m.p;
  meta["alpha"] = m.alpha;
  meta["modulus"] = m.modulus;
  meta["omega"] = {m.omega_re, m.omega_im};
  meta["omega_branch"] = m.omega_branch;
  meta["lambda"] = lambda_text(m);
  if (m.scale_row) meta["scale_row"] = *m.scale_row;
  if (m.scale_eta) meta["scale_eta"] = *m.scale_eta;
  j["metadata"] = std::move(meta);
  j["rows"] = r.entries.rows();
  j["cols"] = r.entries.cols();
  const bool cplx = is_complex_kind(r.kind);
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < r.entries.cols(); ++c) {
      const auto z = r.entries(i, c);
      if (cplx) {
        row.push_back({z.real(), z.imag()});
      } else {
        row.push_back(z.real());
      }
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  if (r.exponents) {
    json ex = json::array();
    for (Eigen::Index i = 0; i < r.exponents->rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < r.exponents->cols(); ++c) row.push_back((*r.exponents)(i, c));
      ex.push_back(std::move(row));
    }
    j["exponents"] = std::move(ex);
  }
  return j;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) parse_fail(fmt::format("bad value '{}' for '{}'", text, key));
  return value;
}

void parse_lambda(std::string_view text, RecordMetadata& m) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) parse_fail("lambda must be written num/den");
  m.lambda_num = parse_number<std::int64_t>(text.substr(0, slash), "lambda");
  m.lambda_den = parse_number<std::int64_t>(text.substr(slash + 1), "lambda");
  if (m.lambda_den <= 0) parse_fail("lambda denominator must be positive");
}

std::complex<double> cell_value(const json& cell, bool cplx) {
  if (cplx) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      parse_fail("complex entry must be a [re, im] pair");
    }
    return {cell[0].get<double>(), cell[1].get<double>()};
  }
  if (!cell.is_number()) parse_fail("real entry must be a number");
  return {cell.get<double>(), 0.0};
}

void fill_entry_row(ExportRecord& r, Eigen::Index i, const json& row) {
  if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != r.entries.cols()) {
    parse_fail(fmt::format("entry row {} has the wrong length", i));
  }
  const bool cplx = is_complex_kind(r.kind);
  for (Eigen::Index c = 0; c < r.entries.cols(); ++c) {
    r.entries(i, c) = cell_value(row[static_cast<std::size_t>(c)], cplx);
  }
}

void fill_exponent_row(Eigen::MatrixXi& e, Eigen::Index i, const json& row) {
  if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != e.cols()) {
    parse_fail(fmt::format("exponent row {} has the wrong length", i));
  }
  for (Eigen::Index c = 0; c < e.cols(); ++c) {
    const auto& v = row[static_cast<std::size_t>(c)];
    if (!v.is_number_integer()) parse_fail("exponents must be integers");
    e(i, c) = v.get<int>();
  }
}

json parse_json_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) parse_fail(fmt::format("malformed array line '{}'", line));
  return j;
}

Eigen::Index dimension(std::int64_t v, std::string_view what) {
  if (v < 0 || v > 1'000'000) parse_fail(fmt::format("implausible {} {}", what, v));
  return static_cast<Eigen::Index>(v);
}

ExportRecord read_text(std::istream& is) {
  std::map<std::string, std::string, std::less<>> header;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "entries:") break;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) parse_fail(fmt::format("malformed header line '{}'", line));
    header[line.substr(0, colon)] = line.substr(colon + 2);
  }
  if (line != "entries:") parse_fail("missing entries section");

  auto get = [&](std::string_view key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end()) parse_fail(fmt::format("missing header key '{}'", key));
    return it->second;
  };
  if (get("format") != kMagic) parse_fail("not an eqiso record");
  if (parse_number<int>(get("version"), "version") != kVersion) parse_fail("unsupported version");

  ExportRecord r;
  const auto kind = parse_kind(get("kind"));
  if (!kind) parse_fail(fmt::format("unknown kind '{}'", get("kind")));
  r.kind = *kind;
  r.order = parse_number<int>(get("order"), "order");
  r.k = parse_number<int>(get("k"), "k");
  r.theta = parse_number<double>(get("theta"), "theta");
  auto& m = r.metadata;
  m.cos2theta = parse_number<double>(get("cos2theta"), "cos2theta");
  m.p = parse_number<int>(get("p"), "p");
  m.alpha = parse_number<int>(get("alpha"), "alpha");
  const json modulus = parse_json_line(get("modulus"));
  if (!modulus.is_array()) parse_fail("modulus must be an array");
  for (const auto& c : modulus) {
    if (!c.is_number_integer()) parse_fail("modulus coefficients must be integers");
    m.modulus.push_back(c.get<int>());
  }
  const json omega = parse_json_line(get("omega"));
  const auto w = cell_value(omega, true);
  m.omega_re = w.real();
  m.omega_im = w.imag();
  m.omega_branch = get("omega_branch");
  parse_lambda(get("lambda"), m);
  if (header.contains("scale_row")) m.scale_row = parse_number<std::size_t>(get("scale_row"), "scale_row");
  if (header.contains("scale_eta")) m.scale_eta = parse_number<double>(get("scale_eta"), "scale_eta");

  const auto rows = dimension(parse_number<std::int64_t>(get("rows"), "rows"), "rows");
  const auto cols = dimension(parse_number<std::int64_t>(get("cols"), "cols"), "cols");
  r.entries.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) parse_fail("truncated entries section");
    fill_entry_row(r, i, parse_json_line(line));
  }
  if (!std::getline(is, line)) parse_fail("missing end marker");
  if (line == "exponents:") {
    Eigen::MatrixXi e(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!std::getline(is, line)) parse_fail("truncated exponents section");
      fill_exponent_row(e, i, parse_json_line(line));
    }
    r.exponents = std::move(e);
    if (!std::getline(is, line)) parse_fail("missing end marker");
  }
  if (line != "end") parse_fail(fmt::format("expected end marker, found '{}'", line));
  return r;
}

ExportRecord read_json(std::istream& is) {
  const json j = json::parse(is, nullptr, false);
  if (j.is_discarded() || !j.is_object()) parse_fail("malformed JSON record");
  try {
    if (j.at("format").get<std::string>() != kMagic) parse_fail("not an eqiso record");
    if (j.at("version").get<int>() != kVersion) parse_fail("unsupported version");
    ExportRecord r;
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!kind) parse_fail("unknown kind");
    r.kind = *kind;
    r.order = j.at("order").get<int>();
    r.k = j.at("k").get<int>();
    r.theta = j.at("theta").get<double>();
    const json& meta = j.at("metadata");
    auto& m = r.metadata;
    m.cos2theta = meta.at("cos2theta").get<double>();
    m.p = meta.at("p").get<int>();
    m.alpha = meta.at("alpha").get<int>();
    m.modulus = meta.at("modulus").get<std::vector<int>>();
    const auto w = cell_value(meta.at("omega"), true);
    m.omega_re = w.real();
    m.omega_im = w.imag();
    m.omega_branch = meta.at("omega_branch").get<std::string>();
    parse_lambda(meta.at("lambda").get<std::string>(), m);
    if (meta.contains("scale_row")) m.scale_row = meta.at("scale_row").get<std::size_t>();
    if (meta.contains("scale_eta")) m.scale_eta = meta.at("scale_eta").get<double>();

    const auto rows = dimension(j.at("rows").get<std::int64_t>(), "rows");
    const auto cols = dimension(j.at("cols").get<std::int64_t>(), "cols");
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows) {
      parse_fail("entries row count mismatch");
    }
    r.entries.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) fill_entry_row(r, i, entries[static_cast<std::size_t>(i)]);
    if (j.contains("exponents")) {
      const json& ex = j.at("exponents");
      if (!ex.is_array() || static_cast<Eigen::Index>(ex.size()) != rows) {
        parse_fail("exponents row count mismatch");
      }
      Eigen::MatrixXi e(rows, cols);
      for (Eigen::Index i = 0; i < rows; ++i) fill_exponent_row(e, i, ex[static_cast<std::size_t>(i)]);
      r.exponents = std::move(e);
    }
    return r;
  } catch (const json::exception& e) {
    parse_fail(fmt::format("malformed JSON record: {}", e.what()));
  }
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

std::string_view to_string(RecordKind kind) noexcept {
  switch (kind) {
    case RecordKind::Conference: return "conference";
    case RecordKind::Seidel: return "seidel";
    case RecordKind::Gram: return "gram";
    case RecordKind::Planes: return "planes";
    case RecordKind::Hadamard: return "hadamard";
  }
  return "unknown";
}

std::optional<RecordKind> parse_kind(std::string_view name) noexcept {
  for (auto kind : {RecordKind::Conference, RecordKind::Seidel, RecordKind::Gram, RecordKind::Planes,
                    RecordKind::Hadamard}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<RecordFormat> parse_format(std::string_view name) noexcept {
  if (name == "text") return RecordFormat::Text;
  if (name == "json") return RecordFormat::Json;
  return std::nullopt;
}

bool is_complex_kind(RecordKind kind) noexcept {
  return kind == RecordKind::Conference || kind == RecordKind::Hadamard;
}

bool identical(const ExportRecord& a, const ExportRecord& b) {
  if (a.kind != b.kind || a.order != b.order || a.k != b.k || !same_bits(a.theta, b.theta)) return false;
  const auto& ma = a.metadata;
  const auto& mb = b.metadata;
  if (ma.p != mb.p || ma.alpha != mb.alpha || ma.modulus != mb.modulus ||
      !same_bits(ma.omega_re, mb.omega_re) || !same_bits(ma.omega_im, mb.omega_im) ||
      ma.omega_branch != mb.omega_branch || !same_bits(ma.cos2theta, mb.cos2theta) ||
      ma.lambda_num != mb.lambda_num || ma.lambda_den != mb.lambda_den || ma.scale_row != mb.scale_row ||
      ma.scale_eta.has_value() != mb.scale_eta.has_value() ||
      (ma.scale_eta && !same_bits(*ma.scale_eta, *mb.scale_eta))) {
    return false;
  }
  if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols()) return false;
  for (Eigen::Index i = 0; i < a.entries.size(); ++i) {
    const auto x = a.entries.data()[i];
    const auto y = b.entries.data()[i];
    if (!same_bits(x.real(), y.real()) || !same_bits(x.imag(), y.imag())) return false;
  }
  if (a.exponents.has_value() != b.exponents.has_value()) return false;
  return !a.exponents || *a.exponents == *b.exponents;
}

void write_record(std::ostream& os, const ExportRecord& record, RecordFormat format) {
  if (format == RecordFormat::Json) {
    os << to_json(record).dump(1) << '\n';
  } else {
    write_text(os, record);
  }
}

std::string to_text(const ExportRecord& record, RecordFormat format) {
  std::ostringstream os;
  write_record(os, record, format);
  return os.str();
}

ExportRecord read_record(std::istream& is) {
  is >> std::ws;
  if (is.peek() == '{') return read_json(is);
  return read_text(is);
}

ExportRecord parse_record(const std::string& text) {
  std::istringstream is(text);
  return read_record(is);
}

}  // namespace eqiso
