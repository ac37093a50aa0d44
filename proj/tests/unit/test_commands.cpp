#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "eqiso/commands.hpp"
#include "eqiso/errors.hpp"

namespace eqiso {
namespace {

namespace fs = std::filesystem;

std::string temp_path(const std::string& name) { return (fs::path(::testing::TempDir()) / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int generate_to(const std::string& path, RecordKind kind, int k, RecordFormat format = RecordFormat::Text) {
  GenerateOptions g;
  g.kind = kind;
  g.k = k;
  g.format = format;
  g.out = path;
  std::ostringstream out, err;
  return cmd_generate(g, out, err);
}

int verify_file(const std::string& path, bool exact = false, std::string* stdout_text = nullptr) {
  VerifyOptions v;
  v.in = path;
  v.exact = exact;
  std::ostringstream out, err;
  const int rc = cmd_verify(v, out, err);
  if (stdout_text) *stdout_text = out.str();
  return rc;
}

TEST(Admissibility, Examples) {
  EXPECT_TRUE(check_admissible(3).admissible);
  EXPECT_TRUE(check_admissible(13).admissible);
  EXPECT_EQ(check_admissible(13).prime_power->p, 5);
  EXPECT_EQ(check_admissible(13).prime_power->alpha, 2);
  EXPECT_FALSE(check_admissible(33).admissible);
  EXPECT_NE(check_admissible(33).reason.find("prime power"), std::string::npos);
  EXPECT_FALSE(check_admissible(4).admissible);
  EXPECT_NE(check_admissible(4).reason.find("2 mod 4"), std::string::npos);
  EXPECT_FALSE(check_admissible(2).admissible);
}

TEST(Enumerate, OddOrdersUpTo51) {
  int admissible = 0;
  std::set<int> open;
  for (const auto& row : enumerate_orders(3, 51, true)) {
    EXPECT_EQ(row.k % 2, 1);
    if (row.status == OrderStatus::Admissible) ++admissible;
    if (row.status == OrderStatus::Open) open.insert(row.k);
  }
  EXPECT_EQ(admissible, 16);
  EXPECT_EQ(open, (std::set<int>{11, 17, 23, 29, 33, 35, 39, 43, 47}));
}

TEST(Enumerate, EvenOrdersExcluded) {
  for (const auto& row : enumerate_orders(3, 20, false)) {
    if (row.k % 2 == 0) EXPECT_EQ(row.status, OrderStatus::Excluded);
  }
}

TEST(Enumerate, CommandOutput) {
  EnumerateOptions e;
  e.odd_only = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_enumerate(e, out, err), kExitPass);
  EXPECT_NE(out.str().find("admissible: 16  open: 9"), std::string::npos);
  EXPECT_NE(out.str().find("open k: 11, 17, 23, 29, 33, 35, 39, 43, 47"), std::string::npos);
  e.k_min = 10;
  e.k_max = 5;
  EXPECT_EQ(cmd_enumerate(e, out, err), kExitParseError);
}

TEST(Generate, ShapesAndExitCodes) {
  const std::string path = temp_path("conf3.txt");
  ASSERT_EQ(generate_to(path, RecordKind::Conference, 3), kExitPass);
  const ExportRecord r = parse_record(slurp(path));
  EXPECT_EQ(r.entries.rows(), 5);
  EXPECT_EQ(r.entries.cols(), 5);
  EXPECT_EQ(r.k, 3);

  EXPECT_EQ(generate_to(temp_path("k4.txt"), RecordKind::Conference, 4), kExitInadmissible);
  EXPECT_EQ(generate_to(temp_path("k11.txt"), RecordKind::Conference, 11), kExitInadmissible);

  const std::string seidel = temp_path("seidel5.json");
  ASSERT_EQ(generate_to(seidel, RecordKind::Seidel, 5, RecordFormat::Json), kExitPass);
  EXPECT_EQ(parse_record(slurp(seidel)).entries.rows(), 18);

  EXPECT_EQ(generate_to("/nonexistent-dir/x.txt", RecordKind::Conference, 3), kExitIoError);

  GenerateOptions g;
  g.k = 3;
  g.scale_row = 7;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_generate(g, out, err), kExitParseError);
}

TEST(Generate, ByteIdenticalAcrossRuns) {
  for (auto format : {RecordFormat::Text, RecordFormat::Json}) {
    const std::string a = temp_path("det_a");
    const std::string b = temp_path("det_b");
    ASSERT_EQ(generate_to(a, RecordKind::Planes, 7, format), kExitPass);
    ASSERT_EQ(generate_to(b, RecordKind::Planes, 7, format), kExitPass);
    EXPECT_EQ(slurp(a), slurp(b));
  }
}

TEST(Verify, PassCorruptAndMissing) {
  const std::string path = temp_path("verify3.txt");
  ASSERT_EQ(generate_to(path, RecordKind::Conference, 3), kExitPass);
  EXPECT_EQ(verify_file(path), kExitPass);
  EXPECT_EQ(verify_file(path, true), kExitPass);

  ExportRecord r = parse_record(slurp(path));
  r.entries(0, 1) = -r.entries(0, 1);
  r.entries(1, 0) = -r.entries(1, 0);
  r.exponents.reset();
  const std::string corrupt = temp_path("corrupt3.txt");
  {
    std::ofstream f(corrupt);
    write_record(f, r, RecordFormat::Text);
  }
  std::string report;
  EXPECT_EQ(verify_file(corrupt, false, &report), kExitVerificationFailure);
  EXPECT_NE(report.find("FAIL"), std::string::npos);

  EXPECT_EQ(verify_file(temp_path("does-not-exist")), kExitIoError);

  const std::string garbage = temp_path("garbage.txt");
  std::ofstream(garbage) << "not a record\n";
  EXPECT_EQ(verify_file(garbage), kExitParseError);
}

TEST(Verify, FlippedExponentFailsExactCheck) {
  ExportRecord r = make_record(RecordKind::Conference, 5);
  (*r.exponents)(0, 1) = -(*r.exponents)(0, 1);
  (*r.exponents)(1, 0) = -(*r.exponents)(1, 0);
  const VerifyReport report = verify_record(r, 1e-9, true);
  EXPECT_FALSE(report.pass());
}

TEST(Verify, ScaledRecordHasNoExactLayer) {
  GenerateOptions g;
  g.k = 5;
  g.scale_row = 3;
  g.eta = 0.4;
  g.out = temp_path("scaled5.txt");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_generate(g, out, err), kExitPass);
  EXPECT_EQ(verify_file(g.out), kExitPass);
  EXPECT_EQ(verify_file(g.out, true), kExitParseError);
  try {
    verify_record(parse_record(slurp(g.out)), 1e-9, true);
    FAIL() << "expected ExactLayerUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExactLayerUnavailable);
  }
}

TEST(Verify, ScaledDerivedRecordsStillPass) {
  for (auto kind : {RecordKind::Seidel, RecordKind::Gram, RecordKind::Planes, RecordKind::Hadamard}) {
    const ExportRecord r = make_record(kind, 7, 4, 1.1);
    EXPECT_TRUE(verify_record(r, 1e-9, false).pass()) << to_string(kind);
  }
}

TEST(Verify, EveryAdmissibleOrderRoundTrips) {
  for (const auto& row : enumerate_orders(3, 51, true)) {
    if (row.status != OrderStatus::Admissible) continue;
    for (auto kind : {RecordKind::Conference, RecordKind::Seidel}) {
      const std::string path = temp_path("rt.json");
      ASSERT_EQ(generate_to(path, kind, row.k, RecordFormat::Json), kExitPass);
      EXPECT_EQ(verify_file(path, kind == RecordKind::Conference), kExitPass) << row.k;
    }
  }
}

TEST(Pipeline, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_pipeline(3, out, err), kExitPass);
  EXPECT_EQ(cmd_pipeline(5, out, err), kExitPass);
  EXPECT_EQ(cmd_pipeline(4, out, err), kExitInadmissible);
  EXPECT_NE(out.str().find("all stages PASS"), std::string::npos);
}

}  // namespace
}  // namespace eqiso
