// eqiso: generate, verify and enumerate conference / Seidel / plane-tuple
// constructions of odd prime-power order.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "eqiso/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Complex symmetric conference matrices and equi-isoclinic plane tuples"};
  app.require_subcommand(1);

  eqiso::GenerateOptions gen;
  std::string kind = "conference";
  std::string format = "text";
  std::optional<std::size_t> scale_row;
  auto* generate = app.add_subcommand("generate", "Write a construction of order 2k-1 to a record file");
  generate->add_option("--kind", kind, "Object to export")
      ->check(CLI::IsMember({"conference", "seidel", "gram", "planes", "hadamard"}))
      ->capture_default_str();
  generate->add_option("--k", gen.k, "Order parameter; q = 2k-1")->required();
  generate->add_option("--format", format, "Record encoding")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  generate->add_option("--out", gen.out, "Output path, '-' for stdout")->default_str("-");
  generate->add_option("--scale-row", scale_row, "Scale this row and column by e^{i eta}");
  generate->add_option("--eta", gen.eta, "Phase angle for --scale-row, radians")->default_str("0");

  eqiso::VerifyOptions ver;
  std::string in_flag;
  auto* verify = app.add_subcommand("verify", "Re-check a record file");
  verify->add_option("input", ver.in, "Record file");
  verify->add_option("--in", in_flag, "Record file (alternative to the positional argument)");
  verify->add_option("--tol", ver.tol, "Residual tolerance")->default_str("1e-9");
  verify->add_flag("--exact", ver.exact, "Also certify by exact exponent counting");

  eqiso::EnumerateOptions en;
  auto* enumerate = app.add_subcommand("enumerate", "List admissible and open orders");
  enumerate->add_option("--k-min", en.k_min, "Smallest k")->default_str("3");
  enumerate->add_option("--k-max", en.k_max, "Largest k")->default_str("51");
  enumerate->add_flag("--odd-only", en.odd_only, "Only odd k");

  int pipeline_k = 0;
  auto* pipeline = app.add_subcommand("pipeline", "Run every construction and check for one k");
  pipeline->add_option("--k", pipeline_k, "Order parameter; q = 2k-1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : eqiso::kExitParseError;
  }

  if (generate->parsed()) {
    gen.kind = *eqiso::parse_kind(kind);
    gen.format = *eqiso::parse_format(format);
    gen.scale_row = scale_row;
    return eqiso::cmd_generate(gen, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    if (!in_flag.empty()) ver.in = in_flag;
    if (ver.in.empty()) {
      std::cerr << "verify needs an input record\n";
      return eqiso::kExitParseError;
    }
    return eqiso::cmd_verify(ver, std::cout, std::cerr);
  }
  if (enumerate->parsed()) return eqiso::cmd_enumerate(en, std::cout, std::cerr);
  return eqiso::cmd_pipeline(pipeline_k, std::cout, std::cerr);
}
