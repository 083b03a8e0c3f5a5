#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "protori/errors.hpp"
#include "protori/report.hpp"

using namespace protori;

namespace {

GroupDescription load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"protori: structure reports for finite-rank torsion-free groups and their protori"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  Prime prime_bound = Prime(1) << 20;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--prime-bound", prime_bound, "trial-division bound for factoring")->check(CLI::PositiveNumber);

  std::string file_a, file_b;

  auto* analyze = app.add_subcommand("analyze", "structure report for the protorus dual to a group");
  analyze->add_option("file", file_a)->required();

  auto* isogeny = app.add_subcommand("isogeny", "decide isogeny of two protori");
  isogeny->add_option("a", file_a)->required();
  isogeny->add_option("b", file_b)->required();

  std::string mode = "inf", scope;
  auto* hull = app.add_subcommand("hull", "quotient-divisible hull");
  hull->add_option("file", file_a)->required();
  hull->add_option("--mode", mode)->check(CLI::IsMember({"inf", "fininf"}));
  hull->add_option("--scope", scope)->check(CLI::IsMember({"directives", "saturated"}));

  std::string matrix;
  report::LiftConfig lift_cfg;
  Prime lift_prime = 0;
  auto* lift = app.add_subcommand("lift", "lift a dual morphism to the resolution square");
  lift->add_option("a", file_a)->required();
  lift->add_option("b", file_b)->required();
  lift->add_option("--matrix", matrix, "rows separated by ';', entries by ','")->required();
  lift->add_option("--prime", lift_prime);
  lift->add_option("--depth", lift_cfg.depth)->check(CLI::PositiveNumber);

  report::VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "run the oracle battery");
  verify->add_option("file", file_a)->required();
  verify->add_option("--depth", verify_cfg.depth);
  verify->add_option("--trials", verify_cfg.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto fmt = format == "structured" ? report::Format::structured : report::Format::text;
  try {
    PrimeBoundScope bound(prime_bound);
    report::Json out;
    if (*analyze) {
      out = report::analyze(load(file_a));
    } else if (*isogeny) {
      out = report::isogeny(load(file_a), load(file_b));
    } else if (*hull) {
      std::optional<LineScope> sc;
      if (!scope.empty()) sc = scope == "saturated" ? LineScope::saturated : LineScope::directives;
      out = report::hull(load(file_a), mode == "inf" ? HullMode::inf : HullMode::fininf, sc);
    } else if (*lift) {
      if (lift->count("--prime")) lift_cfg.prime = lift_prime;
      out = report::lift(parse_matrix(matrix), load(file_a), load(file_b), lift_cfg);
    } else if (*verify) {
      out = report::verify(load(file_a), verify_cfg);
    }
    std::cout << report::render(out, fmt);
    return report::passed(out) ? 0 : 1;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
