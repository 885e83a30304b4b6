#include <iostream>

#include "CLI11.hpp"
#include "racklab/commands.hpp"

namespace cli = racklab::cli;

int main(int argc, char** argv) {
  CLI::App app{"racklab: finite racks, type D certificates and scalar cocycles"};
  app.require_subcommand(1);
  const cli::Streams io{std::cout, std::cerr};
  int code = cli::kOk;

  std::string rack;
  std::size_t cap = 4096;

  auto* axioms = app.add_subcommand("axioms", "check the rack axioms");
  axioms->add_option("rack", rack, "rack descriptor")->required();
  axioms->add_option("--cap", cap, "largest universe to build");
  axioms->callback([&] { code = cli::cmd_axioms(rack, cap, io); });

  auto* construct = app.add_subcommand("construct", "list the elements of a rack");
  construct->add_option("rack", rack, "rack descriptor")->required();
  construct->add_option("--cap", cap, "largest universe to build");
  construct->callback([&] { code = cli::cmd_construct(rack, cap, io); });

  cli::ProveArgs prove_args;
  int prove_n = 0, prove_t = 0;
  std::string prove_ell;
  std::string prove_output;
  auto* prove = app.add_subcommand("prove", "build and verify a generator certificate");
  prove->add_option("name", prove_args.name, "id_1, id_12r, id_124, id_14, iota_12, iota_222 or iota_12r")
      ->required();
  auto* n_opt = prove->add_option("--n", prove_n, "degree of Alt_n");
  auto* t_opt = prove->add_option("--t", prove_t, "tuple length");
  auto* ell_opt = prove->add_option("--ell", prove_ell, "ell in cycle notation");
  prove->add_option("-o,--output", prove_output, "certificate path");
  prove->callback([&] {
    if (n_opt->count()) prove_args.n = prove_n;
    if (t_opt->count()) prove_args.t = prove_t;
    if (ell_opt->count()) prove_args.ell = prove_ell;
    prove_args.output = prove_output.empty() ? prove_args.name + ".json" : prove_output;
    code = cli::cmd_prove(prove_args, io);
  });

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  verify->add_option("certificate", verify_path, "certificate path")->required();
  verify->callback([&] { code = cli::cmd_verify(verify_path, io); });

  cli::SearchArgs search_args;
  std::string search_output;
  auto* search = app.add_subcommand("search", "decide type D by exhaustive pair closure");
  search->add_option("rack", search_args.rack, "rack descriptor")->required();
  search->add_option("--budget", search_args.budget, "ordered pairs to examine");
  search->add_option("--threads", search_args.threads, "worker threads");
  search->add_option("--cap", search_args.cap, "largest universe to build");
  search->add_option("-o,--output", search_output, "certificate path");
  search->callback([&] {
    if (!search_output.empty()) search_args.output = search_output;
    code = cli::cmd_search(search_args, io);
  });

  cli::ReportArgs report_args;
  std::string report_dir;
  auto* report = app.add_subcommand("report", "status table for twisted homogeneous racks");
  report->add_option("--n", report_args.n_range, "degree range, e.g. 5..8");
  report->add_option("--t", report_args.t_range, "tuple length range, e.g. 2..5");
  report->add_flag("--json", report_args.json, "machine-readable output");
  report->add_option("--certificates", report_dir, "directory for generated certificates");
  report->callback([&] {
    if (!report_dir.empty()) report_args.certificate_dir = report_dir;
    code = cli::cmd_report(report_args, io);
  });

  cli::CocycleArgs cocycle_args;
  std::uint64_t seed = 0;
  auto* cocycle = app.add_subcommand("cocycle", "sweep scalar cocycles against the braid equation");
  cocycle->add_option("rack", cocycle_args.rack, "rack descriptor")->required();
  cocycle->add_option("--m", cocycle_args.m, "order of the root of unity");
  cocycle->add_option("--limit", cocycle_args.limit, "largest number of tables");
  auto* sample = cocycle->add_option("--sample", seed, "sample tables with this seed");
  cocycle->callback([&] {
    if (sample->count()) cocycle_args.sample_seed = seed;
    code = cli::cmd_cocycle(cocycle_args, io);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }
  return code;
}
