#pragma once

// CLI subcommands as plain functions returning the process exit code:
// 0 affirmative, 1 negative verdict, 2 usage or input error, 3 inconclusive.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace racklab::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInconclusive = 3 };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_axioms(const std::string& rack, std::size_t cap, Streams io);

int cmd_construct(const std::string& rack, std::size_t cap, Streams io);

struct ProveArgs {
  std::string name;
  std::optional<int> n;
  std::optional<int> t;
  std::optional<std::string> ell;
  std::filesystem::path output;
};
int cmd_prove(const ProveArgs& args, Streams io);

int cmd_verify(const std::filesystem::path& path, Streams io);

struct SearchArgs {
  std::string rack;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
  std::size_t cap = 4096;
  std::optional<std::filesystem::path> output;
};
int cmd_search(const SearchArgs& args, Streams io);

struct ReportArgs {
  std::string n_range = "5..8";
  std::string t_range = "2..5";
  bool json = false;
  std::optional<std::filesystem::path> certificate_dir;
};
int cmd_report(const ReportArgs& args, Streams io);

struct CocycleArgs {
  std::string rack;
  int m = 2;
  std::uint64_t limit = 1'000'000;
  std::optional<std::uint64_t> sample_seed;
};
int cmd_cocycle(const CocycleArgs& args, Streams io);

}  // namespace racklab::cli
