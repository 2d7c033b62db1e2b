// Subcommands of the itinf tool. Each returns the process exit code.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace itinf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotConverged = 2;

struct StreamOpts {
  std::string kind = "canonical";
  std::uint64_t seed = 0;
  std::uint64_t repeat = 1;
  std::string withheld;
  std::uint64_t withhold_at = 0;
};

struct RunConfig {
  std::size_t dim = 2;
  std::string target;  // comma-separated rational slopes
  std::string offset = "0";
  StreamOpts stream;
  std::string learner = "general";
  std::uint64_t max_steps = 2000;
  std::uint64_t window = 50;
  std::string out;  // empty: no trace file
};

struct VerifyConfig {
  std::string trace;
  std::string restrictions = "conv,snu";
  std::optional<std::uint64_t> radius;
  bool bounded = false;
};

struct BenchConfig {
  std::size_t dim = 2;
  long coeff_bound = 3;
  long offset_min = -3;
  long offset_max = 3;
  std::uint64_t seeds = 1;
  std::string learner = "general";
  std::uint64_t max_steps = 2000;
  std::uint64_t window = 50;
  std::string out;  // empty: stdout
};

int cmd_run(const RunConfig& c, std::ostream& out);
int cmd_verify(const VerifyConfig& c, std::ostream& out);
int cmd_bench(const BenchConfig& c, std::ostream& out);
int cmd_geom(const std::string& op, const std::vector<std::string>& args, std::size_t j, std::ostream& out);
int cmd_transform(const std::string& in, const std::string& out_path, bool text, std::ostream& out);

}  // namespace itinf::cli
