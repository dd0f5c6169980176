#ifndef MAGSWIM_TOOLS_RUN_H_
#define MAGSWIM_TOOLS_RUN_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "config.h"

namespace magswim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

const std::vector<std::string>& subcommands();

struct RunOptions {
  std::string command;
  std::filesystem::path out_dir = ".";
  int threads = 1;
  bool regularize = false;
};

// Runs one subcommand and writes its artifacts into options.out_dir (created
// if missing). Every run also writes config.json, the resolved manifest.
// Returns the paths written, in order. Throws magswim::Error.
std::vector<std::filesystem::path> execute(const ExperimentConfig& config,
                                           const RunOptions& options);

// Full command line: parses arguments, loads the manifest, executes and maps
// failures to exit codes (2 config, 3 numerical, 4 file output). Failures
// are reported on `err` as one line of JSON: {"error": kind, "message": ...}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magswim::cli

#endif  // MAGSWIM_TOOLS_RUN_H_
