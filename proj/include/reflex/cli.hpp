#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace reflex::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  std::size_t max_partition_length = 7;
  std::size_t max_classify_dimension = 4;
  std::string output_path;
  OutputFormat format = OutputFormat::json;
  unsigned workers = 1;  // 0 = hardware concurrency
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdictFailed = 2;

/// Entry point of the command-line tool. Results go to out, diagnostics to
/// err. Returns 0 on success, 1 on usage or I/O errors, 2 when a verdict
/// fails. REFLEX_MAX_PARTITION_LEN and REFLEX_WORKERS override the defaults;
/// explicit flags override both.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reflex::cli
