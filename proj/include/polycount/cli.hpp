#ifndef POLYCOUNT_CLI_HPP
#define POLYCOUNT_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "polycount/sequence.hpp"

namespace polycount::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `polycount <args...>` (program name excluded),
/// writing normal output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class TableFormat { Plain, Csv };

/// The triangle p_{m,n} for 3 <= m <= n <= max_n followed by the p_n row.
/// Requires max_n >= 3.
void write_table(std::int64_t max_n, TableFormat format, unsigned jobs, std::ostream& out);

/// One "index value" line per n in spec's range.
void write_bfile(const SequenceSpec& spec, unsigned jobs, std::ostream& out);

/// 64-bit FNV-1a of a decimal string; bench uses it to fingerprint results.
std::uint64_t fnv1a64(const std::string& text);

}  // namespace polycount::cli

#endif  // POLYCOUNT_CLI_HPP
