#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bhset/sumset.hpp"

namespace bhset::cli {

/// Process exit codes, shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsage = 2,
  kResource = 3,
};

struct TableRow {
  unsigned h = 0;
  std::vector<u128> a;  // a_1(h) .. a_k(h)
};

/// Rows of a_1..a_k for every h in [h_min, h_max], ordered by h. Rows are
/// computed in parallel; the first error (by h) is rethrown.
std::vector<TableRow> greedy_table(unsigned h_min, unsigned h_max, unsigned k, bool use_oracle);

/// Comma-separated strictly increasing decimals. Throws InvalidArgument.
IntegerSet parse_set(const std::string& text);

/// Entry point behind the `bhset` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhset::cli
