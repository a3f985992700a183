#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfree/oracle.hpp"

namespace lfree {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one CLI invocation (argv without the program name). Subcommands: mu,
// count, extremal, matching, bounds, verify, scan. Success prints a single
// JSON document (or flat CSV rows with --format csv) on `out`; timing goes to
// `err` as "timing_ms=<n>". Exit codes: 0 success, 1 domain/cap error,
// 2 usage or parse error (parse errors carry the offending position).
CommandResult exec_command(const std::vector<std::string>& argv);

// Writes the exploration grid as CSV: one row per ordered coprime triple
// (p >= q >= r >= 1) and n value, with construction sizes, exhaustive mu, the
// closed-form mu where a case applies, the extremal-gap flag, and — for
// p == q rows — the exact maximal-set count next to the conjectured and
// proven exponent rates. Cells past a cap leave their exhaustive columns
// blank and mark the row "skip". Returns the number of data rows.
int64_t scan_grid(int64_t p_max, int64_t q_max, int64_t r_max, const std::vector<int64_t>& n_list,
                  const std::string& out_path, const OracleCaps& caps = OracleCaps::from_env());

}  // namespace lfree
