#pragma once

#include <string>
#include <vector>

#include "fibcalc/cobweb.hpp"

namespace fibcalc {

struct CommandResult {
    int exit_code = 0;  // 0 success, 1 verification found discrepancies, 2 usage error
    std::string out;    // payload for stdout, no trailing newline
    std::string err;    // diagnostics for stderr
};

// Dispatches one invocation; args exclude the program name. Pure, so tests
// drive it directly without spawning processes.
CommandResult run_command(const std::vector<std::string>& args);

enum class MatrixStyle { full, paper };
enum class MatrixFormat { text, csv };

// paper style drops the strict lower triangle, matching how the matrices
// are usually displayed: text rows start at the diagonal, CSV keeps the
// cells but leaves them blank so columns still line up.
std::string render_matrix(const IncidenceFn& m, MatrixStyle style, MatrixFormat format);

// Reads render_matrix CSV back in; blank cells parse as zero, so both
// styles round-trip (the blanked region is zero by the support invariant).
IncidenceFn parse_matrix_csv(const std::string& text);

}  // namespace fibcalc
