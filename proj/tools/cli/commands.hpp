#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace homalg::cli {

/// Exit codes of every command.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// args excludes the program name. Reports go to out, diagnostics and search
/// progress to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Polled by long-running searches; set from a signal handler.
void set_interrupt_flag(const std::atomic<bool>* flag);

}  // namespace homalg::cli
