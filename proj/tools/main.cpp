#include <atomic>
#include <csignal>
#include <iostream>

#include "cli/commands.hpp"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  homalg::cli::set_interrupt_flag(&g_stop);
  return homalg::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
