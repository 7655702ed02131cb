#pragma once

// Command-line front door. The argv-level entry point is separated from main
// so tests can drive the commands in-process.

namespace pwsb {

int run_cli(int argc, const char* const* argv);

}  // namespace pwsb
