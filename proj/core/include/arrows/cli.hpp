#pragma once

#include <string>
#include <vector>

namespace arrows::cli {

// What a command invocation produced. Captured rather than printed so the
// golden-transcript tests can assert stdout, stderr, and the exit code
// in-process, byte for byte.
struct DispatchResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command, given the argument list without the program name.
// Exit codes: 0 success; 1 usage errors, malformed scenes/literals, unknown
// names, or a verification run that found failures; 2 operations whose
// mathematical result is undefined for the given (well-formed) input.
DispatchResult dispatch(const std::vector<std::string>& args);

// main() adapter: dispatches and writes the captured streams out.
int run_main(int argc, char** argv);

}  // namespace arrows::cli
