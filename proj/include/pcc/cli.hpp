#pragma once

#include <string>
#include <vector>

namespace pcc {

/// Entry point shared by the `pccsim` binary and the in-process CLI tests.
/// `args` excludes the program name. Returns the process exit code: 0 iff all
/// requested work completed.
int cli_main(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

} // namespace pcc
