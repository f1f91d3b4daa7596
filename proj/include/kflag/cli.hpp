#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kflag {

enum ExitCode { kOk = 0, kFailures = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// hard cap on N, from KFLAG_MAX_N (default 6)
int size_cap();

}
