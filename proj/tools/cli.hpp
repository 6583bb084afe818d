#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdcli {

enum Exit { kOk = 0, kAxiom = 1, kResource = 2, kUsage = 3 };

// Runs one command line (without the program name).  Human-readable text,
// or the JSON report with --json, goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdcli
