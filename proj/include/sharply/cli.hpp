#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sharply::cli {

// Runs one command line (without the program name) and returns the process
// exit code: 0 for pass/success verdicts, 1 for verified failures, 2 for
// usage or input errors. All report text goes to `out`, diagnostics to `err`;
// output is deterministic for identical arguments and seed.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace sharply::cli
