// cli.hpp -- command dispatch for the graycycle tool

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace graycycle::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,       // a checked condition does not hold
    kUsage = 2,         // bad flags, parameters or input text
    kCapacity = 3,      // instance too large
    kInconclusive = 4,  // oracle ran out of budget
};

/// Reference sequences reproduced by the `examples` command, keyed by name.
using GoldenTable = std::map<std::string, std::vector<std::string>>;

const GoldenTable& embedded_golden();

/// Regenerates every sequence in `golden` and diffs term by term.
/// Returns kOk iff all match; reports the first differing index otherwise.
int check_golden(const GoldenTable& golden, std::ostream& out);

/// Runs the tool with `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace graycycle::cli
