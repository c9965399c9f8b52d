#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so it can be driven in-process.
//
//   gen <object> <n>     print a matrix, vector or edge list
//   verify <n>           closed forms against oracles for one n
//   sweep <nmin> <nmax>  verify over a range, optionally in parallel
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.

#include <iosfwd>
#include <string>
#include <vector>

#include "eccwheel/report.hpp"

namespace eccwheel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Largest n accepted without --max-n-override.
inline constexpr int kMaxDefaultN = 200;

enum class Format { json, csv, pretty };

// Objects accepted by `gen`.
const std::vector<std::string>& gen_objects();

std::string render_report(const report::VerificationReport& rep, Format format, bool timings);
std::string render_sweep(const report::SweepResult& result, Format format, bool timings);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccwheel::cli
