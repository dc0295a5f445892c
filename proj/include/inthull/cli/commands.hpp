#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "inthull/geom.hpp"

namespace inthull::cli {

// Exit codes of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;   // parse or validation error
inline constexpr int kExitMismatch = 2;  // --check disagreement
inline constexpr int kExitLimit = 3;     // unbounded input, oracle budget, sweep limit

// [[x,y],...] on one line.
std::string hull_json(const HullResult& hull);

// Prints `result` and, with check, compares it with the oracle hull of set.
int report_hull(const std::optional<PolySet2>& set, const HullResult& result, bool check,
                std::ostream& out, std::ostream& err);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inthull::cli
