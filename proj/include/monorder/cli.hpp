#pragma once

// Entry point of the order_cli tool, callable in-process with explicit streams.
//
// Exit codes: 0 success / PASS, 1 property FAIL, 2 usage or parse error,
// 3 unsupported capability (e.g. enumerate without a slice scheme and
// without --allow-sort-fallback).

#include <iosfwd>
#include <string>
#include <vector>

namespace monorder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapability = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monorder::cli
