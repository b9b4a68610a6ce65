#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sftlock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // assertion or engine error
inline constexpr int kExitUsage = 2;    // usage, parse or I/O error

/// Entry point shared by the `sftlock` binary and in-process tests.
/// `args` excludes the program name.
///
///   run <scenario> [-o journal]   drive the engine, write the journal
///   trace <journal> <tokenId>     lifecycle of one token
///   compare <scenario>            SFT-Lock vs hybrid baseline
///
/// Global flags: --json, --weights <file>.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sftlock::cli
