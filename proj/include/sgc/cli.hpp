#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace sgc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). A single JSON
/// document goes to `out`; help, errors and, with --verbose, readable
/// tables go to `err`. Returns the process exit status.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit hash of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace sgc
