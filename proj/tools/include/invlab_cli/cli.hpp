#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "invlab/arith.hpp"

namespace invlab::cli {

using arith::u64;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistency = 3;

/// Runs the command line; args excludes the program name. Output goes to out,
/// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "1000000", "1e6" or "10^6". Throws DomainError otherwise.
u64 parse_count(const std::string& text);

/// "1e4,1e5,1e6" or a decade range "1e4..1e8". Throws DomainError.
std::vector<u64> parse_checkpoints(const std::string& text);

/// Comma list of integers.
std::vector<u64> parse_list(const std::string& text);

}  // namespace invlab::cli
