#pragma once

#include <string>
#include <vector>

#include "invlab/arith.hpp"

namespace invlab::cli {

/// Twelve significant digits, locale independent.
std::string fmt_double(double v);

/// "3^2 * 7"; "1" for n = 1.
std::string fmt_factorization(const arith::Factorization& f);

std::string join(const std::vector<arith::u64>& values, const std::string& sep);

/// UTC, ISO 8601.
std::string timestamp();

}  // namespace invlab::cli
