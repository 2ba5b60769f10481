#include "invlab_cli/format.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace invlab::cli {

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_factorization(const arith::Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : f.factors) {
        if (!s.empty()) s += " * ";
        s += std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string join(const std::vector<arith::u64>& values, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

std::string timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace invlab::cli
