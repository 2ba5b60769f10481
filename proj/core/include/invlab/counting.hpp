#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invlab/arith.hpp"
#include "invlab/constants.hpp"

namespace invlab::counting {

using arith::u64;
using constants::ResidueClassSet;
using constants::Statistic;

inline constexpr u64 kDefaultSegment = u64{1} << 16;

/// How D_q is evaluated: by the factorization conditions, by lambda_1 itself,
/// or both side by side.
enum class DMode { Predicate, Direct, Both };

struct StatisticSpec {
    Statistic kind = Statistic::T;
    u64 q = 0;
    std::optional<ResidueClassSet> classes;  // NB only
    DMode mode = DMode::Predicate;           // D only
    bool odd_only = false;                   // D only: restrict to odd n

    [[nodiscard]] std::string label() const;

    static StatisticSpec T();
    static StatisticSpec E(u64 q);
    static StatisticSpec D(u64 q, DMode mode = DMode::Predicate, bool odd_only = false);
    static StatisticSpec J(u64 q);
    static StatisticSpec NB(ResidueClassSet classes);
    static StatisticSpec LP();
};

struct SieveOptions {
    u64 segment_size = kDefaultSegment;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct CountRequest {
    u64 x_max = 0;
    std::vector<u64> checkpoints;  // ascending; empty means {x_max}
    std::vector<StatisticSpec> statistics;
    SieveOptions options;
};

struct CountSeries {
    StatisticSpec statistic;
    std::vector<std::pair<u64, u64>> points;  // (x, #{n <= x : ...})
    /// DMode::Both: the lambda_1 route, while points holds the predicate route.
    std::optional<std::vector<std::pair<u64, u64>>> cross_check;
    /// Set for E with odd q, which is identically zero.
    bool odd_q_warning = false;

    [[nodiscard]] u64 at(u64 x) const;
    [[nodiscard]] bool routes_agree() const;
};

/// Validates the request and fills in defaults (checkpoints = {x_max}).
CountRequest normalized(CountRequest req);

/// One sieve pass over [1, x_max] evaluating every requested statistic.
std::vector<CountSeries> count(const CountRequest& req);

/// Single-statistic conveniences; req.statistics is ignored.
CountSeries count_T(const CountRequest& req);
CountSeries count_E(const CountRequest& req, u64 q);
CountSeries count_D(const CountRequest& req, u64 q, DMode mode = DMode::Predicate);
CountSeries count_J(const CountRequest& req, u64 q);
CountSeries count_NB(const CountRequest& req, const ResidueClassSet& B);
CountSeries count_least_primary_ne2(const CountRequest& req);

/// #{n <= x_max : lambda_1(n) = v} for every value v that occurs.
std::map<u64, u64> lambda1_histogram(u64 x_max, SieveOptions options = {});

/// Geometric ladder 10^a, 10^(a+1), ..., 10^b.
std::vector<u64> decade_ladder(unsigned from_exponent, unsigned to_exponent);

}  // namespace invlab::counting
