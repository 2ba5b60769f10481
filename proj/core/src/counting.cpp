#include "invlab/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "invlab/error.hpp"
#include "invlab/groups.hpp"

namespace invlab::counting {

std::string StatisticSpec::label() const {
    switch (kind) {
        case Statistic::T: return "T";
        case Statistic::E: return "E" + std::to_string(q);
        case Statistic::D: return (odd_only ? "D1_" : "D") + std::to_string(q);
        case Statistic::J: return "J" + std::to_string(q);
        case Statistic::NB: {
            std::string s = "NB" + std::to_string(q) + "{";
            if (classes) {
                for (std::size_t i = 0; i < classes->members().size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(classes->members()[i]);
                }
            }
            return s + "}";
        }
        case Statistic::LP: return "LP";
    }
    return "?";
}

StatisticSpec StatisticSpec::T() { return {Statistic::T, 0, std::nullopt, DMode::Predicate, false}; }
StatisticSpec StatisticSpec::E(u64 q) { return {Statistic::E, q, std::nullopt, DMode::Predicate, false}; }
StatisticSpec StatisticSpec::D(u64 q, DMode mode, bool odd_only) {
    return {Statistic::D, q, std::nullopt, mode, odd_only};
}
StatisticSpec StatisticSpec::J(u64 q) { return {Statistic::J, q, std::nullopt, DMode::Predicate, false}; }
StatisticSpec StatisticSpec::NB(ResidueClassSet classes) {
    const u64 q = classes.modulus();
    return {Statistic::NB, q, std::move(classes), DMode::Predicate, false};
}
StatisticSpec StatisticSpec::LP() { return {Statistic::LP, 0, std::nullopt, DMode::Predicate, false}; }

u64 CountSeries::at(u64 x) const {
    for (const auto& [cx, c] : points) {
        if (cx == x) return c;
    }
    throw DomainError("no checkpoint at x = " + std::to_string(x));
}

bool CountSeries::routes_agree() const { return !cross_check || *cross_check == points; }

std::vector<u64> decade_ladder(unsigned from_exponent, unsigned to_exponent) {
    std::vector<u64> ladder;
    u64 v = 1;
    for (unsigned e = 0; e <= to_exponent; ++e) {
        if (e >= from_exponent) ladder.push_back(v);
        v *= 10;
    }
    return ladder;
}

CountRequest normalized(CountRequest req) {
    if (req.x_max < 1) throw DomainError("x_max must be >= 1");
    if (req.checkpoints.empty()) req.checkpoints.push_back(req.x_max);
    if (!std::is_sorted(req.checkpoints.begin(), req.checkpoints.end()) ||
        std::adjacent_find(req.checkpoints.begin(), req.checkpoints.end()) != req.checkpoints.end()) {
        throw DomainError("checkpoints must be strictly ascending");
    }
    if (req.checkpoints.front() < 1) throw DomainError("checkpoints must be >= 1");
    if (req.checkpoints.back() != req.x_max) throw DomainError("last checkpoint must equal x_max");
    if (req.options.segment_size < 16) throw ConfigError("segment size must be >= 16");
    for (const auto& s : req.statistics) {
        switch (s.kind) {
            case Statistic::E:
                if (s.q < 2) throw DomainError("E_q needs q >= 2");
                break;
            case Statistic::D:
                if (s.q < 4 || s.q % 2 != 0) throw DomainError("D_q needs even q >= 4");
                break;
            case Statistic::J:
                if (s.q < 3) throw DomainError("J_q needs q >= 3");
                break;
            case Statistic::NB:
                if (!s.classes) throw DomainError("NB needs a residue class set");
                break;
            case Statistic::T:
            case Statistic::LP:
                break;
        }
    }
    return req;
}

namespace {

// Per-statistic evaluation state, compiled once per request.
struct Compiled {
    Statistic kind;
    u64 q;
    bool odd_only;
    bool predicate_route;
    bool direct_route;
    bool always_zero;
    std::optional<groups::DivisibilityPredicate> predicate;
    std::vector<bool> classes;  // NB membership by residue; J uses residue 1
};

Compiled compile(const StatisticSpec& s) {
    Compiled c{s.kind, s.q, s.odd_only, false, false, false, std::nullopt, {}};
    switch (s.kind) {
        case Statistic::E:
            c.always_zero = s.q % 2 == 1;
            break;
        case Statistic::D:
            c.predicate_route = s.mode != DMode::Direct;
            c.direct_route = s.mode != DMode::Predicate;
            c.predicate.emplace(s.q);
            break;
        case Statistic::J:
            c.classes.assign(s.q, false);
            c.classes[1] = true;
            break;
        case Statistic::NB:
            c.classes.assign(s.q, false);
            for (u64 b : s.classes->members()) c.classes[b] = true;
            break;
        default:
            break;
    }
    return c;
}

// Visits the prime powers of one sieved integer.
template <class F>
void for_each_prime_power(const arith::FactorSegment::Entry& e, F&& f) {
    for (std::size_t k = 0; k < e.small_primes.size(); ++k) f(u64{e.small_primes[k]}, unsigned{e.small_exponents[k]});
    if (e.large_prime > 1) f(e.large_prime, 1u);
}

std::vector<std::uint32_t> base_primes_for(u64 x_max) {
    auto root = static_cast<u64>(std::sqrt(static_cast<double>(x_max)));
    while (root * root > x_max) --root;
    while ((root + 1) * (root + 1) <= x_max) ++root;
    return arith::primes_up_to(root);
}

unsigned worker_count(unsigned requested, std::size_t segments) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(segments, 1)));
}

// Runs body(segment_index, lo, hi) for every segment of [1, x_max], spread
// over worker threads. Each segment index is handled by exactly one worker.
template <class Body>
void for_each_segment(u64 x_max, const SieveOptions& options, Body&& body) {
    const u64 seg = options.segment_size;
    const std::size_t segments = static_cast<std::size_t>((x_max + seg - 1) / seg);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < segments; i = next++) {
                const u64 lo = 1 + static_cast<u64>(i) * seg;
                const u64 hi = std::min(x_max + 1, lo + seg);
                body(i, lo, hi);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = segments;
        }
    };
    const unsigned workers = worker_count(options.threads, segments);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<CountSeries> count(const CountRequest& raw) {
    const CountRequest req = normalized(raw);
    std::vector<Compiled> stats;
    stats.reserve(req.statistics.size());
    for (const auto& s : req.statistics) stats.push_back(compile(s));

    const std::size_t n_stats = stats.size();
    const std::size_t n_buckets = req.checkpoints.size();
    // Column layout per statistic: primary route, then cross-check route.
    const std::size_t width = 2 * n_stats;
    const auto base = base_primes_for(req.x_max);
    const u64 seg = req.options.segment_size;
    const std::size_t segments = static_cast<std::size_t>((req.x_max + seg - 1) / seg);
    std::vector<std::vector<u64>> partial(segments);

    for_each_segment(req.x_max, req.options, [&](std::size_t index, u64 lo, u64 hi) {
        std::vector<u64> local(n_buckets * width, 0);
        const arith::FactorSegment factors(lo, hi, base);
        std::size_t bucket = static_cast<std::size_t>(
            std::lower_bound(req.checkpoints.begin(), req.checkpoints.end(), lo) - req.checkpoints.begin());
        std::vector<char> ok(n_stats);
        for (u64 n = lo; n < hi; ++n) {
            while (req.checkpoints[bucket] < n) ++bucket;
            const auto entry = factors.at(n);
            groups::Lambda1Accumulator acc;
            std::fill(ok.begin(), ok.end(), 1);
            for_each_prime_power(entry, [&](u64 p, unsigned e) {
                acc.add(p, e);
                for (std::size_t s = 0; s < n_stats; ++s) {
                    const Compiled& c = stats[s];
                    switch (c.kind) {
                        case Statistic::D:
                            if (c.predicate_route && ok[s] && !c.predicate->admits(p, e)) ok[s] = 0;
                            break;
                        case Statistic::J:
                        case Statistic::NB:
                            if (ok[s] && !c.classes[p % c.q]) ok[s] = 0;
                            break;
                        default:
                            break;
                    }
                }
            });
            const u64 lambda1 = acc.value();
            u64* row = local.data() + bucket * width;
            for (std::size_t s = 0; s < n_stats; ++s) {
                const Compiled& c = stats[s];
                bool primary = false;
                bool secondary = false;
                switch (c.kind) {
                    case Statistic::T: primary = lambda1 != 2; break;
                    case Statistic::E: primary = !c.always_zero && lambda1 == c.q; break;
                    case Statistic::D: {
                        const bool in_range = !c.odd_only || n % 2 == 1;
                        const bool by_predicate = in_range && n > 2 && ok[s];
                        const bool by_lambda = in_range && lambda1 % c.q == 0;
                        if (c.predicate_route) {
                            primary = by_predicate;
                            secondary = c.direct_route && by_lambda;
                        } else {
                            primary = by_lambda;
                        }
                        break;
                    }
                    case Statistic::J:
                    case Statistic::NB: primary = ok[s] != 0; break;
                    case Statistic::LP: primary = !acc.least_primary_is_two(); break;
                }
                row[2 * s] += primary;
                row[2 * s + 1] += secondary;
            }
        }
        partial[index] = std::move(local);
    });

    // Ordered merge, then cumulative sums over checkpoints.
    std::vector<u64> totals(n_buckets * width, 0);
    for (const auto& local : partial) {
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += local[i];
    }
    std::vector<CountSeries> out;
    out.reserve(n_stats);
    for (std::size_t s = 0; s < n_stats; ++s) {
        CountSeries series;
        series.statistic = req.statistics[s];
        series.odd_q_warning = stats[s].always_zero;
        const bool both = stats[s].kind == Statistic::D && stats[s].predicate_route && stats[s].direct_route;
        if (both) series.cross_check.emplace();
        u64 run = 0;
        u64 run_alt = 0;
        for (std::size_t b = 0; b < n_buckets; ++b) {
            run += totals[b * width + 2 * s];
            run_alt += totals[b * width + 2 * s + 1];
            series.points.emplace_back(req.checkpoints[b], run);
            if (both) series.cross_check->emplace_back(req.checkpoints[b], run_alt);
        }
        out.push_back(std::move(series));
    }
    return out;
}

namespace {

CountSeries count_one(const CountRequest& req, StatisticSpec spec) {
    CountRequest r = req;
    r.statistics = {std::move(spec)};
    return count(r).front();
}

}  // namespace

CountSeries count_T(const CountRequest& req) { return count_one(req, StatisticSpec::T()); }
CountSeries count_E(const CountRequest& req, u64 q) { return count_one(req, StatisticSpec::E(q)); }
CountSeries count_D(const CountRequest& req, u64 q, DMode mode) {
    return count_one(req, StatisticSpec::D(q, mode));
}
CountSeries count_J(const CountRequest& req, u64 q) { return count_one(req, StatisticSpec::J(q)); }
CountSeries count_NB(const CountRequest& req, const ResidueClassSet& B) {
    return count_one(req, StatisticSpec::NB(B));
}
CountSeries count_least_primary_ne2(const CountRequest& req) { return count_one(req, StatisticSpec::LP()); }

std::map<u64, u64> lambda1_histogram(u64 x_max, SieveOptions options) {
    if (x_max < 1) throw DomainError("x_max must be >= 1");
    const auto base = base_primes_for(x_max);
    const u64 seg = options.segment_size;
    const std::size_t segments = static_cast<std::size_t>((x_max + seg - 1) / seg);
    std::vector<std::map<u64, u64>> partial(segments);
    for_each_segment(x_max, options, [&](std::size_t index, u64 lo, u64 hi) {
        const arith::FactorSegment factors(lo, hi, base);
        std::map<u64, u64> local;
        u64 twos = 0;
        for (u64 n = lo; n < hi; ++n) {
            groups::Lambda1Accumulator acc;
            for_each_prime_power(factors.at(n), [&](u64 p, unsigned e) { acc.add(p, e); });
            const u64 v = acc.value();
            if (v == 2) {
                ++twos;
            } else {
                ++local[v];
            }
        }
        if (twos) local[2] += twos;
        partial[index] = std::move(local);
    });
    std::map<u64, u64> total;
    for (const auto& local : partial) {
        for (const auto& [v, c] : local) total[v] += c;
    }
    return total;
}

}  // namespace invlab::counting
