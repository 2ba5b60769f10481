#include "invlab_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "invlab/arith.hpp"
#include "invlab/constants.hpp"
#include "invlab/counting.hpp"
#include "invlab/error.hpp"
#include "invlab/groups.hpp"
#include "invlab/selberg_delange.hpp"
#include "invlab_cli/format.hpp"

namespace invlab::cli {

using json = nlohmann::ordered_json;
using constants::ResidueClassSet;
using constants::Statistic;

namespace {

struct Options {
    std::string format = "csv";
    bool no_header = false;
    unsigned threads = 0;

    std::string n;

    std::string stat;
    u64 q = 0;
    std::string classes;
    std::string x;
    std::string checkpoints;
    std::string mode = "predicate";
    u64 segment = counting::kDefaultSegment;

    std::string P = "1e7";
    bool closed_form = false;
    std::string B;

    double z = 1.0;
    unsigned N = 3;
    double g0 = 1.0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

counting::DMode parse_mode(const std::string& m) {
    if (m == "predicate") return counting::DMode::Predicate;
    if (m == "direct") return counting::DMode::Direct;
    if (m == "both") return counting::DMode::Both;
    throw DomainError("--mode must be predicate, direct or both, got '" + m + "'");
}

std::optional<ResidueClassSet> parse_classes(u64 q, const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (q < 3) throw DomainError("--classes needs --q >= 3");
    return ResidueClassSet(q, parse_list(text));
}

// Fills x_max and checkpoints from --x / --checkpoints.
counting::CountRequest make_request(const Options& o) {
    counting::CountRequest req;
    if (!o.checkpoints.empty()) req.checkpoints = parse_checkpoints(o.checkpoints);
    if (!o.x.empty()) {
        req.x_max = parse_count(o.x);
    } else if (!req.checkpoints.empty()) {
        req.x_max = req.checkpoints.back();
    } else {
        throw DomainError("one of --x or --checkpoints is required");
    }
    req.options.segment_size = o.segment;
    req.options.threads = o.threads;
    return req;
}

counting::StatisticSpec make_spec(const Options& o) {
    if (o.stat.empty()) throw DomainError("--stat is required");
    const Statistic s = constants::parse_statistic(o.stat);
    const auto mode = parse_mode(o.mode);
    if (mode != counting::DMode::Predicate && s != Statistic::D) {
        throw DomainError("--mode applies to --stat D only");
    }
    if (!o.classes.empty() && s != Statistic::NB) throw DomainError("--classes applies to --stat NB only");
    switch (s) {
        case Statistic::T: return counting::StatisticSpec::T();
        case Statistic::LP: return counting::StatisticSpec::LP();
        case Statistic::E:
        case Statistic::D:
            if (o.q < 4 || o.q % 2 != 0) {
                throw DomainError("--stat " + o.stat + " needs an even --q >= 4, got " + std::to_string(o.q));
            }
            return s == Statistic::E ? counting::StatisticSpec::E(o.q) : counting::StatisticSpec::D(o.q, mode);
        case Statistic::J:
            if (o.q < 3) throw DomainError("--stat J needs --q >= 3");
            return counting::StatisticSpec::J(o.q);
        case Statistic::NB: {
            if (o.classes.empty()) throw DomainError("--stat NB needs --classes");
            return counting::StatisticSpec::NB(*parse_classes(o.q, o.classes));
        }
    }
    throw DomainError("unknown statistic");
}

void check_format(const Options& o) {
    if (o.format != "csv" && o.format != "json") throw DomainError("--format must be csv or json");
}

json spec_meta(const counting::StatisticSpec& spec, const counting::CountRequest& req) {
    json m;
    m["statistic"] = spec.label();
    if (spec.q) m["q"] = spec.q;
    if (spec.classes) m["classes"] = spec.classes->members();
    m["x"] = req.x_max;
    m["segment_size"] = req.options.segment_size;
    m["threads"] = req.options.threads;
    return m;
}

void check_routes(const counting::CountSeries& s) {
    if (!s.cross_check || s.routes_agree()) return;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (s.points[i] != (*s.cross_check)[i]) {
            throw ConsistencyError(s.statistic.label() + ": predicate and direct routes disagree at x = " +
                                   std::to_string(s.points[i].first) + " (" +
                                   std::to_string(s.points[i].second) + " vs " +
                                   std::to_string((*s.cross_check)[i].second) + ")");
        }
    }
}

void cmd_structure(const Options& o, std::ostream& out) {
    check_format(o);
    const u64 n = parse_count(o.n);
    if (n == 0) throw DomainError("n must be >= 1");
    const auto f = arith::factorize(n);
    const auto cyc = groups::unit_group_cyclic_orders(f);
    const auto inv = groups::invariant_factors(cyc);
    const u64 l1 = inv.smallest();
    const u64 carm = inv.largest();
    const u64 lp = groups::least_primary_factor(cyc);
    if (o.format == "json") {
        json j;
        j["n"] = n;
        json fac = json::array();
        for (const auto& [p, e] : f.factors) fac.push_back({{"p", p}, {"e", e}});
        j["factorization"] = fac;
        j["cyclic_orders"] = cyc.orders;
        j["invariant_factors"] = inv.chain;
        j["lambda1"] = l1;
        j["carmichael"] = carm;
        j["least_primary"] = lp;
        out << j.dump(2) << '\n';
        return;
    }
    out << "n: " << n << '\n'
        << "factorization: " << fmt_factorization(f) << '\n'
        << "cyclic_orders: " << join(cyc.orders, ", ") << '\n'
        << "invariant_factors: " << join(inv.chain, " | ") << '\n'
        << "lambda1: " << l1 << '\n'
        << "carmichael: " << carm << '\n'
        << "least_primary: " << lp << '\n';
}

void cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
    check_format(o);
    auto req = make_request(o);
    const auto spec = make_spec(o);
    req.statistics = {spec};
    const auto series = counting::count(req).front();
    if (series.odd_q_warning) err << "warning: " << spec.label() << " is identically zero for odd q\n";
    check_routes(series);
    const bool both = series.cross_check.has_value();

    if (o.format == "json") {
        json j;
        j["meta"] = spec_meta(spec, req);
        if (!o.no_header) j["meta"]["generated"] = timestamp();
        json rows = json::array();
        for (std::size_t i = 0; i < series.points.size(); ++i) {
            json r{{"x", series.points[i].first}, {"count", series.points[i].second}};
            if (both) r["direct"] = (*series.cross_check)[i].second;
            rows.push_back(r);
        }
        j["rows"] = rows;
        out << j.dump(2) << '\n';
        return;
    }
    if (!o.no_header) out << "# invlab count " << spec.label() << " generated " << timestamp() << '\n';
    out << (both ? "x,count,direct\n" : "x,count\n");
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        out << series.points[i].first << ',' << series.points[i].second;
        if (both) out << ',' << (*series.cross_check)[i].second;
        out << '\n';
    }
}

void cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
    check_format(o);
    auto req = make_request(o);
    const auto spec = make_spec(o);
    const u64 P = parse_count(o.P);
    req.statistics = {spec};
    const auto norm = counting::normalized(req);
    if (norm.checkpoints.front() < 3) throw DomainError("compare needs every checkpoint >= 3");
    const auto lc = constants::leading_constant(spec.kind, spec.q, spec.classes, P);
    const auto series = counting::count(norm).front();
    if (series.odd_q_warning) err << "warning: " << spec.label() << " is identically zero for odd q\n";
    check_routes(series);

    struct Row {
        u64 x, count;
        double main, ratio;
    };
    std::vector<Row> rows;
    for (const auto& [x, c] : series.points) {
        const double m = constants::main_term(lc, static_cast<double>(x));
        rows.push_back({x, c, m, static_cast<double>(c) / m});
    }
    const double rel = lc.constant.error_bound / lc.constant.value;

    if (o.format == "json") {
        json j;
        j["meta"] = spec_meta(spec, norm);
        j["meta"]["constant"] = {{"label", lc.label},
                                 {"value", lc.constant.value},
                                 {"error_bound", lc.constant.error_bound},
                                 {"truncation_P", lc.constant.truncation_P},
                                 {"z", lc.z}};
        if (!o.no_header) j["meta"]["generated"] = timestamp();
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"x", r.x}, {"count", r.count}, {"main_term", r.main}, {"ratio", r.ratio}});
        }
        j["rows"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    if (!o.no_header) out << "# invlab compare " << spec.label() << " generated " << timestamp() << '\n';
    out << "x,count,main_term,ratio\n";
    for (const auto& r : rows) {
        out << r.x << ',' << r.count << ',' << fmt_double(r.main) << ',' << fmt_double(r.ratio) << '\n';
    }
    out << "# constant " << lc.label << " = " << fmt_double(lc.constant.value)
        << " error_bound = " << fmt_double(lc.constant.error_bound) << " P = " << lc.constant.truncation_P
        << " relative_ratio_error = " << fmt_double(rel) << '\n';
}

struct ReportRow {
    std::string quantity;
    double value;
    double error_bound;
    u64 P;
};

void emit_report(const Options& o, const json& meta, const std::vector<ReportRow>& rows, std::ostream& out) {
    if (o.format == "json") {
        json j;
        j["meta"] = meta;
        json arr = json::array();
        for (const auto& r : rows) {
            json e{{"quantity", r.quantity}, {"value", r.value}, {"error_bound", r.error_bound}};
            if (r.P) e["truncation_P"] = r.P;
            arr.push_back(e);
        }
        j["rows"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    out << "quantity,value,error_bound,truncation_P\n";
    for (const auto& r : rows) {
        out << r.quantity << ',' << fmt_double(r.value) << ',' << fmt_double(r.error_bound) << ',';
        if (r.P) out << r.P;
        out << '\n';
    }
}

void cmd_constants(const Options& o, std::ostream& out) {
    check_format(o);
    const u64 P = parse_count(o.P);
    const u64 q = o.q;
    json meta{{"q", q}, {"truncation_P", P}};
    std::vector<ReportRow> rows;

    if (!o.B.empty()) {
        if (q < 3) throw DomainError("--B needs --q >= 3");
        const ResidueClassSet B(q, parse_list(o.B));
        meta["B"] = B.members();
        const auto gb = constants::G_B1(B, P);
        rows.push_back({"G_B(1)", gb.value, gb.error_bound, gb.truncation_P});
        if (B.size() < B.phi()) {
            const ResidueClassSet Bc = B.complement();
            meta["complement"] = Bc.members();
            const auto gc = constants::G_B1(Bc, P);
            const double target = static_cast<double>(B.phi()) / static_cast<double>(q);
            const double prod = gb.value * gc.value;
            const double bound = gb.error_bound * gc.value + gc.error_bound * gb.value;
            rows.push_back({"G_B'(1)", gc.value, gc.error_bound, gc.truncation_P});
            rows.push_back({"product", prod, bound, 0});
            rows.push_back({"phi(q)/q", target, 0.0, 0});
            rows.push_back({"partition_deviation", std::abs(prod - target), bound + 1e-8, 0});
            if (std::abs(prod - target) > bound + 1e-8) {
                emit_report(o, meta, rows, out);
                throw ConsistencyError("partition identity G_B(1) G_B'(1) = phi(q)/q violated");
            }
        }
        emit_report(o, meta, rows, out);
        return;
    }

    if (q < 4 || q % 2 != 0) throw DomainError("G_q and H_q need an even --q >= 4, got " + std::to_string(q));
    const auto g = constants::G_q(q, P);
    const auto h = constants::H_q(q, P);
    rows.push_back({"G_" + std::to_string(q), g.value, g.error_bound, g.truncation_P});
    rows.push_back({"H_" + std::to_string(q), h.value, h.error_bound, h.truncation_P});
    if (o.closed_form) {
        if (q != 4 && q != 6) throw DomainError("--closed-form exists for q = 4 and q = 6 only");
        const auto c = q == 4 ? constants::H4_closed(P) : constants::H6_closed(P);
        const double gap = std::abs(c.value - h.value);
        const double bound = c.error_bound + h.error_bound;
        rows.push_back({"H_" + std::to_string(q) + " closed", c.value, c.error_bound, c.truncation_P});
        rows.push_back({"discrepancy", gap, bound, 0});
        if (gap > bound) {
            emit_report(o, meta, rows, out);
            throw ConsistencyError("closed-form and general H_q routes differ by more than their error bounds");
        }
    }
    emit_report(o, meta, rows, out);
}

void cmd_sd(const Options& o, std::ostream& out) {
    check_format(o);
    if (o.N > sd::kMaxOrder) {
        throw ConfigError("--N " + std::to_string(o.N) + " exceeds the stored series depth " +
                          std::to_string(sd::kMaxOrder));
    }
    const auto Z = sd::Z_coeffs(o.z, o.N);
    std::vector<sd::cplx> g(o.N + 1, 0.0);
    g[0] = o.g0;
    const auto lam = sd::lambda_coeffs(o.z, g, o.N);
    if (o.format == "json") {
        json j;
        j["meta"] = {{"z", o.z}, {"N", o.N}, {"g0", o.g0}};
        json arr = json::array();
        for (unsigned k = 0; k <= o.N; ++k) {
            arr.push_back({{"k", k},
                           {"gamma_over_factorial", {Z[k].real(), Z[k].imag()}},
                           {"lambda", {lam[k].real(), lam[k].imag()}}});
        }
        j["rows"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    out << "k,gamma_over_factorial,lambda\n";
    for (unsigned k = 0; k <= o.N; ++k) {
        out << k << ',' << fmt_double(Z[k].real()) << ',' << fmt_double(lam[k].real()) << '\n';
    }
}

std::optional<unsigned> env_threads() {
    const char* v = std::getenv("INVLAB_THREADS");
    if (!v || !*v) return std::nullopt;
    return static_cast<unsigned>(parse_count(v));
}

}  // namespace

u64 parse_count(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw DomainError("expected a positive integer, got an empty string");
    if (text.find_first_not_of("0123456789") == std::string::npos) {
        errno = 0;
        const unsigned long long v = std::strtoull(text.c_str(), nullptr, 10);
        if (errno == ERANGE) throw DomainError("integer out of range: " + text);
        return v;
    }
    auto mantissa_exp = [&](std::size_t pos, std::size_t skip) -> u64 {
        const std::string a = text.substr(0, pos), b = text.substr(pos + skip);
        if (a.empty() || b.empty() || a.find_first_not_of("0123456789") != std::string::npos ||
            b.find_first_not_of("0123456789") != std::string::npos || b.size() > 2) {
            throw DomainError("malformed integer: " + text);
        }
        const auto p = arith::checked_pow(10, static_cast<unsigned>(std::stoul(b)));
        const u64 m = std::stoull(a);
        if (!p || (m && *p > std::numeric_limits<u64>::max() / m)) throw DomainError("integer out of range: " + text);
        return m * *p;
    };
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) return mantissa_exp(e, 1);
    if (const auto c = text.find('^'); c != std::string::npos) {
        if (text.substr(0, c) != "10") throw DomainError("malformed integer: " + text);
        return mantissa_exp(c - 1, 2);  // "10^k" as 1 * 10^k
    }
    throw DomainError("malformed integer: " + text);
}

std::vector<u64> parse_list(const std::string& text) {
    std::vector<u64> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_count(item));
    if (out.empty()) throw DomainError("empty list");
    return out;
}

std::vector<u64> parse_checkpoints(const std::string& text) {
    if (const auto r = text.find(".."); r != std::string::npos) {
        const u64 a = parse_count(text.substr(0, r)), b = parse_count(text.substr(r + 2));
        auto decade = [&](u64 v) {
            unsigned k = 0;
            while (v % 10 == 0 && v > 1) v /= 10, ++k;
            if (v != 1) throw DomainError("range endpoints must be powers of ten: " + text);
            return k;
        };
        const unsigned ka = decade(a), kb = decade(b);
        if (ka > kb) throw DomainError("empty checkpoint range: " + text);
        return counting::decade_ladder(ka, kb);
    }
    return parse_list(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"invlab: invariant factors of (Z/nZ)^x, counting functions and their constants"};
    app.require_subcommand(1);

    auto* structure = app.add_subcommand("structure", "Unit group structure of one modulus");
    structure->add_option("n", o.n, "Modulus n >= 1")->required();

    auto add_count_flags = [&](CLI::App* sub) {
        sub->add_option("--stat", o.stat, "T, E, D, J, NB or LP")->required();
        sub->add_option("--q", o.q, "Modulus q");
        sub->add_option("--classes", o.classes, "Residue classes b1,b2,... (NB)");
        sub->add_option("--x", o.x, "Upper limit");
        sub->add_option("--checkpoints", o.checkpoints, "Comma list or decade range 1e4..1e8");
        sub->add_option("--segment", o.segment, "Sieve segment length");
    };
    auto* count = app.add_subcommand("count", "Exact counts by segmented sieve");
    add_count_flags(count);
    count->add_option("--mode", o.mode, "D only: predicate, direct or both");

    auto* compare = app.add_subcommand("compare", "Counts against the leading main term");
    add_count_flags(compare);
    compare->add_option("--P", o.P, "Euler product truncation");

    auto* cons = app.add_subcommand("constants", "G_q, H_q and G_B(1)");
    cons->add_option("--q", o.q, "Modulus q")->required();
    cons->add_option("--P", o.P, "Euler product truncation");
    cons->add_flag("--closed-form", o.closed_form, "Also evaluate the closed form (q = 4, 6)");
    cons->add_option("--B", o.B, "Residue classes b1,b2,... for G_B(1)");

    auto* sdc = app.add_subcommand("sd", "Selberg-Delange coefficients");
    sdc->add_option("--z", o.z, "Exponent z");
    sdc->add_option("--N", o.N, "Highest k");
    sdc->add_option("--g0", o.g0, "G(1; z)");

    for (auto* sub : {structure, count, compare, cons, sdc}) {
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--no-header", o.no_header, "Omit the timestamp header line");
        sub->add_option("--threads", o.threads, "Worker thread cap (default: all cores; env INVLAB_THREADS)");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        bool threads_given = false;
        for (auto* sub : app.get_subcommands()) threads_given = threads_given || sub->get_option("--threads")->count() > 0;
        if (!threads_given) {
            if (const auto t = env_threads()) o.threads = *t;
        }
        if (structure->parsed()) cmd_structure(o, out);
        if (count->parsed()) cmd_count(o, out, err);
        if (compare->parsed()) cmd_compare(o, out, err);
        if (cons->parsed()) cmd_constants(o, out);
        if (sdc->parsed()) cmd_sd(o, out);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitConsistency;
    }
    return kExitOk;
}

}  // namespace invlab::cli
