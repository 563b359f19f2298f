#include "cli.hpp"

#include "selftest.hpp"

#include "toricnp/geometry.hpp"
#include "toricnp/numtheory.hpp"
#include "toricnp/oracle.hpp"
#include "toricnp/report_json.hpp"
#include "toricnp/slope_comb.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <tuple>

namespace toricnp::cli {

namespace {

using json::Json;
using json::to_json;

// p^(n+1) above this needs --heavy for oracle runs.
constexpr std::uint64_t kHeavyFieldSize = 1'000'000;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    std::string format = "json";
    unsigned threads = 1;
    bool strict = false;
    bool heavy = false;
    double mem_budget = 0.0;
};

std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw UsageError("cannot parse " + what + " '" + s + "'");
    return v;
}

// "N" or "A..B", inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s, const std::string& what) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_int(s, what);
        return {v, v};
    }
    const auto lo = parse_int(s.substr(0, dots), what), hi = parse_int(s.substr(dots + 2), what);
    if (lo > hi) throw UsageError(what + " range is empty: " + s);
    return {lo, hi};
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
        if (nt::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
    }
    return out;
}

std::int64_t require_prime(std::int64_t p) {
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p))) throw UsageError(std::to_string(p) + " is not prime");
    return p;
}

// "all", "N", "A..B" or "a,b,c", within 1..p-1.
std::vector<std::int64_t> parse_ts(const std::string& s, std::int64_t p) {
    std::vector<std::int64_t> ts;
    if (s == "all") {
        for (std::int64_t t = 1; t < p; ++t) ts.push_back(t);
        return ts;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto [lo, hi] = parse_range(piece, "t");
        for (std::int64_t t = lo; t <= hi; ++t) ts.push_back(t);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (auto t : ts) {
        if (t < 1 || t >= p) throw UsageError("t must lie in 1..p-1, got " + std::to_string(t));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

void write_polygon_csv(std::ostream& out, const PolygonData& poly) {
    out << "index,slope_num,slope_den,vertex_x,vertex_y_num,vertex_y_den\n";
    for (std::int64_t i = 0; i <= poly.width(); ++i) {
        out << i << ',';
        if (i < poly.width()) {
            const auto& s = poly.slopes()[static_cast<std::size_t>(i)];
            out << s.num().get_str() << ',' << s.den().get_str();
        } else {
            out << ',';
        }
        const Rational y = poly.y_at(i);
        out << ',' << i << ',' << y.num().get_str() << ',' << y.den().get_str() << '\n';
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

bool needs_heavy(int n, int p) {
    std::uint64_t q = 1;
    for (int i = 0; i <= n; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kHeavyFieldSize) return true;
    }
    return false;
}

oracle::OracleOptions oracle_options(const Globals& g, const std::string& algorithm, int max_k) {
    oracle::OracleOptions o;
    if (algorithm == "naive") {
        o.algorithm = oracle::AlgorithmChoice::naive;
    } else if (algorithm == "convolution") {
        o.algorithm = oracle::AlgorithmChoice::convolution;
    }
    o.engine.threads = std::max(1u, g.threads);
    o.engine.mem_budget_gb = g.mem_budget;
    o.direct_k = max_k;
    return o;
}

int cmd_hodge(const Globals& g, int n, std::ostream& out) {
    auto data = geometry::hodge_numbers(n);
    data.polygon = geometry::hodge_polygon(n);
    if (g.format == "csv") {
        write_polygon_csv(out, data.polygon);
    } else {
        Json j;
        j["command"] = "hodge";
        j.update(to_json(data));
        emit(out, j);
    }
    return kOk;
}

int cmd_predict(const Globals& g, int n, std::int64_t p, std::ostream& out) {
    require_prime(p);
    const auto r = slopes::predicted_np(n, p);
    if (g.format == "csv") {
        write_polygon_csv(out, r.polygon);
    } else {
        Json j;
        j["command"] = "predict";
        j.update(to_json(r));
        emit(out, j);
    }
    const bool below_bound = mpz_class(static_cast<long>(p)) <= r.p_bound_thm15;
    return g.strict && below_bound ? kAssumptionFailure : kOk;
}

int cmd_assumptions(const Globals& g, int n, const std::string& p_spec, std::ostream& out) {
    const auto a14 = slopes::vandermonde_report(n);
    std::optional<slopes::PrimeBounds> bounds;
    if (a14.overall) bounds = slopes::prime_bounds(n);
    bool ok = a14.overall;

    Json primes = Json::array();
    if (!p_spec.empty()) {
        const auto [lo, hi] = parse_range(p_spec, "p");
        if (lo == hi) require_prime(lo);
        for (std::int64_t p : primes_in(lo, hi)) {
            if (p <= n) continue;
            const auto r = slopes::assumption16(n, p);
            ok = ok && r.ok;
            Json row;
            row["p"] = p;
            row.update(to_json(r));
            if (bounds) {
                row["above_thm15_bound"] = mpz_class(static_cast<long>(p)) > bounds->thm15;
                row["above_thm17_bound"] = p > bounds->thm17;
            }
            primes.push_back(std::move(row));
        }
    }

    if (g.format == "csv") {
        out << "p,assumption16_ok,ords\n";
        for (const auto& row : primes) {
            out << row["p"].get<std::int64_t>() << ',' << (row["ok"].get<bool>() ? "true" : "false") << ',';
            bool first = true;
            for (const auto& o : row["ord"]) {
                out << (first ? "" : ";") << o.get<int>();
                first = false;
            }
            out << '\n';
        }
    } else {
        Json j;
        j["command"] = "assumptions";
        j["n"] = n;
        j["assumption14"] = to_json(a14);
        if (bounds) {
            j["p_bound_thm15"] = to_json(bounds->thm15);
            j["p_bound_thm17"] = bounds->thm17;
        } else {
            j["p_bound_thm15"] = nullptr;
            j["p_bound_thm17"] = nullptr;
        }
        j["assumption16"] = std::move(primes);
        emit(out, j);
    }
    return g.strict && !ok ? kAssumptionFailure : kOk;
}

int cmd_oracle(const Globals& g, int n, std::int64_t p, const std::string& t_spec, const std::string& algorithm,
               int max_k, std::ostream& out, std::ostream& err) {
    require_prime(p);
    if (p == 2) throw UsageError("p must be odd");
    const auto ts = parse_ts(t_spec, p);
    if (needs_heavy(n, static_cast<int>(p)) && !g.heavy) {
        throw UsageError("p^(n+1) exceeds " + std::to_string(kHeavyFieldSize) + "; rerun with --heavy");
    }
    const auto reports = oracle::oracle_np(n, static_cast<int>(p), ts, oracle_options(g, algorithm, max_k));
    bool mismatch = false;
    for (const auto& r : reports) {
        mismatch = mismatch || !r.hodge_ok || (r.prediction_match && !*r.prediction_match);
        for (const auto& w : r.warnings) err << "warning (t=" << r.t << "): " << w << '\n';
    }
    if (g.format == "csv") {
        for (const auto& r : reports) {
            out << "# t=" << r.t << '\n';
            write_polygon_csv(out, r.polygon);
        }
    } else {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        Json j;
        j["command"] = "oracle";
        j["n"] = n;
        j["p"] = p;
        j["reports"] = std::move(list);
        emit(out, j);
    }
    return g.strict && mismatch ? kMismatch : kOk;
}

int cmd_compare(const Globals& g, int n, std::int64_t p, std::int64_t t, const std::string& algorithm, std::ostream& out,
                std::ostream& err) {
    require_prime(p);
    if (p == 2) throw UsageError("p must be odd");
    if (t < 1 || t >= p) throw UsageError("t must lie in 1..p-1");
    const auto pred = slopes::predicted_np(n, p);
    const auto hodge = geometry::hodge_polygon(n);
    const bool applicable = mpz_class(static_cast<long>(p)) > pred.p_bound_thm15;

    std::optional<oracle::OracleReport> rep;
    if (!needs_heavy(n, static_cast<int>(p)) || g.heavy) {
        rep = oracle::oracle_np(n, static_cast<int>(p), t, oracle_options(g, algorithm, 0));
    } else {
        err << "warning: oracle skipped; p^(n+1) exceeds " << kHeavyFieldSize << " (use --heavy)\n";
    }

    std::string verdict = "oracle-skipped";
    Json deviations = Json::array();
    if (rep) {
        verdict = rep->polygon == pred.polygon ? "match" : "mismatch";
        for (std::size_t i = 0; i < pred.polygon.slopes().size(); ++i) {
            deviations.push_back(to_json(rep->polygon.slopes()[i] - pred.polygon.slopes()[i]));
        }
    }

    if (g.format == "csv") {
        out << "# predicted\n";
        write_polygon_csv(out, pred.polygon);
        out << "# hodge\n";
        write_polygon_csv(out, hodge);
        if (rep) {
            out << "# oracle\n";
            write_polygon_csv(out, rep->polygon);
        }
    } else {
        Json j;
        j["command"] = "compare";
        j["n"] = n;
        j["p"] = p;
        j["t"] = t;
        j["predicted"] = to_json(pred.polygon);
        j["hodge"] = to_json(hodge);
        j["oracle"] = rep ? to_json(rep->polygon) : Json(nullptr);
        j["verdict"] = verdict;
        j["prediction_applicable"] = applicable;
        j["deviations"] = std::move(deviations);
        Json warnings = pred.warnings;
        if (!applicable) warnings.push_back("below the prime bound: comparison is informational");
        j["warnings"] = std::move(warnings);
        emit(out, j);
    }
    if (g.strict && rep && (!rep->hodge_ok || (applicable && verdict == "mismatch"))) return kMismatch;
    return kOk;
}

int cmd_scan_limit(const Globals& g, int n, const std::string& p_spec, std::ostream& out) {
    const auto [lo, hi] = parse_range(p_spec, "p");
    const auto hodge = geometry::hodge_polygon(n);
    Json rows = Json::array();
    std::map<std::int64_t, Rational> last_by_residue;
    bool decreasing = true;
    std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> table;
    for (std::int64_t p : primes_in(std::max<std::int64_t>(lo, n + 1), hi)) {
        const auto pred = slopes::predicted_np(n, p);
        Rational dev(0);
        for (std::size_t i = 0; i < hodge.slopes().size(); ++i) {
            dev = std::max(dev, toricnp::abs(pred.polygon.slopes()[i] - hodge.slopes()[i]));
        }
        const auto residue = p % n;
        if (auto it = last_by_residue.find(residue); it != last_by_residue.end() && it->second.sign() > 0) {
            decreasing = decreasing && dev < it->second;
        }
        last_by_residue[residue] = dev;
        table.emplace_back(p, residue, dev);
    }
    if (g.format == "csv") {
        out << "p,p_mod_n,max_dev_num,max_dev_den\n";
        for (const auto& [p, r, d] : table) out << p << ',' << r << ',' << d.num().get_str() << ',' << d.den().get_str() << '\n';
    } else {
        for (const auto& [p, r, d] : table) {
            Json row;
            row["p"] = p;
            row["p_mod_n"] = r;
            row["max_dev"] = to_json(d);
            rows.push_back(std::move(row));
        }
        Json j;
        j["command"] = "scan-limit";
        j["n"] = n;
        j["rows"] = std::move(rows);
        j["strictly_decreasing_within_residue"] = decreasing;
        emit(out, j);
    }
    return kOk;
}

int cmd_selftest(const Globals& g, std::ostream& out, std::ostream& err) {
    SelftestOptions opts;
    opts.threads = std::max(1u, g.threads);
    const auto checks = run_selftest(opts, [&](const SelftestCheck& c) {
        err << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.seconds << " s): " << c.detail << '\n';
    });
    bool all = true;
    if (g.format == "csv") {
        out << "check,passed,seconds,detail\n";
        for (const auto& c : checks) out << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.seconds << ",\"" << c.detail << "\"\n";
        for (const auto& c : checks) all = all && c.passed;
    } else {
        Json list = Json::array();
        for (const auto& c : checks) {
            Json row;
            row["name"] = c.name;
            row["passed"] = c.passed;
            row["detail"] = c.detail;
            list.push_back(std::move(row));
            all = all && c.passed;
        }
        Json j;
        j["command"] = "selftest";
        j["passed"] = all;
        j["checks"] = std::move(list);
        emit(out, j);
    }
    return all ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge polygons, predicted and exact Newton polygons of x^n + y + t/(xy) over F_p", "toricnp"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", g.threads, "Worker threads for the sum engine")->check(CLI::Range(1u, 1024u));
    app.add_flag("--strict", g.strict, "Exit 3 on assumption failure, 4 on mismatch");
    app.add_flag("--heavy", g.heavy, "Allow oracle runs with p^(n+1) > 1e6");
    app.add_option("--mem-budget", g.mem_budget, "Transform memory budget in GiB (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);

    int n = 0;
    std::int64_t p = 0, t = 1;
    std::string p_spec, t_spec = "1", algorithm = "auto";
    int max_k = 0;

    auto* hodge = app.add_subcommand("hodge", "Hodge numbers and Hodge polygon");
    hodge->add_option("--n", n, "Family degree")->required()->check(CLI::Range(2, 1000));

    auto* predict = app.add_subcommand("predict", "Predicted Newton polygon");
    predict->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
    predict->add_option("--p", p)->required();

    auto* assumptions = app.add_subcommand("assumptions", "Determinant and factorial hypotheses, prime bounds");
    assumptions->add_option("--n", n)->required()->check(CLI::Range(2, 24));
    assumptions->add_option("--p", p_spec, "Prime or range A..B");

    auto* orc = app.add_subcommand("oracle", "Exact L-function and Newton polygon from toric sums");
    orc->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
    orc->add_option("--p", p)->required();
    orc->add_option("--t", t_spec, "t value, A..B, comma list, or all");
    orc->add_option("--algorithm", algorithm)->check(CLI::IsMember({"auto", "naive", "convolution"}));
    orc->add_option("--max-k-budget", max_k, "Also compute sums directly up to this k")->check(CLI::Range(0, 64));

    auto* compare = app.add_subcommand("compare", "Predicted versus oracle polygon");
    compare->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
    compare->add_option("--p", p)->required();
    compare->add_option("--t", t);
    compare->add_option("--algorithm", algorithm)->check(CLI::IsMember({"auto", "naive", "convolution"}));

    auto* scan = app.add_subcommand("scan-limit", "Max slope deviation from the Hodge polygon across primes");
    scan->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
    scan->add_option("--p", p_spec, "Range A..B")->required();

    auto* selftest = app.add_subcommand("selftest", "Built-in cross-checks and property suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidParameters;
    }

    try {
        if (*hodge) return cmd_hodge(g, n, out);
        if (*predict) return cmd_predict(g, n, p, out);
        if (*assumptions) return cmd_assumptions(g, n, p_spec, out);
        if (*orc) return cmd_oracle(g, n, p, t_spec, algorithm, max_k, out, err);
        if (*compare) return cmd_compare(g, n, p, t, algorithm, out, err);
        if (*scan) return cmd_scan_limit(g, n, p_spec, out);
        if (*selftest) return cmd_selftest(g, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInvalidParameters;
}

}  // namespace toricnp::cli
