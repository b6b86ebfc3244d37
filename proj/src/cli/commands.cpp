#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "harmval/arith.hpp"
#include "harmval/cli.hpp"
#include "harmval/parallel.hpp"
#include "harmval/sequences.hpp"
#include "harmval/series.hpp"
#include "harmval/theorem.hpp"
#include "report.hpp"

namespace harmval::cli {
namespace {

Cell valuation_cell(const Valuation& v) {
    if (v.is_infinite()) return std::string("inf");
    return std::int64_t{v.value()};
}

long parse_long(std::string_view s) {
    long v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

class InvalidInput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- verify-theorem1 -------------------------------------------------------

ExitCode verify_theorem1(const RunConfig& cfg, Report& report, std::ostream& err) {
    if (cfg.primes.empty() || cfg.a_values.empty()) throw InvalidInput("--primes and --a must be non-empty");
    for (auto p : cfg.primes) {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    }
    const SweepResult sweep = sweep_theorem1(cfg.primes, cfg.a_values, cfg.n_max, cfg.jobs);
    for (const auto& s : sweep.skipped) err << "skip: p=" << s.p << " a=" << s.a << ": " << s.reason << '\n';
    if (sweep.reports.empty()) throw InvalidInput("no valid (p, a) pair: every a is a multiple of its p");

    const TheoremReport* first_failure = nullptr;
    for (const auto& r : sweep.reports) {
        report.add_row({std::int64_t(r.p), std::int64_t{r.a}, std::int64_t(r.n), valuation_cell(r.exact_valuation),
                        std::int64_t{r.bound}, valuation_cell(r.gap), r.pass});
        if (!r.pass && !first_failure) first_failure = &r;
    }

    const GapSummary& s = sweep.summary;
    err << "summary: reports=" << s.total << " failures=" << s.failures << " equality_cases=" << s.equality_cases
        << " infinite=" << s.infinite_cases << " min_gap=" << (s.min_gap ? std::to_string(*s.min_gap) : "none")
        << " histogram=";
    bool first = true;
    for (const auto& [gap, count] : s.histogram) {
        err << (first ? "" : ",") << gap << ':' << count;
        first = false;
    }
    err << '\n';

    if (first_failure) {
        err << "counterexample: p=" << first_failure->p << " a=" << first_failure->a << " n=" << first_failure->n
            << " valuation=" << first_failure->exact_valuation.to_string() << " bound=" << first_failure->bound
            << '\n';
        return ExitCode::CheckFailed;
    }
    return ExitCode::Ok;
}

// --- series-check ----------------------------------------------------------

struct SeriesOutcome {
    bool vanishes = false;
    bool integral = false;
    std::optional<std::size_t> failing_index;
    std::string detail;
    std::vector<BigInt> un;
};

SeriesOutcome series_point(long a, std::size_t n, std::size_t extra, const HarmonicTable& h) {
    SeriesOutcome o;
    const RatSeries rn = build_rn(a, n, h);
    o.vanishes = rn.vanishes_through(n);
    if (!o.vanishes) {
        for (std::size_t i = 0; i <= n; ++i) {
            if (!rn[i].is_zero()) {
                o.failing_index = i;
                o.detail = "R_n coefficient of X^" + std::to_string(i) + " is " + rn[i].to_string();
                break;
            }
        }
    }
    try {
        o.un = extract_un(a, n, extra, h).coeffs;
        o.integral = true;
    } catch (const SeriesCheckError& e) {
        if (!o.failing_index) {
            o.failing_index = e.index();
            o.detail = e.what();
        }
    }
    return o;
}

ExitCode series_check(const RunConfig& cfg, Report& report, std::ostream& err) {
    if (cfg.a_values.empty()) throw InvalidInput("--a must be non-empty");
    if (std::find(cfg.a_values.begin(), cfg.a_values.end(), 0L) != cfg.a_values.end()) {
        throw InvalidInput("a = 0 is not allowed");
    }
    if (cfg.extra_order == 0) throw InvalidInput("--extra-order must be >= 1");

    std::vector<std::pair<long, std::size_t>> grid;
    for (auto a : cfg.a_values) {
        for (std::size_t n = 1; n <= cfg.n_max; ++n) grid.emplace_back(a, n);
    }
    HarmonicTable h;
    h.extend_to(cfg.n_max + cfg.extra_order);
    const auto outcomes = ordered_parallel_map(grid.size(), cfg.jobs, [&](std::size_t i) {
        return series_point(grid[i].first, grid[i].second, cfg.extra_order, h);
    });

    std::optional<std::size_t> first_failure;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& o = outcomes[i];
        std::string coeffs;
        for (const auto& c : o.un) coeffs += (coeffs.empty() ? "" : " ") + to_string(c);
        report.add_row({std::int64_t{grid[i].first}, std::int64_t(grid[i].second), o.vanishes, o.integral, coeffs});
        if ((!o.vanishes || !o.integral) && !first_failure) first_failure = i;
    }
    if (first_failure) {
        const auto& o = outcomes[*first_failure];
        err << "failure: a=" << grid[*first_failure].first << " n=" << grid[*first_failure].second
            << " index=" << o.failing_index.value_or(0) << ": " << o.detail << '\n';
        return ExitCode::CheckFailed;
    }
    err << "summary: points=" << grid.size() << " all vanish through degree n with integral U_n\n";
    return ExitCode::Ok;
}

// --- sequence --------------------------------------------------------------

ExitCode sequence(const RunConfig& cfg, Report& report, std::ostream& err) {
    const std::uint64_t n_max = cfg.n_max;
    HarmonicTable h;
    std::vector<BigRat> primary, secondary;

    if (cfg.which == "u") {
        h.extend_to(n_max);
        const auto rec = u_recurrence_sequence(n_max, h);
        for (std::uint64_t n = 1; n <= n_max; ++n) secondary.push_back(rec[n].value);
        auto direct = ordered_parallel_map(n_max, cfg.jobs, [&](std::size_t i) { return u_direct(i + 1, h).value; });
        primary = std::move(direct);
    } else if (cfg.which == "v" || cfg.which == "K") {
        h.extend_to(2 * n_max);
        auto pairs = ordered_parallel_map(n_max, cfg.jobs, [&](std::size_t i) {
            return std::pair{v_direct(i + 1, h).value, v_identity(i + 1, h).value};
        });
        for (auto& [d, id] : pairs) {
            primary.push_back(std::move(d));
            secondary.push_back(std::move(id));
        }
        if (cfg.which == "K") {
            std::vector<BigRat> kd, ki;
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                kd.push_back(k_defect_from(n, primary[n - 1], n == 1 ? BigRat(0) : primary[n - 2]));
                ki.push_back(k_defect_from(n, secondary[n - 1], n == 1 ? BigRat(0) : secondary[n - 2]));
            }
            primary = std::move(kd);
            secondary = std::move(ki);
        }
    } else {
        throw InvalidInput("--which must be one of u, v, K");
    }

    bool failed = false;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const BigRat& value = primary[n - 1];
        const bool agree = value == secondary[n - 1];
        report.add_row({std::int64_t(n), value.to_string(), value.is_integer(), agree});
        if (!agree) {
            err << "route disagreement at n=" << n << ": " << value << " vs " << secondary[n - 1] << '\n';
            failed = true;
        }
        if (cfg.which != "K" && !in_exceptional_set(n) && (!value.is_integer() || value.sign() <= 0)) {
            err << "unexpected non-integer or non-positive value at n=" << n << ": " << value << '\n';
            failed = true;
        }
    }
    return failed ? ExitCode::CheckFailed : ExitCode::Ok;
}

// --- lemma1 ----------------------------------------------------------------

ExitCode lemma1(const RunConfig& cfg, Report& report, std::ostream& err) {
    if (cfg.n_max < 8) throw InvalidInput("--n-max must be >= 8 (the inequality is claimed from n = 8 on)");
    std::vector<Lemma1Record> records;
    try {
        records = lemma1_scan(cfg.n_max, cfg.jobs);
    } catch (const Lemma1Violation& v) {
        const auto& r = v.record();
        report.add_row({std::int64_t(r.n), std::int64_t(r.lhs), std::int64_t(r.rhs_doubled), r.holds});
        err << "counterexample: " << v.what() << '\n';
        return ExitCode::CheckFailed;
    }
    for (const auto& r : records) {
        if (r.n < 8) {
            err << "info: n=" << r.n << (r.holds ? " holds" : " fails") << " (2*" << r.lhs
                << (r.holds ? " <= " : " > ") << r.rhs_doubled << ")\n";
        }
        if (cfg.all_records || !r.holds) {
            report.add_row({std::int64_t(r.n), std::int64_t(r.lhs), std::int64_t(r.rhs_doubled), r.holds});
        }
    }
    err << "summary: scanned n=1.." << cfg.n_max << ", holds for every n >= 8\n";
    return ExitCode::Ok;
}

std::vector<std::string> columns_for(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::VerifyTheorem1: return {"p", "a", "n", "valuation", "bound", "gap", "pass"};
        case Command::SeriesCheck: return {"a", "n", "vanishes", "un_integral", "un_coeffs"};
        case Command::Sequence: return {"n", "value", "integer", "routes_agree"};
        case Command::Lemma1: return {"n", "lhs", "rhs_doubled", "holds"};
    }
    return {};
}

}  // namespace

std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) throw std::invalid_argument("empty list element in '" + text + "'");
        // "lo..hi" with either bound possibly negative
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_long(item));
            continue;
        }
        const long lo = parse_long(std::string_view(item).substr(0, dots));
        const long hi = parse_long(std::string_view(item).substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("empty range '" + item + "'");
        for (long v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

ExitCode execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.n_max < 1) throw InvalidInput("--n-max must be >= 1");
        if (config.jobs < 1) throw InvalidInput("--jobs must be >= 1");

        Report report(columns_for(config));
        ExitCode code = ExitCode::Ok;
        switch (config.command) {
            case Command::VerifyTheorem1: code = verify_theorem1(config, report, err); break;
            case Command::SeriesCheck: code = series_check(config, report, err); break;
            case Command::Sequence: code = sequence(config, report, err); break;
            case Command::Lemma1: code = lemma1(config, report, err); break;
        }

        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
            if (!file) throw InvalidInput("cannot open output file " + *config.output_path);
            report.write(file, config.format);
            if (!file.flush()) throw InvalidInput("failed writing " + *config.output_path);
        } else {
            report.write(out, config.format);
        }
        return code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::InvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::InvalidInput;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of p-adic valuation bounds for dilogarithm-derived harmonic sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "harmval 1.0.0");

    RunConfig cfg;
    std::string primes_text;
    std::string a_text;
    std::string format_text = "table";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", cfg.output_path, "Write records to PATH instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "Worker threads; output is identical for every value")
            ->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify-theorem1", "Sweep the valuation lower bound over primes, shifts a and n");
    verify->add_option("--primes", primes_text, "Comma-separated primes, e.g. 2,3,5")->required();
    verify->add_option("--a", a_text, "Shifts a: list and/or ranges, e.g. \"-10..10\" or 1,2,-3")->required();
    verify->add_option("--n-max", cfg.n_max, "Largest n (>= 1)")->required();
    verify->footer("CSV columns: p,a,n,valuation,bound,gap,pass  (valuation/gap may be \"inf\")\n"
                   "Pairs with p | a are skipped and logged. Exit 1 on any bound violation.");
    add_common(verify);

    auto* series = app.add_subcommand("series-check", "Check R_n vanishing order and U_n integrality");
    series->add_option("--a", a_text, "Nonzero integers a: list and/or ranges")->required();
    series->add_option("--n-max", cfg.n_max, "Largest n (>= 1)")->required();
    series->add_option("--extra-order", cfg.extra_order, "Number of leading U_n coefficients to recover")
        ->capture_default_str();
    series->footer("CSV columns: a,n,vanishes,un_integral,un_coeffs  (un_coeffs space-separated integers)");
    add_common(series);

    auto* seq = app.add_subcommand("sequence", "Generate u_n, v_n or the K_n defect with route cross-checks");
    seq->add_option("--which", cfg.which, "Sequence")->check(CLI::IsMember({"u", "v", "K"}))->capture_default_str();
    seq->add_option("--n-max", cfg.n_max, "Largest n (>= 1)")->required();
    seq->footer("CSV columns: n,value,integer,routes_agree  (value as \"num\" or \"num/den\")\n"
                "Exit 1 on route disagreement or a non-integer u_n/v_n outside n in {3,5,7}.");
    add_common(seq);

    auto* lem = app.add_subcommand("lemma1", "Scan s_2(n) + floor(log2 n) <= (n+1)/2 for n = 8..n_max");
    lem->add_option("--n-max", cfg.n_max, "Largest n (>= 8)")->required();
    lem->add_flag("--all", cfg.all_records, "Emit every record, not only failing ones");
    lem->footer("CSV columns: n,lhs,rhs_doubled,holds  (holds: 2*lhs <= rhs_doubled)");
    add_common(lem);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InvalidInput);
    }

    if (verify->parsed()) cfg.command = Command::VerifyTheorem1;
    else if (series->parsed()) cfg.command = Command::SeriesCheck;
    else if (seq->parsed()) cfg.command = Command::Sequence;
    else cfg.command = Command::Lemma1;

    cfg.format = format_text == "csv" ? Format::Csv : format_text == "json" ? Format::Json : Format::Table;
    try {
        if (!primes_text.empty()) {
            for (long p : parse_int_list(primes_text)) {
                if (p < 1) throw std::invalid_argument(std::to_string(p) + " is not prime");
                cfg.primes.push_back(static_cast<std::uint64_t>(p));
            }
        }
        if (!a_text.empty()) cfg.a_values = parse_int_list(a_text);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InvalidInput);
    }
    return static_cast<int>(execute(cfg, out, err));
}

}  // namespace harmval::cli
