// bernsum: exact Bernoulli/Euler values, identity sweeps, and power-sum
// benchmarks on the command line.
//
// Exit codes: 0 all checks passed, 1 at least one equality failed (the
// exact counterexample is printed), 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bernsum/bernoulli.hpp"
#include "bernsum/exactq.hpp"
#include "bernsum/identities.hpp"
#include "bernsum/powersum.hpp"

using namespace bernsum;

namespace {

long to_long(const Integer& v, const std::string& what) {
    if (!v.fits_slong_p())
        throw std::invalid_argument(what + " out of range: " + to_string(v));
    return v.get_si();
}

unsigned long to_index(const Integer& v, const std::string& what) {
    if (sgn(v) < 0 || !v.fits_ulong_p())
        throw std::invalid_argument(what + " must be a small nonnegative integer, got " +
                                    to_string(v));
    return v.get_ui();
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

// "a..b" (inclusive) or a comma list of integers.
std::vector<long> parse_int_list(const std::string& text, const std::string& what) {
    if (text.empty()) throw std::invalid_argument(what + ": empty range");
    const size_t dots = text.find("..");
    std::vector<long> values;
    if (dots != std::string::npos) {
        const long lo = to_long(parse_integer(text.substr(0, dots)), what);
        const long hi = to_long(parse_integer(text.substr(dots + 2)), what);
        if (lo > hi) throw std::invalid_argument(what + ": empty range " + text);
        for (long v = lo; v <= hi; ++v) values.push_back(v);
    } else {
        for (const auto& part : split_commas(text))
            values.push_back(to_long(parse_integer(part), what));
    }
    return values;
}

std::vector<unsigned long> parse_index_list(const std::string& text,
                                            const std::string& what) {
    std::vector<unsigned long> values;
    for (long v : parse_int_list(text, what)) {
        if (v < 0) throw std::invalid_argument(what + " must be nonnegative");
        values.push_back(static_cast<unsigned long>(v));
    }
    return values;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& what) {
    if (text.empty()) throw std::invalid_argument(what + ": empty list");
    std::vector<Rational> values;
    for (const auto& part : split_commas(text)) values.push_back(parse_rational(part));
    return values;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string subject;
    std::string range_N, range_m, range_n, range_r, range_k, range_l;
    std::string list_w, list_x, list_y;
    long max_m = 0;  // 0: no cap on the default grids
    bool json = false;
};

class ReportSink {
public:
    explicit ReportSink(bool json) : json_(json) {}

    void emit(const IdentityReport& report) {
        std::cout << (json_ ? to_json(report) : to_text(report)) << "\n";
        ++checked_;
        if (report.pass) ++passed_;
    }

    void finish() const {
        const long failed = checked_ - passed_;
        if (json_) {
            std::cout << "{\"checked\":" << checked_ << ",\"passed\":" << passed_
                      << ",\"failed\":" << failed << "}\n";
        } else {
            std::cout << "checked=" << checked_ << " passed=" << passed_
                      << " failed=" << failed << "\n";
        }
    }

    bool all_passed() const { return passed_ == checked_; }

private:
    bool json_;
    long checked_ = 0;
    long passed_ = 0;
};

unsigned long capped(unsigned long bound, long max_m) {
    if (max_m > 0 && static_cast<unsigned long>(max_m) < bound)
        return static_cast<unsigned long>(max_m);
    return bound;
}

// Defaults mirror the project's acceptance grids, so `verify all` doubles
// as the CI sweep.
void run_verify(const VerifyOptions& opt, const std::string& subject,
                ReportSink& sink) {
    const bool all = subject == "all";

    if (all || subject == "thm1" || subject == "thm1-sun") {
        const auto Ns = parse_int_list(opt.range_N.empty() ? "-6..8" : opt.range_N, "N");
        const auto ms = parse_index_list(
            opt.range_m.empty() ? "1.." + std::to_string(capped(10, opt.max_m))
                                : opt.range_m,
            "m");
        const auto ws = parse_rational_list(
            opt.list_w.empty() ? "0,1,-1,2,-2,10,5/2,-7/3" : opt.list_w, "w");
        const bool via_sun = subject == "thm1-sun";
        for (long N : Ns)
            for (unsigned long m : ms)
                for (const auto& w : ws) {
                    if (all || !via_sun) sink.emit(check_thm1(N, m, w));
                    if (all || via_sun) sink.emit(thm1_from_sun(N, m, w));
                }
    }
    if (all || subject == "eq1") {
        const auto ms = parse_index_list(
            opt.range_m.empty() ? "0.." + std::to_string(capped(20, opt.max_m))
                                : opt.range_m,
            "m");
        for (unsigned long m : ms) sink.emit(eq1_check(m));
    }
    if (all || subject == "eq1-bridge") {
        const auto ms = parse_index_list(
            opt.range_m.empty() ? "1.." + std::to_string(capped(20, opt.max_m))
                                : opt.range_m,
            "m");
        for (unsigned long m : ms) sink.emit(eq1_equals_thm1_at(m));
    }
    if (all || subject == "eq5") {
        const auto ms = parse_index_list(
            opt.range_m.empty() ? "1.." + std::to_string(capped(12, opt.max_m))
                                : opt.range_m,
            "m");
        const auto ws = parse_rational_list(
            opt.list_w.empty() ? "0,1,-1,2,5/2,-7/3" : opt.list_w, "w");
        for (unsigned long m : ms)
            for (const auto& w : ws) sink.emit(eq5_check(m, w));
    }
    if (all || subject == "eq6") {
        const auto ms = parse_index_list(
            opt.range_m.empty() ? "0.." + std::to_string(capped(12, opt.max_m))
                                : opt.range_m,
            "m");
        for (unsigned long m : ms) sink.emit(eq6_check(m));
    }
    if (all || subject == "eq7") {
        const auto ns = parse_index_list(opt.range_n.empty() ? "1..10" : opt.range_n, "n");
        const auto rs = parse_int_list(opt.range_r.empty() ? "-5..5" : opt.range_r, "r");
        const auto xs = parse_rational_list(
            opt.list_x.empty() ? "0,1/2,1/3,-5/7,3" : opt.list_x, "x");
        for (unsigned long n : ns)
            for (long r : rs)
                for (const auto& x : xs) sink.emit(eq7_check(n, x, r));
    }
    if (all || subject == "sun") {
        const auto ks = parse_index_list(opt.range_k.empty() ? "0..6" : opt.range_k, "k");
        const auto ls = parse_index_list(opt.range_l.empty() ? "0..6" : opt.range_l, "l");
        if (opt.list_x.empty() && opt.list_y.empty()) {
            // built-in sample pairs on the plane x + y + z = 1
            const std::vector<std::pair<Rational, Rational>> pairs = {
                {Rational(1), Rational(0)},
                {make_rational(1, 2), make_rational(-1, 4)},
                {make_rational(-2, 3), make_rational(1, 5)},
                {Rational(0), make_rational(1, 2)}};
            for (unsigned long k : ks)
                for (unsigned long l : ls)
                    for (const auto& [x, y] : pairs) sink.emit(sun_check(k, l, x, y));
        } else {
            const auto xs =
                parse_rational_list(opt.list_x.empty() ? "1" : opt.list_x, "x");
            const auto ys =
                parse_rational_list(opt.list_y.empty() ? "0" : opt.list_y, "y");
            for (unsigned long k : ks)
                for (unsigned long l : ls)
                    for (const auto& x : xs)
                        for (const auto& y : ys) sink.emit(sun_check(k, l, x, y));
        }
    }
    if (all || subject == "telescope") {
        const auto ns = parse_index_list(opt.range_n.empty() ? "1..12" : opt.range_n, "n");
        const auto xs = parse_rational_list(
            opt.list_x.empty() ? "0,1/2,1/3,2,-5/7" : opt.list_x, "x");
        for (unsigned long n : ns)
            for (const auto& x : xs) sink.emit(telescope_check(n, x));
    }
}

int cmd_verify(const VerifyOptions& opt) {
    static const std::vector<std::string> subjects = {
        "thm1", "thm1-sun", "eq1", "eq1-bridge", "eq5",
        "eq6",  "eq7",      "sun", "telescope",  "all"};
    bool known = false;
    for (const auto& s : subjects) known = known || s == opt.subject;
    if (!known)
        throw std::invalid_argument("unknown identity \"" + opt.subject +
                                    "\"; expected one of thm1, thm1-sun, eq1, "
                                    "eq1-bridge, eq5, eq6, eq7, sun, telescope, all");
    ReportSink sink(opt.json);
    run_verify(opt, opt.subject, sink);
    sink.finish();
    return sink.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// value and sum commands

int cmd_bpoly(const std::string& arg, const std::string& at) {
    const unsigned long n = to_index(parse_integer(arg), "degree");
    if (at.empty()) {
        const auto poly = bernoulli_poly(n);
        std::string line;
        for (size_t j = 0; j < poly.coeffs.size(); ++j) {
            if (j > 0) line += " ";
            line += to_string(poly.coeffs[j]);
        }
        std::cout << line << "\n";
    } else {
        std::cout << to_string(bernoulli_poly_eval(n, parse_rational(at))) << "\n";
    }
    return 0;
}

int cmd_faulhaber(const std::string& p_arg, const std::string& n_arg,
                  const std::string& method) {
    const unsigned long p = to_index(parse_integer(p_arg), "p");
    const unsigned long n = to_index(parse_integer(n_arg), "n");
    if (method == "closed") {
        std::cout << to_string(faulhaber_closed(p, n)) << "\n";
    } else if (method == "naive") {
        std::cout << to_string(faulhaber_naive(p, n)) << "\n";
    } else if (method == "both") {
        const Integer naive = faulhaber_naive(p, n);
        const Integer closed = faulhaber_closed(p, n);
        std::cout << to_string(naive) << "\n" << to_string(closed) << "\n";
        if (naive != closed) {
            std::cerr << "mismatch: naive=" << to_string(naive)
                      << " closed=" << to_string(closed) << "\n";
            return 1;
        }
    } else {
        throw std::invalid_argument("faulhaber method must be naive, closed or both");
    }
    return 0;
}

int cmd_twosided(const std::string& m_arg, const std::string& n_arg,
                 const std::string& method) {
    const unsigned long m = to_index(parse_integer(m_arg), "m");
    const unsigned long n = to_index(parse_integer(n_arg), "n");
    if (method == "both") {
        const Integer naive = twosided_naive(m, n);
        const Integer closed = twosided_closed(m, n);
        std::cout << to_string(naive) << "\n" << to_string(closed) << "\n";
        if (naive != closed) {
            std::cerr << "mismatch: naive=" << to_string(naive)
                      << " closed=" << to_string(closed) << "\n";
            return 1;
        }
        return 0;
    }
    const auto parsed = method_from_name(method);
    if (!parsed)
        throw std::invalid_argument(
            "twosided method must be naive, symmetric, closed, zeta or both");
    std::cout << to_string(twosided_by_method(*parsed, m, n)) << "\n";
    return 0;
}

int cmd_bench(long m_arg, const std::string& n_list, const std::string& methods_arg) {
    if (m_arg < 1) throw std::invalid_argument("bench: m must be >= 1");
    std::vector<unsigned long> ns;
    for (unsigned long n : parse_index_list(n_list, "n")) {
        if (n == 0) throw std::invalid_argument("bench: n must be >= 1");
        ns.push_back(n);
    }
    std::vector<SumMethod> methods;
    for (const auto& name : split_commas(methods_arg)) {
        const auto method = method_from_name(name);
        if (!method)
            throw std::invalid_argument("bench: unknown method \"" + name + "\"");
        methods.push_back(*method);
    }
    if (methods.empty()) throw std::invalid_argument("bench: no methods given");

    const auto records =
        bench_twosided(static_cast<unsigned long>(m_arg), ns, methods);
    std::cout << bench_csv_header() << "\n";
    for (const auto& record : records) std::cout << to_csv(record) << "\n";

    // digests must agree across methods for every n
    for (size_t i = 0; i < records.size(); i += methods.size()) {
        for (size_t j = 1; j < methods.size(); ++j) {
            if (records[i + j].digest != records[i].digest) {
                std::cerr << "digest mismatch at n=" << records[i].query.n << ": "
                          << method_name(records[i].method) << "="
                          << records[i].digest << " "
                          << method_name(records[i + j].method) << "="
                          << records[i + j].digest << "\n";
                return 1;
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernoulli/Euler numbers, identity verification, and "
                 "two-sided power sums"};
    app.require_subcommand(1);

    std::string value_arg, at_arg, second_arg, method;

    auto* c_bernoulli = app.add_subcommand("bernoulli", "print B_k");
    c_bernoulli->add_option("k", value_arg, "index")->required();

    auto* c_bpoly = app.add_subcommand("bpoly", "Bernoulli polynomial B_n(x)");
    c_bpoly->add_option("n", value_arg, "degree")->required();
    c_bpoly->add_option("--at", at_arg, "evaluate at a rational point p/q");

    auto* c_euler = app.add_subcommand("euler", "print E_n (0 for odd n)");
    c_euler->add_option("n", value_arg, "index")->required();

    auto* c_zeta = app.add_subcommand("zeta", "print zeta(s) for s <= 0");
    c_zeta->add_option("s", value_arg, "argument")->required();

    VerifyOptions verify;
    auto* c_verify = app.add_subcommand(
        "verify", "evaluate both sides of an identity over a parameter grid");
    c_verify->add_option("identity", verify.subject,
                         "thm1, thm1-sun, eq1, eq1-bridge, eq5, eq6, eq7, sun, "
                         "telescope, or all")
        ->required();
    c_verify->add_option("--N", verify.range_N, "integer range a..b or comma list");
    c_verify->add_option("--m", verify.range_m, "integer range a..b or comma list");
    c_verify->add_option("--n", verify.range_n, "integer range a..b or comma list");
    c_verify->add_option("--r", verify.range_r, "integer range a..b or comma list");
    c_verify->add_option("--k", verify.range_k, "integer range a..b or comma list");
    c_verify->add_option("--l", verify.range_l, "integer range a..b or comma list");
    c_verify->add_option("--w", verify.list_w, "comma list of rationals p/q");
    c_verify->add_option("--x", verify.list_x, "comma list of rationals p/q");
    c_verify->add_option("--y", verify.list_y, "comma list of rationals p/q");
    c_verify->add_option("--max-m", verify.max_m,
                         "cap the default m upper bounds (grids given "
                         "explicitly are not affected)");
    c_verify->add_flag("--json", verify.json, "one JSON object per check");

    auto* c_faulhaber =
        app.add_subcommand("faulhaber", "sum of k^p for k = 1..n");
    c_faulhaber->add_option("p", value_arg, "exponent")->required();
    c_faulhaber->add_option("n", second_arg, "upper limit")->required();
    c_faulhaber->add_option("--method", method, "naive, closed or both")
        ->default_val("closed");

    auto* c_twosided = app.add_subcommand(
        "twosided", "sum of k^m (n-k)^m for k = 1..n-1");
    c_twosided->add_option("m", value_arg, "exponent")->required();
    c_twosided->add_option("n", second_arg, "upper argument")->required();
    c_twosided->add_option("--method", method,
                           "naive, symmetric, closed, zeta or both")
        ->default_val("closed");

    long bench_m = 0;
    std::string bench_ns, bench_methods;
    auto* c_bench = app.add_subcommand(
        "bench", "time the two-sided sum methods and emit CSV");
    c_bench->add_option("--m", bench_m, "exponent")->required();
    c_bench->add_option("--n", bench_ns, "comma list of upper arguments")->required();
    c_bench->add_option("--methods", bench_methods,
                        "comma list: naive, symmetric, closed, zeta")
        ->default_val("naive,closed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_bernoulli->parsed()) {
            std::cout << to_string(bernoulli_number(
                             to_index(parse_integer(value_arg), "index")))
                      << "\n";
            return 0;
        }
        if (c_bpoly->parsed()) return cmd_bpoly(value_arg, at_arg);
        if (c_euler->parsed()) {
            std::cout << to_string(euler_number(
                             to_index(parse_integer(value_arg), "index")))
                      << "\n";
            return 0;
        }
        if (c_zeta->parsed()) {
            std::cout << to_string(zeta_nonpositive(parse_integer(value_arg))) << "\n";
            return 0;
        }
        if (c_verify->parsed()) return cmd_verify(verify);
        if (c_faulhaber->parsed()) return cmd_faulhaber(value_arg, second_arg, method);
        if (c_twosided->parsed()) return cmd_twosided(value_arg, second_arg, method);
        if (c_bench->parsed()) return cmd_bench(bench_m, bench_ns, bench_methods);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
