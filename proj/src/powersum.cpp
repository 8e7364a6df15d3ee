#include "bernsum/powersum.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "bernsum/bernoulli.hpp"

namespace bernsum {

namespace {

constexpr std::uint64_t kDigestModulus = (std::uint64_t(1) << 61) - 1;

Integer int_pow(unsigned long base, unsigned long e) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, e);
    return result;
}

void require_query(unsigned long m, unsigned long n) {
    if (m == 0) throw std::invalid_argument("twosided: m must be >= 1");
    if (n == 0) throw std::invalid_argument("twosided: n must be >= 1");
}

Integer to_exact_integer(const Rational& value, const char* what) {
    if (!is_integer(value))
        throw std::logic_error(std::string(what) +
                               ": closed form did not reduce to an integer: " +
                               to_string(value));
    return value.get_num();
}

}  // namespace

Integer faulhaber_naive(unsigned long p, unsigned long n) {
    Integer acc = 0;
    for (unsigned long k = 1; k <= n; ++k) acc += int_pow(k, p);
    return acc;
}

Integer faulhaber_closed(unsigned long p, unsigned long n) {
    Rational acc = 0;
    for (unsigned long j = 0; j <= p; ++j) {
        Rational term = Rational(binomial(p + 1, j)) * bernoulli_number(j) *
                        Rational(int_pow(n, p + 1 - j));
        acc += (j % 2 == 0) ? term : -term;
    }
    acc /= Rational(p + 1);
    return to_exact_integer(acc, "faulhaber_closed");
}

Integer twosided_naive(unsigned long m, unsigned long n) {
    require_query(m, n);
    Integer acc = 0;
    for (unsigned long k = 1; k < n; ++k) acc += int_pow(k, m) * int_pow(n - k, m);
    return acc;
}

Integer twosided_naive_symmetric(unsigned long m, unsigned long n) {
    require_query(m, n);
    Integer acc = 0;
    for (unsigned long k = 1; 2 * k < n; ++k) acc += int_pow(k, m) * int_pow(n - k, m);
    acc *= 2;
    if (n % 2 == 0 && n >= 2) acc += int_pow(n / 2, 2 * m);
    return acc;
}

Integer twosided_closed(unsigned long m, unsigned long n) {
    require_query(m, n);
    Rational acc = Rational(int_pow(n, 2 * m + 1)) /
                   (Rational(2 * m + 1) * Rational(binomial(2 * m, m)));
    Rational tail = 0;
    for (unsigned long k = 0; k <= m; ++k) {
        tail += Rational(binomial(m, k)) * bernoulli_number(m + k + 1) /
                Rational(m + k + 1) * Rational(int_pow(n, m - k));
    }
    tail *= 2;
    if (m % 2 == 1) tail = -tail;  // 2(-1)^m
    acc += tail;
    return to_exact_integer(acc, "twosided_closed");
}

Integer twosided_closed_zeta(unsigned long m, unsigned long n) {
    require_query(m, n);
    Rational acc = Rational(int_pow(n, 2 * m + 1)) /
                   (Rational(2 * m + 1) * Rational(binomial(2 * m, m)));
    Rational tail = 0;
    for (unsigned long k = 0; k <= m; ++k) {
        tail += Rational(binomial(m, k)) *
                zeta_nonpositive(-Integer(m) - Integer(k)) *
                Rational(int_pow(n, m - k));
    }
    tail *= 2;
    if (m % 2 == 1) tail = -tail;  // 2(-1)^m
    acc -= tail;
    return to_exact_integer(acc, "twosided_closed_zeta");
}

std::string_view method_name(SumMethod method) {
    switch (method) {
        case SumMethod::Naive: return "naive";
        case SumMethod::NaiveSymmetric: return "symmetric";
        case SumMethod::Closed: return "closed";
        case SumMethod::ClosedZeta: return "zeta";
    }
    return "?";
}

std::optional<SumMethod> method_from_name(std::string_view name) {
    if (name == "naive") return SumMethod::Naive;
    if (name == "symmetric") return SumMethod::NaiveSymmetric;
    if (name == "closed") return SumMethod::Closed;
    if (name == "zeta") return SumMethod::ClosedZeta;
    return std::nullopt;
}

Integer twosided_by_method(SumMethod method, unsigned long m, unsigned long n) {
    switch (method) {
        case SumMethod::Naive: return twosided_naive(m, n);
        case SumMethod::NaiveSymmetric: return twosided_naive_symmetric(m, n);
        case SumMethod::Closed: return twosided_closed(m, n);
        case SumMethod::ClosedZeta: return twosided_closed_zeta(m, n);
    }
    throw std::invalid_argument("unknown method");
}

std::uint64_t result_digest(const Integer& value) {
    return mpz_fdiv_ui(value.get_mpz_t(), kDigestModulus);
}

std::vector<BenchRecord> bench_twosided(unsigned long m,
                                        const std::vector<unsigned long>& ns,
                                        const std::vector<SumMethod>& methods) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    records.reserve(ns.size() * methods.size());
    for (unsigned long n : ns) {
        for (SumMethod method : methods) {
            std::array<std::chrono::nanoseconds, 3> runs;
            Integer value;
            for (auto& elapsed : runs) {
                const auto start = clock::now();
                value = twosided_by_method(method, m, n);
                elapsed = clock::now() - start;
            }
            std::sort(runs.begin(), runs.end());
            records.push_back(BenchRecord{method,
                                          PowerSumQuery{m, n},
                                          runs[1],  // median of three
                                          result_digest(value)});
        }
    }
    return records;
}

std::string bench_csv_header() { return "method,m,n,elapsed_ns,digest"; }

std::string to_csv(const BenchRecord& record) {
    std::string line{method_name(record.method)};
    line += "," + std::to_string(record.query.m);
    line += "," + std::to_string(record.query.n);
    line += "," + std::to_string(record.elapsed.count());
    line += "," + std::to_string(record.digest);
    return line;
}

}  // namespace bernsum
