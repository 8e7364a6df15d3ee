#ifndef BERNSUM_POWERSUM_HPP
#define BERNSUM_POWERSUM_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernsum/exactq.hpp"

namespace bernsum {

// Classical and two-sided power sums: O(n) reference loops and the O(m)
// closed forms, plus a small benchmark harness that cross-checks them.

struct PowerSumQuery {
    unsigned long m = 0;  // exponent, >= 1
    unsigned long n = 0;  // upper argument, >= 1
};

enum class SumMethod { Naive, NaiveSymmetric, Closed, ClosedZeta };

std::string_view method_name(SumMethod method);
std::optional<SumMethod> method_from_name(std::string_view name);

struct BenchRecord {
    SumMethod method;
    PowerSumQuery query;
    std::chrono::nanoseconds elapsed;
    std::uint64_t digest;  // result mod 2^61 - 1
};

/// sum_{k=1}^{n} k^p by direct summation (inclusive of n).
Integer faulhaber_naive(unsigned long p, unsigned long n);

/// Same value through Bernoulli numbers:
/// (1/(p+1)) sum_{j=0}^{p} (-1)^j C(p+1,j) B_j n^{p+1-j}.
/// The (-1)^j absorbs the B_1 = -1/2 convention so the sum includes k = n.
/// Throws std::logic_error if the rational result is not an integer.
Integer faulhaber_closed(unsigned long p, unsigned long n);

/// sum_{k=1}^{n-1} k^m (n-k)^m by direct summation; 0 when n = 1.
Integer twosided_naive(unsigned long m, unsigned long n);

/// Same sum folded around its midpoint (the addends are symmetric in k).
Integer twosided_naive_symmetric(unsigned long m, unsigned long n);

/// Closed form: n^{2m+1}/((2m+1)C(2m,m))
///   + 2(-1)^m sum_{k=0}^{m} C(m,k) B_{m+k+1}/(m+k+1) n^{m-k}.
/// Also valid at n = 1, where it must reduce to 0.
/// Throws std::logic_error if the rational result is not an integer.
Integer twosided_closed(unsigned long m, unsigned long n);

/// Same closed form with the Bernoulli ratio written as a zeta value:
/// n^{2m+1}/((2m+1)C(2m,m)) - 2(-1)^m sum_k C(m,k) zeta(-m-k) n^{m-k}.
Integer twosided_closed_zeta(unsigned long m, unsigned long n);

Integer twosided_by_method(SumMethod method, unsigned long m, unsigned long n);

/// value mod 2^61 - 1; cheap cross-run comparison without storing the
/// full integers.
std::uint64_t result_digest(const Integer& value);

/// One record per (n, method), n outer. Each timing is the median of
/// three runs of the method; runs are sequential.
std::vector<BenchRecord> bench_twosided(unsigned long m,
                                        const std::vector<unsigned long>& ns,
                                        const std::vector<SumMethod>& methods);

std::string bench_csv_header();
std::string to_csv(const BenchRecord& record);

}  // namespace bernsum

#endif
