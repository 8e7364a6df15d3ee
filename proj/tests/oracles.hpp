#ifndef BERNSUM_TESTS_ORACLES_HPP
#define BERNSUM_TESTS_ORACLES_HPP

// Test-only reference implementations, kept independent of the library
// code paths they check: binomials come from the Pascal triangle, the
// Bernoulli/Euler tables from their defining recurrences written out
// against raw GMP types, and polynomial evaluation from the plain
// coefficient expansion.

#include <gmpxx.h>

#include <vector>

namespace oracle {

inline mpz_class pascal_binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    std::vector<mpz_class> row(n + 1);
    row[0] = 1;
    for (unsigned long i = 1; i <= n; ++i)
        for (unsigned long j = i; j > 0; --j) row[j] += row[j - 1];
    return row[k];
}

// B_0..B_max from sum_{j=0}^{n} C(n+1,j) B_j = 0, B_0 = 1.
inline std::vector<mpq_class> bernoulli_table(unsigned long max) {
    std::vector<mpq_class> table(max + 1);
    table[0] = 1;
    for (unsigned long n = 1; n <= max; ++n) {
        mpq_class acc = 0;
        for (unsigned long j = 0; j < n; ++j)
            acc += mpq_class(pascal_binomial(n + 1, j)) * table[j];
        mpq_class value = -acc / mpq_class(n + 1);
        value.canonicalize();
        table[n] = value;
    }
    return table;
}

// E_0, E_2, ..., E_{2*max} from E_0 = 1, sum_{j=0}^{k} C(2k,2j) E_{2j} = 0.
inline std::vector<mpz_class> euler_even_table(unsigned long max) {
    std::vector<mpz_class> table(max + 1);
    table[0] = 1;
    for (unsigned long k = 1; k <= max; ++k) {
        mpz_class acc = 0;
        for (unsigned long j = 0; j < k; ++j)
            acc += pascal_binomial(2 * k, static_cast<long>(2 * j)) * table[j];
        table[k] = -acc;
    }
    return table;
}

// B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}, expanded term by term.
inline mpq_class bernoulli_poly_at(unsigned long n, const mpq_class& x) {
    const auto bern = bernoulli_table(n);
    mpq_class acc = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpq_class power = 1;
        for (unsigned long i = 0; i < n - k; ++i) power *= x;
        acc += mpq_class(pascal_binomial(n, static_cast<long>(k))) * bern[k] * power;
    }
    acc.canonicalize();
    return acc;
}

}  // namespace oracle

#endif
