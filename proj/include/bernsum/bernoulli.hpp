#ifndef BERNSUM_BERNOULLI_HPP
#define BERNSUM_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "bernsum/exactq.hpp"

namespace bernsum {

// Convention: Bernoulli numbers come from the generating function
// z/(e^z - 1), so B_1 = -1/2 and B_n(0) = B_n. Everything downstream
// (polynomials, zeta values, the identity checks) assumes this convention.

/// Memoized table of B_0, B_1, ... computed from the defining recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0. Thread-safe; a reader never sees a
/// partially computed entry.
class BernoulliCache {
public:
    Rational value(unsigned long k);

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

/// Memoized table of the even-index Euler numbers E_0, E_2, E_4, ...
/// from E_0 = 1 and sum_{j=0}^{k} C(2k, 2j) E_{2j} = 0 for k >= 1.
/// Thread-safe like BernoulliCache.
class EulerCache {
public:
    /// E_n for even n; odd n returns 0.
    Integer value(unsigned long n);

private:
    std::mutex mu_;
    std::vector<Integer> even_values_;  // index j holds E_{2j}
};

/// Dense coefficients of a polynomial in the monomial basis;
/// coeffs[j] multiplies x^j. Bernoulli polynomials are monic, so the
/// last entry is exactly 1.
struct PolyCoeffs {
    std::vector<Rational> coeffs;

    unsigned long degree() const { return coeffs.size() - 1; }

    /// Horner evaluation.
    Rational eval(const Rational& x) const;
};

/// B_k, memoized in a shared cache.
Rational bernoulli_number(unsigned long k);

/// Coefficients of B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}.
PolyCoeffs bernoulli_poly(unsigned long n);

/// B_n(x), exact.
Rational bernoulli_poly_eval(unsigned long n, const Rational& x);

/// E_n, memoized; odd n returns 0.
Integer euler_number(unsigned long n);

/// zeta(s) for s <= 0: equals -B_{1-s}/(1-s) for s <= -1. zeta(0) is
/// special-cased to -1/2 (the relation as written would give +1/2 under
/// the B_1 = -1/2 convention). s > 0 throws std::invalid_argument.
Rational zeta_nonpositive(const Integer& s);

}  // namespace bernsum

#endif
