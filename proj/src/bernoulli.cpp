#include "bernsum/bernoulli.hpp"

#include <stdexcept>

namespace bernsum {

Rational BernoulliCache::value(unsigned long k) {
    std::scoped_lock lock(mu_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= k) {
        // B_n = -1/(n+1) sum_{j=0}^{n-1} C(n+1, j) B_j
        const unsigned long n = values_.size();
        Rational acc = 0;
        for (unsigned long j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * values_[j];
        values_.push_back(-acc / Rational(n + 1));
    }
    return values_[k];
}

Integer EulerCache::value(unsigned long n) {
    if (n % 2 == 1) return 0;
    const unsigned long index = n / 2;
    std::scoped_lock lock(mu_);
    if (even_values_.empty()) even_values_.emplace_back(1);
    while (even_values_.size() <= index) {
        // E_{2k} = -sum_{j=0}^{k-1} C(2k, 2j) E_{2j}
        const unsigned long k = even_values_.size();
        Integer acc = 0;
        for (unsigned long j = 0; j < k; ++j)
            acc += binomial(2 * k, 2 * j) * even_values_[j];
        even_values_.push_back(-acc);
    }
    return even_values_[index];
}

namespace {
BernoulliCache& shared_bernoulli() {
    static BernoulliCache cache;
    return cache;
}
EulerCache& shared_euler() {
    static EulerCache cache;
    return cache;
}
}  // namespace

Rational bernoulli_number(unsigned long k) { return shared_bernoulli().value(k); }

PolyCoeffs bernoulli_poly(unsigned long n) {
    // coefficient of x^j in B_n(x) is C(n, j) B_{n-j}
    PolyCoeffs poly;
    poly.coeffs.resize(n + 1);
    for (unsigned long j = 0; j <= n; ++j)
        poly.coeffs[j] = Rational(binomial(n, j)) * bernoulli_number(n - j);
    return poly;
}

Rational PolyCoeffs::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational bernoulli_poly_eval(unsigned long n, const Rational& x) {
    return bernoulli_poly(n).eval(x);
}

Integer euler_number(unsigned long n) { return shared_euler().value(n); }

Rational zeta_nonpositive(const Integer& s) {
    if (sgn(s) > 0)
        throw std::invalid_argument("zeta_nonpositive: argument must be <= 0, got " +
                                    to_string(s));
    if (sgn(s) == 0) return make_rational(-1, 2);
    const Integer order = 1 - s;
    if (!order.fits_ulong_p())
        throw std::overflow_error("zeta_nonpositive: argument too negative");
    return -bernoulli_number(order.get_ui()) / Rational(order);
}

}  // namespace bernsum
