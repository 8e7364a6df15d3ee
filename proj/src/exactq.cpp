#include "bernsum/exactq.hpp"

#include <cctype>
#include <stdexcept>

namespace bernsum {

Integer binomial(const Integer& n, const Integer& k) {
    if (sgn(n) < 0)
        throw std::invalid_argument("binomial: n must be nonnegative, got " +
                                    to_string(n));
    if (sgn(k) < 0 || k > n) return 0;
    // mpz_bin_ui needs the lower index as a machine word; use the smaller
    // of k and n-k, which fits whenever the result is computable at all.
    Integer lower = k;
    if (k * 2 > n) lower = n - k;
    if (!lower.fits_ulong_p())
        throw std::overflow_error("binomial: arguments too large");
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), lower.get_ui());
    return result;
}

int sign_of(const Integer& v) noexcept { return sgn(v); }

Rational rat_pow(const Rational& x, unsigned long e) {
    if (e == 0) return 1;  // includes 0^0
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
    // powers of a canonical fraction stay coprime with positive denominator
    return Rational(std::move(num), std::move(den));
}

Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_signed_digits(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("not a valid integer: \"" + std::string(whole) + "\"");
    return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return parse_signed_digits(text, text); }

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_signed_digits(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        throw std::invalid_argument("not a valid rational: \"" + std::string(text) + "\"");
    Integer den(std::string(den_part), 10);
    if (sgn(den) == 0)
        throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    return make_rational(std::move(num), std::move(den));
}

}  // namespace bernsum
