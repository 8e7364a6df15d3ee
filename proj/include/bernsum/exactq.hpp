#ifndef BERNSUM_EXACTQ_HPP
#define BERNSUM_EXACTQ_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bernsum {

/// Arbitrary-precision signed integer. GMP supplies the arithmetic.
using Integer = mpz_class;

/// Arbitrary-precision rational. Every Rational handled by this library is
/// canonical: reduced, denominator >= 1, zero stored as 0/1. GMP keeps
/// arithmetic results canonical as long as the operands are; use
/// make_rational to build one from an arbitrary numerator/denominator pair.
using Rational = mpq_class;

/// C(n, k). Requires n >= 0; returns 0 outside 0 <= k <= n.
Integer binomial(const Integer& n, const Integer& k);

/// -1, 0 or +1.
int sign_of(const Integer& v) noexcept;

/// x^e with the 0^0 == 1 convention.
Rational rat_pow(const Rational& x, unsigned long e);

/// Canonical rational num/den. Throws std::invalid_argument when den == 0.
Rational make_rational(Integer num, Integer den);

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

/// Text form used by the CLI and all serialized output: "p/q" when q > 1,
/// plain "p" when q == 1, with '-' allowed on the numerator only.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Strict parsers for the text form above. Anything else (signs on the
/// denominator, whitespace, empty fields, q == 0) throws
/// std::invalid_argument. Unreduced input like "4/6" is accepted and
/// canonicalized.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace bernsum

#endif
