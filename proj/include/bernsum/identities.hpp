#ifndef BERNSUM_IDENTITIES_HPP
#define BERNSUM_IDENTITIES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bernsum/exactq.hpp"

namespace bernsum {

// Exact two-sided evaluation of a family of Bernoulli-polynomial
// identities. Every check computes both sides over the rationals and
// passes only on exact equality; a failure carries the exact discrepancy
// as a reproducible counterexample. No tolerances anywhere.

enum class IdentityId { Eq1, Thm1, Eq5, Eq6, Eq7, Sun, Telescope };

std::string_view identity_name(IdentityId id);

struct IdentityReport {
    IdentityId identity;
    std::vector<std::pair<std::string, Rational>> params;
    Rational lhs;
    Rational rhs;
    bool pass;             // pass iff discrepancy == 0
    Rational discrepancy;  // lhs - rhs
};

/// sum_{k=0}^{m} C(m,k) B_{m+k+1}((N-w)/2)/(m+k+1) w^{m-k}. Requires m >= 1.
Rational thm1_lhs(const Integer& N, unsigned long m, const Rational& w);

/// (-1)^{m+1}/2^{2m+1} [ (2w)^{2m+1}/(2(2m+1)C(2m,m))
///                       - sign(N-1) sum_{k=1}^{|N-1|} (w^2 - (|N-1|-2k+1)^2)^m ].
/// The sum is empty when N = 1. Requires m >= 1.
Rational thm1_rhs(const Integer& N, unsigned long m, const Rational& w);

/// Both sides of the main identity; holds for every N, m >= 1, w.
IdentityReport check_thm1(const Integer& N, unsigned long m, const Rational& w);

/// sum_{k=0}^{m} C(m,k) B_{2m-k+1}/(2m-k+1) 2^k
///   == (-1)^m/2 (1 - 2^{2m+1}/((2m+1)C(2m,m))), m >= 0.
/// The gamma ratio of the usual statement is computed exactly as
/// 1/((2m+1)C(2m,m)).
IdentityReport eq1_check(unsigned long m);

/// The identity above is the N = 2, w = 2 instance of the main identity:
/// asserts eq1's LHS == thm1_lhs(2, m, 2) and eq1's RHS == thm1_rhs(2, m, 2).
/// The report carries the first failing pair, or the LHS pair when both hold.
IdentityReport eq1_equals_thm1_at(unsigned long m);

/// N = 1 specialization: sum_{k} C(m,k) B_{m+k+1}((1-w)/2)/(m+k+1) w^{m-k}
///   == (-1)^{m+1}/2 w^{2m+1}/((2m+1)C(2m,m)). Requires m >= 1.
IdentityReport eq5_check(unsigned long m, const Rational& w);

/// The w = N = 1/2 instance, with Euler numbers on the right:
/// (-1)^{m+1} sum_k C(m,k) B_{m+k+1}/(m+k+1) 2^k
///   == 1/(2^{m+2}(2m+1)C(2m,m)) + 2^{-(3m+2)} sum_k (-1)^k C(m,k) E_{2k}.
IdentityReport eq6_check(unsigned long m);

/// Finite-difference formula: B_n(x+r) - B_n(x) equals an explicit power
/// sum for integer shifts r (both signs; r = 0 gives 0 = 0). Requires n >= 1.
IdentityReport eq7_check(unsigned long n, const Rational& x, const Integer& r);

/// Sun's symmetric identity with z = 1 - x - y:
/// (-1)^k sum_j C(k,j) x^{k-j} B_{l+j+1}(y)/(l+j+1)
///   + (-1)^l sum_j C(l,j) x^{l-j} B_{k+j+1}(z)/(k+j+1)
///   == (-x)^{k+l+1}/((k+l+1)C(k+l,k)).
IdentityReport sun_check(unsigned long k, unsigned long l, const Rational& x,
                         const Rational& y);

/// Re-derives the main identity's LHS through Sun's identity at
/// x = w, y = (N-w)/2, z = 1-(N+w)/2, k = l = m, rewriting the z-side
/// Bernoulli values with the finite-difference formula (shift 1-N), and
/// asserts the result equals thm1_rhs(N, m, w). The route never evaluates
/// a Bernoulli polynomial, so it is independent of thm1_lhs.
IdentityReport thm1_from_sun(const Integer& N, unsigned long m, const Rational& w);

/// B_n(x+1) - B_n(x) == n x^{n-1}. Requires n >= 1.
IdentityReport telescope_check(unsigned long n, const Rational& x);

/// One compact JSON object:
/// {"identity": ..., "params": {...}, "lhs": "p/q", "rhs": "p/q",
///  "pass": bool, "discrepancy": "p/q"} with rationals in text form.
std::string to_json(const IdentityReport& report);

/// One human-readable line; same pass/fail decision as the JSON form.
std::string to_text(const IdentityReport& report);

}  // namespace bernsum

#endif
