#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <vector>

#include "bernsum/bernoulli.hpp"
#include "bernsum/identities.hpp"
#include "oracles.hpp"

using namespace bernsum;

namespace {

const std::vector<Integer> kSweepN = {-6, -5, -4, -3, -2, -1, 0, 1,
                                      2,  3,  4,  5,  6,  7,  8};

std::vector<Rational> sweep_w() {
    return {Rational(0),           Rational(1), Rational(-1),
            Rational(2),           Rational(-2), Rational(10),
            make_rational(5, 2),   make_rational(-7, 3)};
}

}  // namespace

TEST_CASE("thm1_lhs anchors") {
    CHECK(thm1_lhs(1, 1, Rational(1)) == make_rational(1, 12));
    // at w = 0 only the k = m term survives and B_{2m+1}(1/2) = 0
    for (unsigned long m = 1; m <= 6; ++m) CHECK(thm1_lhs(1, m, Rational(0)) == 0);
}

TEST_CASE("thm1_rhs anchors") {
    CHECK(thm1_rhs(1, 1, Rational(1)) == make_rational(1, 12));
    CHECK(thm1_rhs(1, 1, Rational(0)) == 0);
    // N = 1 kills the bracket sum; what is left simplifies to
    // (-1)^{m+1} w^{2m+1} / (2(2m+1)C(2m,m))
    for (unsigned long m = 1; m <= 4; ++m) {
        for (const Rational& w : {Rational(2), make_rational(-3, 2)}) {
            Rational expected = rat_pow(w, 2 * m + 1) /
                                (Rational(2 * (2 * m + 1)) * Rational(binomial(2 * m, m)));
            if (m % 2 == 0) expected = -expected;
            CHECK(thm1_rhs(1, m, w) == expected);
        }
    }
}

TEST_CASE("check_thm1 spot cases") {
    auto r = check_thm1(5, 3, make_rational(7, 2));
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);
    CHECK(r.discrepancy == 0);

    // sign(N-1) = -1 branch
    r = check_thm1(-4, 2, make_rational(-2, 3));
    CHECK(r.pass);

    r = check_thm1(1, 1, Rational(0));
    CHECK(r.pass);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);

    r = check_thm1(2, 2, Rational(2));
    CHECK(r.pass);
}

TEST_CASE("thm1 rejects m = 0") {
    CHECK_THROWS_AS(check_thm1(1, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(thm1_lhs(1, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(thm1_rhs(1, 0, Rational(1)), std::invalid_argument);
}

TEST_CASE("theorem sweep: exact equality on the full grid") {
    for (const Integer& N : kSweepN)
        for (unsigned long m = 1; m <= 10; ++m)
            for (const Rational& w : sweep_w()) CHECK(check_thm1(N, m, w).pass);
}

TEST_CASE("eq1 anchors and sweep") {
    auto r = eq1_check(0);
    CHECK(r.pass);
    CHECK(r.lhs == make_rational(-1, 2));
    CHECK(r.rhs == make_rational(-1, 2));

    r = eq1_check(1);
    CHECK(r.pass);
    CHECK(r.lhs == make_rational(1, 6));  // recurrence-oracle value

    for (unsigned long m = 0; m <= 20; ++m) CHECK(eq1_check(m).pass);
}

TEST_CASE("eq1 is thm1 at N = 2, w = 2") {
    CHECK(eq1_equals_thm1_at(1).pass);
    CHECK(eq1_equals_thm1_at(3).pass);
    CHECK(eq1_equals_thm1_at(10).pass);
    for (unsigned long m = 1; m <= 20; ++m) CHECK(eq1_equals_thm1_at(m).pass);
}

TEST_CASE("eq5 anchors and sweep") {
    auto r = eq5_check(1, Rational(1));
    CHECK(r.pass);
    CHECK(r.lhs == make_rational(1, 12));
    CHECK(r.rhs == make_rational(1, 12));

    for (unsigned long m = 1; m <= 6; ++m) {
        r = eq5_check(m, Rational(0));
        CHECK(r.pass);
        CHECK(r.lhs == 0);
        CHECK(r.rhs == 0);
    }

    CHECK(eq5_check(4, make_rational(-7, 3)).pass);
}

TEST_CASE("eq5 coincides with thm1 at N = 1") {
    for (unsigned long m = 1; m <= 10; ++m) {
        for (const Rational& w : sweep_w()) {
            auto five = eq5_check(m, w);
            CHECK(five.pass);
            CHECK(five.lhs == thm1_lhs(1, m, w));
            CHECK(five.rhs == thm1_rhs(1, m, w));
        }
    }
}

TEST_CASE("eq6 anchors and sweep") {
    auto r = eq6_check(0);
    CHECK(r.pass);
    CHECK(r.lhs == make_rational(1, 2));
    CHECK(r.rhs == make_rational(1, 2));

    r = eq6_check(1);
    CHECK(r.pass);
    CHECK(r.lhs == make_rational(1, 12));  // oracle value with E_0 = 1, E_2 = -1

    for (unsigned long m = 0; m <= 12; ++m) CHECK(eq6_check(m).pass);
}

TEST_CASE("eq7 anchors") {
    // r = 0: both sides empty
    auto r = eq7_check(5, make_rational(1, 3), 0);
    CHECK(r.pass);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);

    // r = 1 reduces to the telescoping identity
    for (unsigned long n = 1; n <= 8; ++n) {
        auto t = eq7_check(n, make_rational(1, 3), 1);
        CHECK(t.pass);
        CHECK(t.rhs == Rational(n) * rat_pow(make_rational(1, 3), n - 1));
    }

    // negative shift, checked against the direct expansion oracle
    auto neg = eq7_check(4, make_rational(1, 3), -3);
    CHECK(neg.pass);
    CHECK(neg.lhs == oracle::bernoulli_poly_at(4, make_rational(1, 3) - 3) -
                         oracle::bernoulli_poly_at(4, make_rational(1, 3)));
}

TEST_CASE("eq7 sweep over signed shifts") {
    const std::vector<Rational> xs = {Rational(0), make_rational(1, 2),
                                      make_rational(1, 3), make_rational(-5, 7),
                                      Rational(3)};
    for (unsigned long n = 1; n <= 10; ++n)
        for (long r = -5; r <= 5; ++r)
            for (const auto& x : xs) CHECK(eq7_check(n, x, r).pass);
}

TEST_CASE("sun anchors") {
    auto r = sun_check(0, 0, Rational(1), Rational(0));
    CHECK(r.pass);
    CHECK(r.lhs == -1);
    CHECK(r.rhs == -1);

    // x = 0 zeroes both sides when k, l >= 1
    for (unsigned long k = 1; k <= 3; ++k) {
        for (unsigned long l = 1; l <= 3; ++l) {
            auto z = sun_check(k, l, Rational(0), make_rational(1, 2));
            CHECK(z.pass);
            CHECK(z.lhs == 0);
            CHECK(z.rhs == 0);
        }
    }

    CHECK(sun_check(2, 3, make_rational(1, 2), make_rational(-1, 4)).pass);
}

TEST_CASE("sun sweep") {
    const std::vector<std::pair<Rational, Rational>> xy = {
        {Rational(1), Rational(0)},
        {make_rational(1, 2), make_rational(-1, 4)},
        {make_rational(-2, 3), make_rational(1, 5)},
        {Rational(0), make_rational(1, 2)}};
    for (unsigned long k = 0; k <= 6; ++k)
        for (unsigned long l = 0; l <= 6; ++l)
            for (const auto& [x, y] : xy) CHECK(sun_check(k, l, x, y).pass);
}

TEST_CASE("proof path through sun reproduces the theorem") {
    CHECK(thm1_from_sun(3, 2, make_rational(1, 2)).pass);
    CHECK(thm1_from_sun(1, 1, Rational(1)).pass);
    CHECK(thm1_from_sun(-2, 3, Rational(5)).pass);
}

TEST_CASE("proof path agrees with the direct check on the full grid") {
    for (const Integer& N : kSweepN) {
        for (unsigned long m = 1; m <= 10; ++m) {
            for (const Rational& w : sweep_w()) {
                auto direct = check_thm1(N, m, w);
                auto via_sun = thm1_from_sun(N, m, w);
                CHECK(direct.pass);
                CHECK(via_sun.pass);
                CHECK(via_sun.rhs == direct.rhs);
                CHECK(via_sun.lhs == direct.lhs);
            }
        }
    }
}

TEST_CASE("rhs odd-part structure in w") {
    for (const Integer& N : kSweepN) {
        for (unsigned long m = 1; m <= 10; ++m) {
            for (const Rational& w : sweep_w()) {
                Rational expected = Rational(2) * rat_pow(2 * w, 2 * m + 1) /
                                    (rat_pow(Rational(2), 2 * m + 2) *
                                     Rational(2 * m + 1) * Rational(binomial(2 * m, m)));
                if (m % 2 == 0) expected = -expected;
                CHECK(thm1_rhs(N, m, w) - thm1_rhs(N, m, -w) == expected);
            }
        }
    }
}

TEST_CASE("telescope check") {
    CHECK(telescope_check(1, Rational(0)).pass);
    for (unsigned long n = 1; n <= 12; ++n)
        CHECK(telescope_check(n, make_rational(-5, 7)).pass);
}

TEST_CASE("report invariants and serialization") {
    auto r = check_thm1(5, 3, make_rational(7, 2));
    CHECK(r.pass == (r.discrepancy == 0));
    CHECK(r.discrepancy == r.lhs - r.rhs);

    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["identity"] == "thm1");
    CHECK(j["params"]["N"] == "5");
    CHECK(j["params"]["m"] == "3");
    CHECK(j["params"]["w"] == "7/2");
    CHECK(j["pass"] == true);
    CHECK(j["discrepancy"] == "0");
    CHECK(parse_rational(j["lhs"].get<std::string>()) == r.lhs);
    CHECK(parse_rational(j["rhs"].get<std::string>()) == r.rhs);

    auto text = to_text(r);
    CHECK(text.find("thm1") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
}
