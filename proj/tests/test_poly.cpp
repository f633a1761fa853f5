// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmcount/errors.hpp"
#include "cmcount/poly.hpp"
#include "oracles.hpp"

using namespace cmcount;

TEST_CASE("rational polynomial arithmetic")
{
    const QPoly f = QPoly::from_integers({-1, 0, 1}); // x^2 - 1
    const QPoly g = QPoly::x_minus(1);
    const auto [q, r] = f.divmod(g);
    CHECK(q == QPoly::from_integers({1, 1}));
    CHECK(r.is_zero());
    CHECK(f.derivative() == QPoly::from_integers({0, 2}));
    CHECK(f.eval(3) == 8);
    CHECK(f.to_string() == "x^2 - 1");
    CHECK(QPoly({mpq_class(1, 2), mpq_class(3, 4)}).denominator() == 4);
    CHECK_THROWS_AS(f.divmod(QPoly()), Error);
}

TEST_CASE("inverse modulo a polynomial")
{
    const QPoly m = QPoly::from_integers({3375, 1}) * QPoly::from_integers({-8000, 1});
    const QPoly a = QPoly::from_integers({1, 2});
    const QPoly inv = inverse_mod(a, m);
    CHECK((a * inv) % m == QPoly::constant(1));
    CHECK_THROWS_AS(inverse_mod(QPoly::from_integers({-8000, 1}), m), Error);
}

TEST_CASE("evaluation mod p")
{
    const QPoly f({mpq_class(1, 3), 1});
    CHECK(f.eval_mod(2, 7) == (5 + 2) % 7);
    try {
        f.eval_mod(1, 3);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.reason() == Reason::BadReduction);
    }
}

TEST_CASE("roots mod p agree with exhaustive search")
{
    const std::vector<std::vector<long>> polys = {
        {-1, 0, 1}, {6, -5, 1}, {1, 1, 1}, {-2, 0, 0, 1}, {12771880859375, -5151296875, 3491750, 1}};
    for (const auto &coeffs : polys) {
        std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
        const QPoly q = QPoly::from_integers(c);
        for (long p = 3; p < 400; p += 2) {
            if (!oracle::is_prime(static_cast<oracle::u64>(p)))
                continue;
            const FpPoly f = FpPoly::from_qpoly(q, p);
            std::vector<mpz_class> expected;
            for (long x = 0; x < p; ++x)
                if (f.eval(x) == 0)
                    expected.push_back(x);
            REQUIRE(roots_mod_p(f) == expected);
        }
    }
}

TEST_CASE("F_p arithmetic")
{
    const FpPoly x = FpPoly::x(11);
    const FpPoly m(11, {1, 0, 1});
    // Frobenius acts as conjugation on F_11[x]/(x^2 + 1)
    CHECK(x.powmod(11, m).coeffs() == std::vector<mpz_class>{0, 10});
    CHECK(((x * x + FpPoly(11, {1})) % m).is_zero());
    CHECK(gcd(FpPoly(11, {10, 0, 1}), FpPoly(11, {10, 1})).monic().coeffs() == std::vector<mpz_class>{10, 1});
}
