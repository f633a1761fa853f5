// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cmcount/bigfloat.hpp"
#include "cmcount/errors.hpp"

using namespace cmcount;

TEST_CASE("real arithmetic against double")
{
    const long prec = 200;
    const BigReal a(prec, std::string("1.25")), b(prec, 3L);
    CHECK((a * b).to_double() == doctest::Approx(3.75));
    CHECK((b / a).to_double() == doctest::Approx(2.4));
    CHECK(BigReal(prec, 2L).sqrt().to_double() == doctest::Approx(std::sqrt(2.0)));
    CHECK(BigReal::pi(prec).to_double() == doctest::Approx(M_PI));
    CHECK(BigReal(prec, mpq_class(7, 2)).round() == 4);
    CHECK(BigReal(prec, mpq_class(-7, 2)).round() == -4);
    CHECK_THROWS_AS(BigReal(prec, std::string("abc")), Error);
    CHECK_THROWS_AS(a / BigReal(prec, 0L), Error);
}

TEST_CASE("complex arithmetic")
{
    const long prec = 128;
    const BigComplex i(BigReal(prec, 0L), BigReal(prec, 1L));
    const BigComplex m = i * i;
    CHECK(m.re().to_double() == doctest::Approx(-1.0));
    CHECK(m.im().to_double() == doctest::Approx(0.0));
    const BigComplex r = BigComplex::root_of_unity(1, 8, prec).pow(8);
    CHECK((r - BigComplex(BigReal(prec, 1L), BigReal(prec, 0L))).abs().to_double() < 1e-30);
    const BigComplex s = BigComplex(BigReal(prec, -4L), BigReal(prec, 0L)).sqrt();
    CHECK(s.im().to_double() == doctest::Approx(2.0));
    const BigComplex e = BigComplex(BigReal(prec, 0L), BigReal::pi(prec)).exp();
    CHECK(e.re().to_double() == doctest::Approx(-1.0));
}

TEST_CASE("values survive a precision change")
{
    const BigReal third = BigReal(300, 1L) / BigReal(300, 3L);
    CHECK(third.with_prec(64).prec() == 64);
    CHECK(third.to_string(20).substr(0, 12) == "0.3333333333");
}
