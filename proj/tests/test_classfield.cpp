// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmcount/classfield.hpp"
#include "cmcount/errors.hpp"
#include "cmcount/modfunc.hpp"
#include "oracles.hpp"

using namespace cmcount;

namespace {

QPoly ints(std::vector<mpz_class> c)
{
    return QPoly::from_integers(c);
}

const std::vector<std::int64_t> kGammaDiscs = {-7,  -8,  -11, -15, -19, -23, -24, -40, -43, -67,
                                               -163, -12, -27, -28, -75, -99, -56, -71, -95, -119};

} // namespace

TEST_CASE("reduced forms agree with the definition")
{
    for (std::int64_t D = -3; D > -600; --D) {
        if (((D % 4) + 4) % 4 > 1)
            continue;
        const auto forms = reduced_forms(D);
        const auto expected = oracle::reduced_forms(D);
        REQUIRE(forms.size() == expected.size());
        for (const auto &[a, b, c] : expected) {
            bool present = false;
            for (const BinaryForm &f : forms)
                present = present || (f.A == a && f.B == b && f.C == c);
            CHECK(present);
        }
    }
    CHECK(reduced_forms(-23).size() == 3);
    CHECK(reduced_forms(-163).size() == 1);
    CHECK(reduced_forms(-71).size() == 7);
}

TEST_CASE("class polynomial fixtures")
{
    CHECK(hilbert_class_poly(-7).as_qpoly() == ints({3375, 1}));
    CHECK(hilbert_class_poly(-8).as_qpoly() == ints({-8000, 1}));
    CHECK(hilbert_class_poly(-4).as_qpoly() == ints({-1728, 1}));
    CHECK(hilbert_class_poly(-3).as_qpoly() == ints({0, 1}));
    CHECK(hilbert_class_poly(-23).as_qpoly() ==
          ints({mpz_class("12771880859375"), mpz_class("-5151296875"), 3491750, 1}));
    CHECK(hilbert_class_poly(-15).as_qpoly() == ints({-121287375, 191025, 1}));
    CHECK(hilbert_class_poly(-20).as_qpoly() == ints({-681472000, -1264000, 1}));
    CHECK(hilbert_class_poly(-163).as_qpoly() == ints({mpz_class(640320) * 640320 * 640320, 1}));
    CHECK(hilbert_class_poly(-12).as_qpoly() == ints({-54000, 1}));
    const ClassPoly &H = hilbert_class_poly(-71);
    CHECK(H.degree() == 7);
    CHECK(H.confirm_precision == 2 * H.precision);
    CHECK_THROWS_AS(hilbert_class_poly(-71, 4), Error);
}

TEST_CASE("class polynomial roots are the j-values of the forms")
{
    const long prec = 512;
    for (std::int64_t D : {-23L, -56L, -84L}) {
        const QPoly H = hilbert_class_poly(D).as_qpoly();
        for (const BinaryForm &f : reduced_forms(D)) {
            const BigComplex tau(BigReal(prec, mpq_class(-f.B, 2 * f.A)),
                                 BigReal(prec, -D).sqrt() / BigReal(prec, 2 * f.A));
            const BigComplex j = j_invariant(tau, prec);
            BigComplex acc(prec);
            for (long k = H.degree(); k >= 0; --k)
                acc = acc * j + BigComplex(BigReal(prec, H.coeff(k)), BigReal(prec, 0L));
            CHECK(acc.abs().to_double() < 1e-40);
        }
    }
}

TEST_CASE("gamma3 polynomial values")
{
    CHECK(gamma3_poly(-7).G == QPoly::constant(189));
    CHECK(gamma3_poly(-8).G == QPoly::constant(224));
    CHECK(gamma3_poly(-11).G == QPoly::constant(-616));
    CHECK(gamma3_poly(-19).G == QPoly::constant(-4104));
    CHECK(gamma3_poly(-12).G == QPoly::constant(792));
    CHECK(gamma3_poly(-7).mode == GammaMode::Odd);
    CHECK(gamma3_poly(-8).mode == GammaMode::Even);
    CHECK_THROWS_AS(gamma3_poly(-3), Error);
    CHECK_THROWS_AS(gamma3_poly(-4), Error);
    CHECK_THROWS_AS(gamma3_poly(-20), Error);
    CHECK_THROWS_AS(gamma3_poly(-16), Error);
}

TEST_CASE("G^2 = D (x - 1728) or -D (x - 1728) exactly")
{
    for (std::int64_t D : kGammaDiscs) {
        CAPTURE(D);
        const QPoly H = hilbert_class_poly(D).as_qpoly();
        const GammaExpr &g = gamma3_poly(D);
        const mpq_class scale = g.mode == GammaMode::Odd ? mpq_class(D) : mpq_class(-D);
        CHECK((g.G * g.G) % H == (QPoly::x_minus(1728) * scale) % H);
        CHECK(g.G_times_derivative.is_integral());
        CHECK((g.G * H.derivative()) % H == g.G_times_derivative);
    }
}

TEST_CASE("G evaluates to the radical times gamma3 at tau_D")
{
    const long prec = 256;
    for (std::int64_t D : {-23L, -24L, -56L, -15L}) {
        const Discriminant disc = Discriminant::make(D);
        const BigComplex tau = cm_point_value(CmPoint{disc, 1, 0}, prec);
        const BigComplex j = j_invariant(tau, prec);
        const BigComplex g3 = gamma3(tau, prec);
        const GammaExpr &g = gamma3_poly(D);
        BigComplex acc(prec);
        for (long k = g.G.degree(); k >= 0; --k)
            acc = acc * j + BigComplex(BigReal(prec, g.G.coeff(k)), BigReal(prec, 0L));
        const BigReal rd = BigReal(prec, static_cast<long>(disc.d())).sqrt();
        const BigComplex radical = disc.is_odd() ? BigComplex(BigReal(prec, 0L), rd)
                                                 : BigComplex(rd * BigReal(prec, 2L), BigReal(prec, 0L));
        CHECK((acc - radical * g3).abs().to_double() < 1e-30);
    }
}

TEST_CASE("genus radical")
{
    const GenusRadical &a = genus_radical(-20);
    CHECK(a.P == QPoly({mpq_class(-1975, 884), mpq_class(1, 282880)}));
    CHECK(genus_radical(-16).P == QPoly::constant(2));
    for (std::int64_t D : {-20L, -16L, -36L, -52L, -48L, -64L, -84L, -132L}) {
        CAPTURE(D);
        const Discriminant disc = Discriminant::make(D);
        const QPoly H = hilbert_class_poly(D).as_qpoly();
        const QPoly &P = genus_radical(D).P;
        CHECK((P * P) % H == QPoly::constant(disc.d()));
    }
    CHECK_THROWS_AS(genus_radical(-7), Error);
    CHECK_THROWS_AS(genus_radical(-8), Error);
}

TEST_CASE("odd values represented by forms")
{
    for (const BinaryForm &f : reduced_forms(-84)) {
        const std::int64_t m = odd_represented_value(f);
        CHECK(m % 2 != 0);
        CHECK(std::gcd(m, std::int64_t{84}) == 1);
        bool represented = false;
        for (std::int64_t x = -40; x <= 40 && !represented; ++x)
            for (std::int64_t y = -40; y <= 40 && !represented; ++y)
                represented = f.A * x * x + f.B * x * y + f.C * y * y == m;
        CHECK(represented);
    }
}
