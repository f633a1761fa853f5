// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmcount/bigarith.hpp"
#include "cmcount/classfield.hpp"
#include "cmcount/counting.hpp"
#include "cmcount/errors.hpp"
#include "cmcount/poly.hpp"
#include "oracles.hpp"

using namespace cmcount;

namespace {

template <class F>
Error error_of(F &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e;
    }
    FAIL("no error raised");
    return Error(ErrorKind::Domain, "");
}

long brute(const CurveFp &c)
{
    return oracle::count_points(c.p.get_ui(), c.a.get_si(), c.b.get_si());
}

CurveFp cm_curve(const mpz_class &p, const mpz_class &j0)
{
    const mpz_class k = mod(1728 - j0, p);
    return CurveFp::make(p, 3 * j0 * k, 2 * j0 * k * k);
}

mpz_class nonresidue(const mpz_class &p)
{
    for (mpz_class c = 2;; ++c)
        if (legendre(c, p) == -1)
            return c;
}

} // namespace

TEST_CASE("curves over F_p")
{
    const CurveFp E = CurveFp::make(11, 9, 10);
    CHECK(E.j_invariant() == mod(-3375, 11));
    CHECK_THROWS_AS(CurveFp::make(11, 0, 0), Error);
    CHECK_THROWS_AS(CurveFp::make(15, 1, 1), Error);
    CHECK_THROWS_AS(CurveFp::make(3, 1, 1), Error);
    CHECK(E.twist(2).a == mod(4 * 9, 11));
    CHECK(E.discriminant() == mod(-16 * (4 * 729 + 27 * 100), 11));
}

TEST_CASE("enumeration oracle")
{
    CHECK(naive_count(CurveFp::make(11, 9, 10)) == 16);
    CHECK(naive_count(CurveFp::make(7, 0, 2)) == 9);
    CHECK(naive_count(5, 1, 0) == 4);
    CHECK(naive_count(3, 0, 1) == 4);
    CHECK_THROWS_AS(naive_count(9, 0, 1), Error);
    for (long p : {5L, 7L, 101L, 1009L})
        for (long a = 0; a < 5; ++a)
            for (long b = 1; b < 5; ++b) {
                if ((4 * a * a * a + 27 * b * b) % p == 0)
                    continue;
                const CurveFp E = CurveFp::make(p, a, b);
                REQUIRE(naive_count(E) == brute(E));
            }
    CHECK(error_of([] { naive_count(CurveFp::make(10000019, 1, 1)); }).kind() == ErrorKind::Resource);
}

TEST_CASE("count example for D = -7")
{
    const FrobeniusData fd = frobenius_trace(Discriminant::make(-7), CurveFp::make(11, 9, 10));
    CHECK(fd.count == 16);
    CHECK(fd.branch == Branch::Odd);
    CHECK(fd.lambda.norm() == 11);
}

TEST_CASE("closed formulas against enumeration, every branch")
{
    for (long D : {-7L, -8L, -11L, -15L, -20L, -24L, -16L, -12L, -28L, -23L, -52L, -56L}) {
        const Discriminant disc = Discriminant::make(D);
        for (long q = 5; q < 400; q += 2) {
            const mpz_class p = q;
            if (!oracle::is_prime(static_cast<oracle::u64>(q)) || D % q == 0)
                continue;
            if (oracle::norm_solutions(D, q).empty())
                continue;
            const auto roots = roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(D).as_qpoly(), p));
            const mpz_class s = sqrt_mod_p(-mpz_class(disc.d()), p);
            for (const mpz_class &j0 : roots) {
                if (j0 == 0 || j0 == 1728 % q)
                    continue;
                const CurveFp E = cm_curve(p, j0);
                for (const CurveFp &C : {E, E.twist(nonresidue(p))}) {
                    CAPTURE(D);
                    CAPTURE(q);
                    const FrobeniusData fd = frobenius_trace(disc, C, j0, s);
                    REQUIRE(fd.count == brute(C));
                    CHECK(fd.lambda.norm() == q);
                }
            }
        }
    }
}

TEST_CASE("branch selection")
{
    const CurveFp E = CurveFp::make(11, 9, 10);
    CHECK(frobenius_trace(Discriminant::make(-7), E.twist(2)).count == 8);
    CHECK(frobenius_trace(Discriminant::make(-8), cm_curve(17, mod(8000, 17))).branch == Branch::FourOrEight);
    const mpz_class p = 29;
    const auto roots = roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(-20).as_qpoly(), p));
    REQUIRE(!roots.empty());
    CHECK(frobenius_trace(Discriminant::make(-20), cm_curve(p, roots[0])).branch == Branch::ZeroOrTwelve);
}

TEST_CASE("precondition failures")
{
    const Discriminant disc = Discriminant::make(-7);
    CHECK(error_of([&] { frobenius_trace(disc, CurveFp::make(3 * 0 + 19, 1, 1)); }).kind() == ErrorKind::NoSolution);
    CHECK(error_of([&] { frobenius_trace(disc, CurveFp::make(11, 1, 1)); }).kind() == ErrorKind::Precondition);
    CHECK(error_of([&] { frobenius_trace(Discriminant::make(-4), CurveFp::make(13, 1, 0)); }).reason() ==
          Reason::UnitGroup);
    CHECK(error_of([&] { frobenius_trace(disc, CurveFp::make(7, 1, 1)); }).reason() == Reason::Ramified);
    CHECK(error_of([&] { frobenius_trace(disc, CurveFp::make(17, 1, 1)); }).reason() == Reason::Inert);
    // 13 splits for -23 but only through non-principal forms, so H has no root
    CHECK(error_of([&] { frobenius_trace(Discriminant::make(-23), CurveFp::make(13, 1, 1)); }).reason() ==
          Reason::NoRoot);
    CHECK(error_of([&] { frobenius_trace(disc, CurveFp::make(11, 9, 10), mod(-3375, 11), 3); }).kind() ==
          ErrorKind::Precondition);
}

TEST_CASE("j = 1728 and j = 0")
{
    CHECK(count_special(CurveFp::make(7, 0, 2), SpecialJ::J0).count == 9);
    const Discriminant g = Discriminant::make(-4);
    CHECK(primary_gaussian(QuadElem(g, 2, -4)) == QuadElem(g, -2, 4));
    CHECK(primary_gaussian(QuadElem(g, 4, 2)) == QuadElem(g, -2, 4));
    CHECK(count_special(CurveFp::make(5, -1, 0), SpecialJ::J1728).count == 8);
    const Discriminant e = Discriminant::make(-3);
    const QuadElem pe = primary_eisenstein(QuadElem(e, 1, 1) * QuadElem(e, 5, 1));
    CHECK(mod(pe.basis_coords()[0] - 1, 3) == 0);
    CHECK(mod(pe.basis_coords()[1], 3) == 0);
    for (long q = 5; q < 300; ++q) {
        if (!oracle::is_prime(static_cast<oracle::u64>(q)))
            continue;
        for (long c = 1; c < 8; ++c) {
            if (q % 4 == 1) {
                if (c % q == 0)
                    continue;
                const CurveFp E = CurveFp::make(q, -c, 0);
                REQUIRE(count_special(E, SpecialJ::J1728).count == brute(E));
            }
            if (q % 3 == 1) {
                if ((16 * c) % q == 0)
                    continue;
                const CurveFp E = CurveFp::make(q, 0, 16 * c);
                REQUIRE(count_special(E, SpecialJ::J0).count == brute(E));
            }
        }
    }
    CHECK(error_of([] { count_special(CurveFp::make(7, -1, 0), SpecialJ::J1728); }).kind() == ErrorKind::Precondition);
    CHECK(error_of([] { count_special(CurveFp::make(13, 1, 1), SpecialJ::J1728); }).kind() ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("normalization for p = 1 (mod 4)")
{
    CHECK(normalize_1mod4(Discriminant::make(-7), 29).u() == mpq_class(-1));
    const QuadElem l = normalize_1mod4(Discriminant::make(-8), 17);
    CHECK(l.u() == mpq_class(3));
    CHECK(l == QuadElem(Discriminant::make(-8), 6, 4));
    CHECK(error_of([] { normalize_1mod4(Discriminant::make(-7), 19); }).kind() == ErrorKind::Precondition);
    CHECK(error_of([] { normalize_1mod4(Discriminant::make(-20), 29); }).reason() == Reason::ExcludedDiscriminant);
}

TEST_CASE("quartic-symbol counts against enumeration")
{
    for (long D : {-7L, -11L, -8L, -19L, -43L, -24L, -15L, -40L}) {
        const Discriminant disc = Discriminant::make(D);
        for (long q = 5; q < 500; q += 4) {
            const mpz_class p = q;
            if (!oracle::is_prime(static_cast<oracle::u64>(q)) || D % q == 0 || oracle::norm_solutions(D, q).empty())
                continue;
            for (const mpz_class &j0 : roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(D).as_qpoly(), p))) {
                const CurveFp E = cm_curve(p, j0);
                for (const CurveFp &C : {E, E.twist(nonresidue(p))}) {
                    const FrobeniusData fd = count_1mod4(disc, C);
                    REQUIRE(fd.count == brute(C));
                    CHECK(fd.branch == Branch::OneMod4);
                }
            }
        }
    }
}

TEST_CASE("elliptic curve group law")
{
    const CurveFp E = CurveFp::make(11, 9, 10);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const PointFp P = random_point(E, rng);
        CHECK(mod(P.y * P.y - P.x * P.x * P.x - 9 * P.x - 10, 11) == 0);
        CHECK(ec_mul(E, 16, P).infinity);
        const PointFp Q = random_point(E, rng);
        const PointFp a = ec_add(E, P, Q), b = ec_add(E, Q, P);
        CHECK(a.infinity == b.infinity);
        if (!a.infinity)
            CHECK((a.x == b.x && a.y == b.y));
        const PointFp minus{P.x, mod(-P.y, 11), false};
        CHECK(ec_add(E, P, minus).infinity);
    }
    CHECK(check_order(E, 16, 10, 3) == 10);
    CHECK(check_order(E, 17, 10, 3) < 10);
}

TEST_CASE("construction examples")
{
    const Discriminant disc = Discriminant::make(-7);
    const Construction c = cm_construct_count(disc, 11, 16);
    CHECK(c.data.count == 16);
    CHECK(brute(c.curve) == 16);
    CHECK(c.certificate.passed);
    CHECK(c.certificate.naive);
    const Construction t = cm_construct_count(disc, 11, 8);
    CHECK(brute(t.curve) == 8);
    CHECK(t.twisted != c.twisted);
    CHECK(error_of([&] { cm_construct_count(disc, 11, 24); }).reason() == Reason::Infeasible);
    CHECK(error_of([&] { cm_construct_count(disc, 11, 14); }).reason() == Reason::Infeasible);
    // 47 splits for -23 without a principal representation, so H_{-23} has no root mod 47
    const Error e = error_of([&] { cm_construct(Discriminant::make(-23), 47, 2); });
    CHECK(e.kind() == ErrorKind::NoSolution);
    CHECK(e.reason() == Reason::NoRoot);
    CHECK(error_of([&] { cm_construct(disc, 17, 2); }).reason() == Reason::Inert);
    CHECK(cm_construct(Discriminant::make(-23), 59, -12).certificate.passed);
}

TEST_CASE("construction for large primes and for the extra-unit discriminants")
{
    const mpz_class p("1000000007");
    for (long D : {-7L, -8L, -20L, -3L, -4L, -23L}) {
        const Discriminant disc = Discriminant::make(D);
        mpz_class q = p;
        while (true) {
            q += 2;
            if (!is_probable_prime(q))
                continue;
            try {
                good_generator(disc, q);
                break;
            } catch (const Error &) {
            }
        }
        const QuadElem l = good_generator(disc, q);
        for (const mpz_class &t : {l.trace(), mpz_class(-l.trace())}) {
            const Construction c = cm_construct(disc, q, t, 11);
            CHECK(c.data.trace == t);
            CHECK(c.certificate.passed);
            CHECK(!c.certificate.naive);
            CHECK(check_order(c.curve, c.data.count, 5, 99) == 5);
        }
    }
}
