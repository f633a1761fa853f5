// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmcount/errors.hpp"
#include "cmcount/qcurve.hpp"
#include "oracles.hpp"

using namespace cmcount;

namespace {

QPoly j8(const mpq_class &c, const QPoly &H)
{
    std::vector<mpq_class> v(9, 0);
    v[8] = c;
    return QPoly(v) % H;
}

Reason reason_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.reason();
    }
    FAIL("no error raised");
    return Reason::None;
}

} // namespace

TEST_CASE("discriminant identity")
{
    const QcurveModel a = qcurve_model(7);
    CHECK(a.discriminant.poly == j8(-343, a.H));
    const QcurveModel b = qcurve_model(2);
    CHECK(b.discriminant.poly == j8(8, b.H));
    for (std::int64_t d : {6, 10, 11, 14, 15, 19, 22, 23, 26, 31, 35, 39, 42})
        CHECK(qcurve_model(d).discriminant_verified);
}

TEST_CASE("excluded and invalid d")
{
    CHECK(reason_of([] { qcurve_model(5); }) == Reason::ExcludedDiscriminant);
    CHECK(reason_of([] { qcurve_model(13); }) == Reason::ExcludedDiscriminant);
    CHECK(reason_of([] { qcurve_model(3); }) == Reason::UnitGroup);
    CHECK_THROWS_AS(qcurve_model(12), Error);
    CHECK_THROWS_AS(qcurve_model(0), Error);
    CHECK(reason_of([] { qcurve_crosscheck(3, 7); }) == Reason::UnitGroup);
}

TEST_CASE("Hecke character examples")
{
    const Discriminant a = Discriminant::make(-7);
    const QuadElem p1 = qcurve_hecke(7, 2, 1);
    CHECK(p1 == QuadElem(a, 4, 2));
    CHECK(p1.trace() == 4);
    const QuadElem p2 = qcurve_hecke(6, 1, 1);
    CHECK(p2 == QuadElem(Discriminant::make(-24), -2, -2));
    CHECK(p2.trace() == -2);
    const QuadElem p3 = qcurve_hecke(2, 3, 2);
    CHECK(p3.trace() == -6);
    CHECK_THROWS_AS(qcurve_hecke(7, 1, 1), Error);
    CHECK_THROWS_AS(qcurve_hecke(3, 1, 1), Error);
}

TEST_CASE("conjugate primes give conjugate character values")
{
    for (std::int64_t d : {2, 6, 7, 10, 11, 14, 15, 19, 22, 23}) {
        const std::int64_t D = d % 4 == 3 ? -d : -4 * d;
        for (long q = 5; q < 600; q += 2) {
            if (!oracle::is_prime(static_cast<oracle::u64>(q)) || (2 * d) % q == 0)
                continue;
            for (auto [U, V] : oracle::norm_solutions(D, q)) {
                const mpq_class u(U, 2), v(V, 2);
                const QuadElem a = qcurve_hecke(d, u, v), b = qcurve_hecke(d, u, -v);
                REQUIRE(a.conj() == b);
                CHECK(abs(a.trace()) == abs(mpz_class(U)));
            }
        }
    }
}

TEST_CASE("crosscheck examples")
{
    const QcurveReport a = qcurve_crosscheck(7, 11);
    CHECK(a.agree);
    CHECK(a.trace_naive);
    const QcurveReport b = qcurve_crosscheck(2, 17);
    CHECK(b.agree);
    CHECK(b.trace_hecke == *b.trace_naive);
}

TEST_CASE("crosscheck sweep")
{
    for (std::int64_t d : {2, 6, 7, 10, 11, 14, 15, 19, 22, 23}) {
        const std::int64_t D = d % 4 == 3 ? -d : -4 * d;
        for (long q = 5; q < 400; q += 2) {
            if (!oracle::is_prime(static_cast<oracle::u64>(q)) || (2 * d) % q == 0 ||
                oracle::norm_solutions(D, q).empty())
                continue;
            const QcurveReport r = qcurve_crosscheck(d, q);
            CAPTURE(d);
            CAPTURE(q);
            REQUIRE(r.agree);
            CHECK(*r.trace_naive ==
                  q + 1 - oracle::count_points(static_cast<oracle::u64>(q), r.reduced.a.get_si(), r.reduced.b.get_si()));
        }
    }
}

TEST_CASE("unit discriminant over Q(sqrt(33))")
{
    const QuadFieldElem disc = weierstrass_disc(conductor3_unit_model());
    CHECK(disc == QuadFieldElem(33, -23, -4));
    CHECK(disc.norm() == 1);
}
