// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "cmcount/errors.hpp"
#include "cmcount/modfunc.hpp"

using namespace cmcount;

namespace {

const long kPrec = 256;

BigReal R(long v)
{
    return BigReal(kPrec, v);
}

BigComplex C(const BigReal &re, const BigReal &im)
{
    return BigComplex(re, im);
}

BigReal tol(long bits)
{
    return BigReal(kPrec, 1L) / BigReal(kPrec, mpz_class(mpz_class(1) << static_cast<unsigned>(bits)));
}

bool close(const BigComplex &a, const BigComplex &b, long bits)
{
    return (a - b).abs().cmp(tol(bits)) < 0;
}

} // namespace

TEST_CASE("eta(i) = Gamma(1/4) / (2 pi^(3/4))")
{
    BigReal g(kPrec), quarter(kPrec, mpq_class(1, 4)), p34(kPrec);
    mpfr_gamma(g.raw(), quarter.raw(), MPFR_RNDN);
    mpfr_pow(p34.raw(), BigReal::pi(kPrec).raw(), BigReal(kPrec, mpq_class(3, 4)).raw(), MPFR_RNDN);
    const BigReal expected = g / (R(2) * p34);
    const BigComplex e = eta(C(R(0), R(1)), kPrec);
    CHECK(close(e, C(expected, R(0)), 240));
}

TEST_CASE("j at rational CM points")
{
    CHECK(close(j_invariant(C(R(0), R(1)), kPrec), C(R(1728), R(0)), 200));
    CHECK(close(j_invariant(C(R(0), R(2).sqrt()), kPrec), C(R(8000), R(0)), 200));
    const BigComplex rho = C(BigReal(kPrec, mpq_class(-1, 2)), R(3).sqrt() / R(2));
    CHECK(j_invariant(rho, kPrec).abs().cmp(tol(200)) < 0);
    const BigComplex t163 = C(BigReal(kPrec, mpq_class(1, 2)), R(163).sqrt() / R(2));
    const mpz_class big = -mpz_class(640320) * 640320 * 640320;
    CHECK(close(j_invariant(t163, kPrec), C(BigReal(kPrec, big), R(0)), 150));
}

TEST_CASE("Weber identities at CM and generic points")
{
    for (const auto &[re, im] : std::vector<std::pair<long, long>>{{0, 1}, {1, 3}, {-2, 5}, {7, 11}}) {
        const BigComplex tau = C(BigReal(kPrec, mpq_class(re, 13)), BigReal(kPrec, mpq_class(im, 4)));
        const WeberValues w = weber_values(tau, kPrec);
        CHECK(w.residual2.cmp(tol(128)) < 0);
        CHECK(w.residual3.cmp(tol(128)) < 0);
        CHECK(close(w.gamma3, gamma3(tau, kPrec), 200));
    }
}

TEST_CASE("modular invariance of j and the eta transformation")
{
    const BigComplex tau = C(BigReal(kPrec, mpq_class(3, 7)), BigReal(kPrec, mpq_class(2, 9)));
    const BigComplex one = C(R(1), R(0));
    const BigComplex j0 = j_invariant(tau, kPrec);
    CHECK(close(j_invariant(tau + one, kPrec), j0, 180));
    CHECK(close(j_invariant(-(one / tau), kPrec), j0, 180));
    // eta(tau + 1) = exp(pi i / 12) eta(tau)
    const BigComplex z = BigComplex::root_of_unity(1, 24, kPrec);
    CHECK(close(eta(tau + one, kPrec), z * eta(tau, kPrec), 200));
    // eta(-1/tau) = sqrt(-i tau) eta(tau)
    const BigComplex mi_tau = C(R(0), R(-1)) * tau;
    CHECK(close(eta(-(one / tau), kPrec), mi_tau.sqrt() * eta(tau, kPrec), 200));
}

TEST_CASE("gamma3 at tau_{-7}")
{
    const CmPoint pt{Discriminant::make(-7), 1, 0};
    const BigComplex g = gamma3(cm_point_value(pt, kPrec), kPrec);
    // sqrt(-7) gamma3 = 189
    const BigComplex root7 = C(R(0), R(7).sqrt());
    CHECK(close(root7 * g, C(R(189), R(0)), 180));
}

TEST_CASE("reduction and errors")
{
    const BigComplex tau = C(BigReal(kPrec, mpq_class(17, 5)), BigReal(kPrec, mpq_class(1, 50)));
    const ReducedPoint r = reduce_point(tau, kPrec);
    CHECK(r.tau_red.im().cmp(BigReal(kPrec, std::string("0.86"))) > 0);
    CHECK(r.g[0] * r.g[3] - r.g[1] * r.g[2] == 1);
    CHECK_THROWS_AS(reduce_point(C(R(0), R(0)), kPrec), Error);
    CHECK_THROWS_AS(reduce_point(C(R(0), R(-1)), kPrec), Error);
    CHECK_THROWS_AS(working_precision(32, 1.0), Error);
    CHECK(working_precision(256, 10.0) > working_precision(256, 1.0));
}
