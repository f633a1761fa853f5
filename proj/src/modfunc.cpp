// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/modfunc.hpp"

#include <algorithm>
#include <cmath>

#include "cmcount/errors.hpp"

namespace cmcount {

namespace {

BigComplex one(long prec)
{
    return {BigReal(prec, 1L), BigReal(prec)};
}

BigComplex two_pi_i_times(const BigComplex &z, const BigReal &scale)
{
    // 2 pi i z * scale
    const BigReal tp = BigReal::pi(z.prec()) * BigReal(z.prec(), 2L) * scale;
    return {-(z.im() * tp), z.re() * tp};
}

/// |z| < 2^-bits.
bool negligible(const BigComplex &z, long bits)
{
    const long e = std::max(z.re().exponent2(), z.im().exponent2());
    return e < -bits;
}

long ceil_log2(long n)
{
    long b = 0;
    while ((1L << b) < n)
        ++b;
    return b;
}

void require_upper(const BigComplex &tau)
{
    if (tau.im().sign() <= 0)
        fail(ErrorKind::Domain, "tau must lie in the upper half-plane (Im tau > 0)");
}

// eta(tau) * exp(-2 pi i tau / 24) via the pentagonal series.
BigComplex pentagonal_sum(const BigComplex &q, long wp)
{
    BigComplex sum = one(wp);
    BigComplex qn = one(wp);  // q^n
    BigComplex p1 = one(wp);  // q^(n(3n-1)/2)
    for (long n = 1;; ++n) {
        // q^(3n-2) = (q^(n-1))^3 q
        p1 = p1 * qn.pow(3) * q;
        qn = qn * q;
        const BigComplex p2 = p1 * qn;
        const BigComplex term = p1 + p2;
        if (n & 1)
            sum = sum - term;
        else
            sum = sum + term;
        if (negligible(p1, wp + 8))
            break;
        if (n > 100000)
            fail(ErrorKind::Resource, "eta series did not converge");
    }
    return sum;
}

BigComplex eta_reduced(const BigComplex &tau, long wp)
{
    const BigComplex q = two_pi_i_times(tau, BigReal(wp, 1L)).exp();
    const BigComplex q24 = two_pi_i_times(tau, BigReal(wp, 1L) / BigReal(wp, 24L)).exp();
    return q24 * pentagonal_sum(q, wp);
}

mpz_class sigma(long n, unsigned k)
{
    mpz_class s = 0;
    for (long t = 1; t * t <= n; ++t) {
        if (n % t)
            continue;
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(t), k);
        s += a;
        if (t * t != n) {
            mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n / t), k);
            s += b;
        }
    }
    return s;
}

std::array<BigComplex, 2> eisenstein_reduced(const BigComplex &tau, long wp)
{
    const BigComplex q = two_pi_i_times(tau, BigReal(wp, 1L)).exp();
    BigComplex s3(wp), s5(wp);
    BigComplex qn = one(wp);
    for (long n = 1;; ++n) {
        qn = qn * q;
        s3 += qn * BigReal(wp, sigma(n, 3));
        const BigComplex t5 = qn * BigReal(wp, sigma(n, 5));
        s5 += t5;
        if (negligible(t5, wp + 16))
            break;
        if (n > 100000)
            fail(ErrorKind::Resource, "Eisenstein series did not converge");
    }
    return {one(wp) + s3 * BigReal(wp, 240L), one(wp) - s5 * BigReal(wp, 504L)};
}

BigComplex j_reduced(const BigComplex &tau, long wp)
{
    // w = exp(pi i tau)
    const BigComplex w = two_pi_i_times(tau, BigReal(wp, 1L) / BigReal(wp, 2L)).exp();
    const BigComplex w4 = two_pi_i_times(tau, BigReal(wp, 1L) / BigReal(wp, 8L)).exp();
    BigComplex s3(wp), s4(wp), s2 = one(wp);
    for (long n = 1;; ++n) {
        const BigComplex wn2 = w.pow(static_cast<unsigned>(n * n));
        s3 += wn2;
        if (n & 1)
            s4 = s4 - wn2;
        else
            s4 += wn2;
        const BigComplex wnn = w.pow(static_cast<unsigned>(n * (n + 1)));
        s2 += wnn;
        if (negligible(wn2, wp + 8))
            break;
        if (n > 10000)
            fail(ErrorKind::Resource, "theta series did not converge");
    }
    const BigReal two(wp, 2L);
    const BigComplex th3 = one(wp) + s3 * two;
    const BigComplex th4 = one(wp) + s4 * two;
    const BigComplex th2 = w4 * s2 * two;
    const BigComplex num = th2.pow(8) + th3.pow(8) + th4.pow(8);
    const BigComplex den = (th2 * th3 * th4).pow(8);
    return num.pow(3) * BigReal(wp, 32L) / den;
}

} // namespace

long working_precision(long prec, double im_tau)
{
    if (prec < 64)
        fail(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
    // magnitude of 1/q at the reduced point plus series guard bits
    const double mag = std::max(0.0, 2.0 * M_PI * std::max(im_tau, 1.0) / std::log(2.0));
    const long terms = std::max<long>(2, static_cast<long>(prec / 7) + 2);
    return prec + 32 + ceil_log2(terms) + static_cast<long>(std::ceil(mag)) + 16;
}

ReducedPoint reduce_point(const BigComplex &tau_in, long wp)
{
    require_upper(tau_in);
    BigComplex tau = tau_in.with_prec(wp);
    std::array<long, 4> M{1, 0, 0, 1};
    BigComplex factor = one(wp);
    long e24 = 0;
    const BigReal bound = BigReal(wp, 1L) - BigReal(wp, 1L) / BigReal(wp, mpz_class(mpz_class(1) << (wp / 2)));
    for (int iter = 0;; ++iter) {
        if (iter > 100000)
            fail(ErrorKind::Resource, "reduction to the fundamental domain did not terminate");
        const mpz_class nz = tau.re().round();
        if (!nz.fits_slong_p())
            fail(ErrorKind::Domain, "real part of tau too large");
        const long n = nz.get_si();
        if (n != 0) {
            tau = tau - BigComplex(BigReal(wp, n), BigReal(wp));
            e24 += n;
            M = {M[0] - n * M[2], M[1] - n * M[3], M[2], M[3]};
        }
        if (tau.norm2().cmp(bound) >= 0)
            break;
        // eta(t) = sqrt(-i z) eta(z), z = -1/t
        const BigComplex z = -(one(wp) / tau);
        factor = factor * BigComplex(z.im(), -z.re()).sqrt();
        tau = z;
        M = {-M[2], -M[3], M[0], M[1]};
    }
    e24 %= 24;
    factor = factor * BigComplex::root_of_unity(e24, 24, wp);
    ReducedPoint r{tau, {M[3], -M[1], -M[2], M[0]}, factor};
    return r;
}

BigComplex eta(const BigComplex &tau, long prec)
{
    const long wp = working_precision(prec, 0.0);
    const ReducedPoint r = reduce_point(tau, wp);
    return (r.eta_factor * eta_reduced(r.tau_red, wp)).with_prec(prec);
}

std::array<BigComplex, 2> eisenstein(const BigComplex &tau, long prec)
{
    const long wp = working_precision(prec, 0.0);
    const ReducedPoint r = reduce_point(tau, wp);
    auto e = eisenstein_reduced(r.tau_red, wp);
    const BigComplex cz = r.tau_red * BigComplex(BigReal(wp, r.g[2]), BigReal(wp)) +
                          BigComplex(BigReal(wp, r.g[3]), BigReal(wp));
    return {(e[0] * cz.pow(4)).with_prec(prec), (e[1] * cz.pow(6)).with_prec(prec)};
}

BigComplex j_invariant(const BigComplex &tau, long prec)
{
    require_upper(tau);
    const long wp0 = working_precision(prec, 0.0);
    const ReducedPoint r0 = reduce_point(tau, wp0);
    const long wp = working_precision(prec, r0.tau_red.im().to_double());
    const ReducedPoint r = reduce_point(tau, wp);
    return j_reduced(r.tau_red, wp).with_prec(prec);
}

WeberValues weber_values(const BigComplex &tau, long prec)
{
    require_upper(tau);
    const ReducedPoint r0 = reduce_point(tau, working_precision(prec, 0.0));
    const long wp = working_precision(prec, r0.tau_red.im().to_double());
    const ReducedPoint r = reduce_point(tau, wp);
    const BigComplex et = r.eta_factor * eta_reduced(r.tau_red, wp);
    auto e = eisenstein_reduced(r.tau_red, wp);
    const BigComplex cz = r.tau_red * BigComplex(BigReal(wp, r.g[2]), BigReal(wp)) +
                          BigComplex(BigReal(wp, r.g[3]), BigReal(wp));
    const BigComplex e4 = e[0] * cz.pow(4);
    const BigComplex e6 = e[1] * cz.pow(6);
    const BigComplex g2 = e4 / et.pow(8);
    const BigComplex g3 = e6 / et.pow(12);
    const BigComplex j = j_reduced(r.tau_red, wp);
    const BigComplex c1728(BigReal(wp, 1728L), BigReal(wp));
    const BigReal res2 = (g2.pow(3) - j).abs();
    const BigReal res3 = (g3.pow(2) - (j - c1728)).abs();
    return WeberValues{et.with_prec(prec), g2.with_prec(prec), g3.with_prec(prec), j.with_prec(prec),
                       res2.with_prec(prec), res3.with_prec(prec)};
}

BigComplex gamma3(const BigComplex &tau, long prec)
{
    require_upper(tau);
    const ReducedPoint r0 = reduce_point(tau, working_precision(prec, 0.0));
    const long wp = working_precision(prec, r0.tau_red.im().to_double());
    const ReducedPoint r = reduce_point(tau, wp);
    const BigComplex et = r.eta_factor * eta_reduced(r.tau_red, wp);
    auto e = eisenstein_reduced(r.tau_red, wp);
    const BigComplex cz = r.tau_red * BigComplex(BigReal(wp, r.g[2]), BigReal(wp)) +
                          BigComplex(BigReal(wp, r.g[3]), BigReal(wp));
    return (e[1] * cz.pow(6) / et.pow(12)).with_prec(prec);
}

BigComplex cm_point_value(const CmPoint &pt, long prec)
{
    const BigReal re(prec, pt.real_part());
    const BigReal im = BigReal(prec, pt.imag_coeff()) * BigReal(prec, static_cast<long>(pt.disc.d())).sqrt();
    return {re, im};
}

} // namespace cmcount
