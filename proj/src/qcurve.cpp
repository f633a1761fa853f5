// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/qcurve.hpp"

#include "cmcount/bigarith.hpp"
#include "cmcount/classfield.hpp"
#include "cmcount/errors.hpp"

namespace cmcount {

namespace {

bool squarefree(std::int64_t n)
{
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0)
            return false;
    return true;
}

void require_supported(std::int64_t d)
{
    if (d <= 0 || !squarefree(d))
        fail(ErrorKind::InvalidArgument, "d must be a positive squarefree integer");
    if (d % 4 == 1)
        fail(ErrorKind::Precondition, "no CM Q-curves of this form for d = 1 (mod 4)",
             Reason::ExcludedDiscriminant);
    if (d == 3)
        fail(ErrorKind::Precondition, "d = 3 has extra units", Reason::UnitGroup);
}

std::int64_t disc_of(std::int64_t d)
{
    return d % 4 == 3 ? -d : -4 * d;
}

QPoly monomial(unsigned k, const mpq_class &c)
{
    std::vector<mpq_class> v(k + 1, 0);
    v[k] = c;
    return QPoly(v);
}

} // namespace

QcurveModel qcurve_model(std::int64_t d)
{
    require_supported(d);
    const std::int64_t D = disc_of(d);
    const QPoly H = hilbert_class_poly(D).as_qpoly();
    const GammaExpr &g = gamma3_poly(D);
    const QPoly j3 = monomial(3, 1) % H;
    const QPoly j4 = monomial(4, 1) % H;
    const mpq_class dq(d);
    QPoly a, b;
    if (d % 4 == 3) {
        a = j3 * (dq / 48);
        b = (g.G * j4 % H) * (-dq / 864);
    } else {
        a = j3 * (-dq / 48);
        b = (g.G * j4 % H) * (-dq / 1728);
    }
    a = a % H;
    b = b % H;
    const QPoly disc = (((a * a % H) * a * 4 + b * b * 27) * mpq_class(-16)) % H;
    const mpq_class sign = (d % 2 == 0) ? 1 : -1;
    const QPoly expected = monomial(8, sign * dq * dq * dq) % H;
    QcurveModel m{d, D, H, {a}, {b}, {disc}, {expected}, disc == expected};
    if (!m.discriminant_verified)
        fail(ErrorKind::Inconsistent, "model discriminant differs from (-1)^d d^3 j^8");
    return m;
}

QuadElem qcurve_hecke(std::int64_t d, const mpq_class &u, const mpq_class &v)
{
    require_supported(d);
    const Discriminant disc = Discriminant::make(disc_of(d));
    const mpq_class U = 2 * u, V = 2 * v;
    if (U.get_den() != 1 || V.get_den() != 1)
        fail(ErrorKind::InvalidArgument, "u and v must be half-integers");
    const QuadElem lambda(disc, U.get_num(), V.get_num());
    const mpz_class q = lambda.norm();
    if (q % 2 == 0 || !is_probable_prime(q))
        fail(ErrorKind::Precondition, "norm of lambda must be an odd prime");
    if (mod(q, mpz_class(static_cast<long>(d))) == 0)
        fail(ErrorKind::Precondition, "norm of lambda must be prime to d", Reason::Ramified);
    int sign;
    if (d % 4 == 3) {
        sign = jacobi(lambda.twice_u() * 2, mpz_class(static_cast<long>(d)));
    } else {
        const mpz_class uu = lambda.twice_u() / 2;
        const mpz_class half(static_cast<long>(d / 2));
        const mpz_class dz(static_cast<long>(d));
        if (d % 8 == 6) {
            const mpz_class e = (q - 1) * (q + dz + 11) / 16;
            sign = (e % 2 == 0 ? 1 : -1) * jacobi(uu, half);
        } else {
            const mpz_class e1 = (uu - 1) / 2;
            const mpz_class e2 = (q - 1) * (q + dz + 3) / 16;
            sign = (mod(e1, 2) == 0 ? 1 : -1) * (e2 % 2 == 0 ? 1 : -1) * jacobi(uu, half);
        }
    }
    return sign == 1 ? lambda : -lambda;
}

QcurveReport qcurve_crosscheck(std::int64_t d, const mpz_class &p)
{
    const QcurveModel m = qcurve_model(d);
    const Discriminant disc = Discriminant::make(m.D);
    if (p <= 3 || !is_probable_prime(p))
        fail(ErrorKind::InvalidArgument, "p must be a prime greater than 3");
    if (mod(mpz_class(static_cast<long>(2 * d)), p) == 0)
        fail(ErrorKind::Precondition, "p divides 2d", Reason::Ramified);
    QuadElem lambda = good_generator(disc, p);

    const FpPoly Hp = FpPoly::from_qpoly(m.H, p);
    const auto roots = roots_mod_p(Hp);
    if (roots.empty())
        fail(ErrorKind::NoSolution, "class polynomial has no root mod p", Reason::NoRoot);
    const mpz_class j0 = roots.front();
    const mpz_class s = sqrt_mod_p(-mpz_class(static_cast<long>(d)), p);

    const QPoly dH = m.H.derivative();
    auto reduce = [&](const QPoly &f) {
        try {
            return f.eval_mod(j0, p);
        } catch (const Error &e) {
            if (e.reason() != Reason::BadReduction)
                throw;
        }
        const mpz_class den = dH.eval_mod(j0, p);
        if (den == 0)
            fail(ErrorKind::Precondition, "p divides the class polynomial's discriminant", Reason::BadReduction);
        const QPoly num = (f * dH) % m.H;
        return mod(num.eval_mod(j0, p) * invm(den, p), p);
    };
    const CurveFp reduced = CurveFp::make(p, reduce(m.a.poly), reduce(m.b.poly));

    if (mod(lambda.twice_u() + lambda.twice_v() * s, p) != 0)
        lambda = lambda.conj();
    const int beta = legendre(s, p);
    const Mu4 eps = epsilon_tau(lambda);
    if (!eps.is_real())
        fail(ErrorKind::Inconsistent, "epsilon is not real for a Q-curve discriminant");
    const mpz_class trace_main = beta * eps.sign() * lambda.trace();
    const QuadElem psi = qcurve_hecke(d, lambda.u(), lambda.v());
    const mpz_class trace_hecke = psi.trace();

    const FrobeniusData fd = frobenius_trace(disc, reduced, j0, s);
    std::optional<mpz_class> naive;
    if (p < kNaiveLimit)
        naive = p + 1 - naive_count(reduced);

    QcurveReport r{d, p, j0, s, reduced, lambda, beta, eps, trace_main, trace_hecke, fd.trace, naive, false};
    r.agree = trace_main == trace_hecke && trace_main == fd.trace && (!naive || *naive == trace_main);
    return r;
}

LongWeierstrass conductor3_unit_model()
{
    const std::int64_t m = 33;
    return LongWeierstrass{
        QuadFieldElem(m, 0, 0),
        QuadFieldElem(m, mpq_class(-7, 2), mpq_class(-1, 2)),
        QuadFieldElem(m, 1, 0),
        QuadFieldElem(m, mpq_class(-2487, 2), mpq_class(-433, 2)),
        QuadFieldElem(m, -21416, -3728),
    };
}

} // namespace cmcount
