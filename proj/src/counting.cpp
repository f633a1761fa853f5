// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/counting.hpp"

#include "cmcount/bigarith.hpp"
#include "cmcount/classfield.hpp"
#include "cmcount/errors.hpp"
#include "cmcount/poly.hpp"

namespace cmcount {

namespace {

void require_prime_field(const mpz_class &p)
{
    if (p <= 3 || !is_probable_prime(p))
        fail(ErrorKind::InvalidArgument, "p must be a prime greater than 3");
}

mpz_class D_mod(const Discriminant &disc, const mpz_class &p)
{
    return mod(mpz_class(static_cast<long>(disc.value())), p);
}

int legendre_u64(std::uint64_t a, std::uint64_t n)
{
    // binary Jacobi for odd n
    a %= n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

void check_hasse(const mpz_class &trace, const mpz_class &p)
{
    if (trace * trace > 4 * p)
        fail(ErrorKind::Inconsistent, "trace " + trace.get_str() + " violates the Hasse bound");
}

void check_ordinary(const mpz_class &trace, const mpz_class &p)
{
    if (mod(trace, p) == 0)
        fail(ErrorKind::Precondition, "supersingular reduction: the curve has p+1 points", Reason::Supersingular);
}

/// Value of a polynomial from the class-field module at j0, falling back to
/// numerator / H'(j0) when p divides a denominator.
mpz_class eval_with_fallback(const QPoly &value, const QPoly &numerator, std::int64_t D, const mpz_class &p,
                             const mpz_class &j0)
{
    try {
        return value.eval_mod(j0, p);
    } catch (const Error &e) {
        if (e.reason() != Reason::BadReduction)
            throw;
    }
    const QPoly dH = hilbert_class_poly(D).as_qpoly().derivative();
    const mpz_class den = dH.eval_mod(j0, p);
    if (den == 0)
        fail(ErrorKind::Precondition, "p divides the class polynomial's discriminant at this root",
             Reason::BadReduction);
    return mod(numerator.eval_mod(j0, p) * invm(den, p), p);
}

mpz_class trace_of(const QuadElem &lambda, Mu4 unit)
{
    if (!unit.is_real())
        fail(ErrorKind::Inconsistent, "W * epsilon is not real");
    return unit.sign() * lambda.trace();
}

} // namespace

CurveFp CurveFp::make(const mpz_class &p, const mpz_class &a, const mpz_class &b)
{
    require_prime_field(p);
    CurveFp c{p, mod(a, p), mod(b, p)};
    if (mod(4 * c.a * c.a * c.a + 27 * c.b * c.b, p) == 0)
        fail(ErrorKind::InvalidArgument, "singular curve (4a^3 + 27b^2 = 0 mod p)");
    return c;
}

mpz_class CurveFp::discriminant() const
{
    return mod(-16 * (4 * a * a * a + 27 * b * b), p);
}

mpz_class CurveFp::j_invariant() const
{
    const mpz_class num = 1728 * 4 * a * a * a;
    const mpz_class den = 4 * a * a * a + 27 * b * b;
    return mod(num * invm(mod(den, p), p), p);
}

CurveFp CurveFp::twist(const mpz_class &c) const
{
    return make(p, c * c * a, c * c * c * b);
}

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::Odd:
        return "odd";
    case Branch::FourOrEight:
        return "4or8";
    case Branch::ZeroOrTwelve:
        return "0or12";
    case Branch::J1728:
        return "j1728";
    case Branch::J0:
        return "j0";
    case Branch::OneMod4:
        return "onemod4";
    }
    return "?";
}

mpz_class naive_count(const CurveFp &curve)
{
    return naive_count(curve.p, curve.a, curve.b);
}

mpz_class naive_count(const mpz_class &P, const mpz_class &A, const mpz_class &B)
{
    if (P < 3 || !is_probable_prime(P))
        fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (P >= kNaiveLimit)
        fail(ErrorKind::Resource, "naive count is limited to p < 10^7");
    const std::uint64_t p = P.get_ui();
    const std::uint64_t a = mod(A, P).get_ui();
    const std::uint64_t b = mod(B, P).get_ui();
    long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t f = ((x * x % p) * x + a * x + b) % p;
        sum += legendre_u64(f, p);
    }
    return P + 1 + sum;
}

mpz_class gamma3_image(const Discriminant &disc, const mpz_class &p, const mpz_class &j0, const mpz_class &s)
{
    const GammaExpr &G = gamma3_poly(disc.value());
    const mpz_class g = eval_with_fallback(G.G, G.G_times_derivative, disc.value(), p, j0);
    if (G.mode == GammaMode::Odd)
        return mod(g * invm(s, p), p);
    // i gamma3 = G sqrt(-d) / (2d)
    return mod(g * s * invm(mpz_class(2 * disc.d()), p), p);
}

mpz_class i_image(const Discriminant &disc, const mpz_class &p, const mpz_class &j0, const mpz_class &s)
{
    const GenusRadical &gr = genus_radical(disc.value());
    const QPoly Hq = hilbert_class_poly(disc.value()).as_qpoly();
    const QPoly numerator = (gr.P * Hq.derivative()) % Hq;
    const mpz_class root_d = eval_with_fallback(gr.P, numerator, disc.value(), p, j0);
    if (root_d == 0)
        fail(ErrorKind::Precondition, "sqrt(d) vanishes at this prime", Reason::BadReduction);
    const mpz_class iota = mod(s * invm(root_d, p), p);
    if (mod(iota * iota + 1, p) != 0)
        fail(ErrorKind::Inconsistent, "image of i does not square to -1");
    return iota;
}

FrobeniusData frobenius_trace(const Discriminant &disc, const CurveFp &curve, const mpz_class &j0,
                              const mpz_class &s)
{
    const mpz_class &p = curve.p;
    require_prime_field(p);
    if (!disc.units_are_pm1())
        fail(ErrorKind::Precondition, "D = -3, -4 use the special-j formulas", Reason::UnitGroup);
    if (D_mod(disc, p) == 0)
        fail(ErrorKind::Precondition, "p divides the discriminant", Reason::Ramified);
    if (legendre(mpz_class(static_cast<long>(disc.value())), p) != 1)
        fail(ErrorKind::NoSolution, "p is inert in the quadratic field", Reason::Inert);
    if (mod(curve.j_invariant() - j0, p) != 0)
        fail(ErrorKind::Precondition, "j(E) differs from j0");
    const FpPoly H = FpPoly::from_qpoly(hilbert_class_poly(disc.value()).as_qpoly(), p);
    if (H.eval(j0) != 0)
        fail(ErrorKind::Precondition, "j0 is not a root of the class polynomial mod p", Reason::NoRoot);
    if (mod(s * s + static_cast<long>(disc.d()), p) != 0)
        fail(ErrorKind::Precondition, "s is not a square root of -d mod p");
    if (curve.a == 0 || curve.b == 0)
        fail(ErrorKind::Precondition, "curve has j = 0 or 1728 mod p", Reason::BadReduction);

    QuadElem lambda = good_generator(disc, p);
    if (mod(lambda.twice_u() + lambda.twice_v() * s, p) != 0)
        lambda = lambda.conj();
    if (mod(lambda.twice_u() + lambda.twice_v() * s, p) != 0)
        fail(ErrorKind::Inconsistent, "generator does not lie in the prime above p");

    const Mu4 eps = epsilon_tau(lambda);
    Mu4 W;
    Branch branch;
    if (disc.is_odd()) {
        branch = Branch::Odd;
        const int l = legendre(6 * curve.b * gamma3_image(disc, p, j0, s), p);
        if (l == 0)
            fail(ErrorKind::Precondition, "6 b gamma3 vanishes mod p", Reason::BadReduction);
        W = Mu4::of(l == 1 ? 0 : 2);
    } else if (disc.is_4or8()) {
        branch = Branch::FourOrEight;
        const int l = legendre(-6 * curve.b * gamma3_image(disc, p, j0, s), p);
        if (l == 0)
            fail(ErrorKind::Precondition, "6 b i gamma3 vanishes mod p", Reason::BadReduction);
        W = Mu4::of(l == 1 ? 0 : 2);
    } else {
        branch = Branch::ZeroOrTwelve;
        if (mod(p, 4) != 1)
            fail(ErrorKind::Inconsistent, "i should lie in the residue field but p = 3 (mod 4)");
        const mpz_class arg = mod(36 * curve.b * curve.b * (j0 - 1728), p);
        if (arg == 0)
            fail(ErrorKind::Precondition, "36 b^2 (j - 1728) vanishes mod p", Reason::BadReduction);
        const SymbolValue sym = power_residue_symbol(arg, p, 4);
        const mpz_class iota = i_image(disc, p, j0, s);
        const bool same = iota == canonical_root_of_unity(4, p);
        W = Mu4::of(same ? static_cast<long>(sym.exponent) : -static_cast<long>(sym.exponent));
    }
    const mpz_class trace = trace_of(lambda, W * eps);
    check_hasse(trace, p);
    check_ordinary(trace, p);
    return FrobeniusData{lambda, eps, W, trace, p + 1 - trace, branch, mod(j0, p), mod(s, p)};
}

FrobeniusData frobenius_trace(const Discriminant &disc, const CurveFp &curve)
{
    const mpz_class d = static_cast<long>(disc.d());
    require_prime_field(curve.p);
    if (D_mod(disc, curve.p) == 0)
        fail(ErrorKind::Precondition, "p divides the discriminant", Reason::Ramified);
    if (legendre(-d, curve.p) != 1)
        fail(ErrorKind::NoSolution, "p is not split in the quadratic field", Reason::Inert);
    return frobenius_trace(disc, curve, curve.j_invariant(), sqrt_mod_p(-d, curve.p));
}

QuadElem primary_gaussian(const QuadElem &lambda)
{
    const Discriminant &disc = lambda.disc();
    const QuadElem i(disc, 0, 2);
    QuadElem cur = lambda;
    for (int k = 0; k < 4; ++k, cur = cur * i) {
        const mpz_class a = cur.twice_u() / 2 - 1;
        const mpz_class b = cur.twice_v() / 2;
        if (mod(a + b, 4) == 0 && mod(b - a, 4) == 0)
            return cur;
    }
    fail(ErrorKind::Precondition, "no associate is congruent to 1 mod 2+2i (even norm?)");
}

QuadElem primary_eisenstein(const QuadElem &lambda)
{
    const Discriminant &disc = lambda.disc();
    const QuadElem zeta6(disc, 1, 1);
    QuadElem cur = lambda;
    for (int k = 0; k < 6; ++k, cur = cur * zeta6) {
        const auto xy = cur.basis_coords();
        if (mod(xy[0] - 1, 3) == 0 && mod(xy[1], 3) == 0)
            return cur;
    }
    fail(ErrorKind::Precondition, "no associate is congruent to 1 mod 3 (norm divisible by 3?)");
}

FrobeniusData count_special(const CurveFp &curve, SpecialJ which)
{
    const mpz_class &p = curve.p;
    require_prime_field(p);
    if (which == SpecialJ::J1728) {
        if (curve.b != 0 || curve.a == 0)
            fail(ErrorKind::InvalidArgument, "expected y^2 = x^3 - a x with a != 0");
        if (mod(p, 4) != 1)
            fail(ErrorKind::Precondition, "the quartic formula needs p = 1 (mod 4)", Reason::Inert);
        const Discriminant disc = Discriminant::make(-4);
        const mpz_class iota = canonical_root_of_unity(4, p);
        QuadElem lambda = good_generator(disc, p);
        if (mod(lambda.twice_u() + lambda.twice_v() * iota, p) != 0)
            lambda = lambda.conj();
        lambda = primary_gaussian(lambda);
        const mpz_class A = mod(-curve.a, p);
        const SymbolValue sym = power_residue_symbol(A, p, 4);
        const Mu4 chi = Mu4::of(-static_cast<long>(sym.exponent));
        const QuadElem i(disc, 0, 2);
        const QuadElem psi = lambda * i.pow(static_cast<unsigned>(chi.k));
        const mpz_class trace = psi.trace();
        check_hasse(trace, p);
        return FrobeniusData{lambda, Mu4{}, chi, trace, p + 1 - trace, Branch::J1728, 1728 % p, iota};
    }
    if (curve.a != 0 || curve.b == 0)
        fail(ErrorKind::InvalidArgument, "expected y^2 = x^3 + 16 b with b != 0");
    if (mod(p, 3) != 1)
        fail(ErrorKind::Precondition, "the sextic formula needs p = 1 (mod 3)", Reason::Inert);
    const Discriminant disc = Discriminant::make(-3);
    const mpz_class zeta = canonical_root_of_unity(6, p);
    const mpz_class s3 = mod(2 * zeta - 1, p); // image of sqrt(-3)
    QuadElem lambda = good_generator(disc, p);
    if (mod(lambda.twice_u() + lambda.twice_v() * s3, p) != 0)
        lambda = lambda.conj();
    lambda = primary_eisenstein(lambda);
    const mpz_class B = mod(curve.b * invm(16, p), p);
    const SymbolValue sym = power_residue_symbol(B, p, 6);
    const unsigned k = static_cast<unsigned>((6 - sym.exponent) % 6);
    const QuadElem zeta6(disc, 1, 1);
    const QuadElem psi = lambda * zeta6.pow(k);
    const mpz_class trace = psi.trace();
    check_hasse(trace, p);
    return FrobeniusData{lambda, Mu4{}, Mu4{}, trace, p + 1 - trace, Branch::J0, 0, s3};
}

QuadElem normalize_1mod4(const Discriminant &disc, const mpz_class &p)
{
    if (mod(p, 4) != 1)
        fail(ErrorKind::Precondition, "p must be 1 (mod 4)");
    if (!((disc.is_odd() && disc.value() != -3) || disc.is_4or8()))
        fail(ErrorKind::Precondition, "D must be odd and not -3, or 4, 8 (mod 16)", Reason::ExcludedDiscriminant);
    const QuadElem lambda = good_generator(disc, p);
    for (const QuadElem &cand : {lambda, -lambda}) {
        if (disc.is_odd()) {
            if (cand.pow(3).reduce(4) == ResidueClass{disc.value(), 4, 1, 0})
                return cand;
        } else if (disc.mod16() == 4) {
            const bool flip = mod((p - 1) / 4, 2) == 1;
            const ResidueClass rc = (flip ? -cand : cand).reduce(4);
            if (rc == ResidueClass{disc.value(), 4, 1, 0} || rc == ResidueClass{disc.value(), 4, 1, 2})
                return cand;
        } else {
            const ResidueClass rc = cand.reduce(4);
            if (rc == ResidueClass{disc.value(), 4, 1, 0} || rc == ResidueClass{disc.value(), 4, 3, 2})
                return cand;
        }
    }
    fail(ErrorKind::Inconsistent, "no sign of lambda satisfies the normalization");
}

FrobeniusData count_1mod4(const Discriminant &disc, const CurveFp &curve)
{
    const mpz_class &p = curve.p;
    require_prime_field(p);
    if (mod(p, 4) != 1)
        fail(ErrorKind::Precondition, "p must be 1 (mod 4)");
    const QuadElem lambda = normalize_1mod4(disc, p);
    const FpPoly H = FpPoly::from_qpoly(hilbert_class_poly(disc.value()).as_qpoly(), p);
    if (H.eval(curve.j_invariant()) != 0)
        fail(ErrorKind::Precondition, "j(E) is not a root of the class polynomial mod p", Reason::NoRoot);
    const mpz_class delta = curve.discriminant();
    if (legendre(delta, p) != 1)
        fail(ErrorKind::Inconsistent, "discriminant of E is not a square mod p (wrong D for this curve?)");
    const SymbolValue q = power_residue_symbol(delta, p, 4);
    if (q.exponent % 2 != 0)
        fail(ErrorKind::Inconsistent, "quartic symbol of a square is not real");
    const Mu4 W = Mu4::of(q.exponent);
    const mpz_class trace = W.sign() * lambda.trace();
    check_hasse(trace, p);
    check_ordinary(trace, p);
    return FrobeniusData{lambda, Mu4{}, W, trace, p + 1 - trace, Branch::OneMod4, curve.j_invariant(), 0};
}

PointFp ec_add(const CurveFp &c, const PointFp &P, const PointFp &Q)
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    const mpz_class &p = c.p;
    mpz_class lam;
    if (P.x == Q.x) {
        if (mod(P.y + Q.y, p) == 0)
            return PointFp{};
        lam = mod((3 * P.x * P.x + c.a) * invm(mod(2 * P.y, p), p), p);
    } else {
        lam = mod((Q.y - P.y) * invm(mod(Q.x - P.x, p), p), p);
    }
    const mpz_class x = mod(lam * lam - P.x - Q.x, p);
    const mpz_class y = mod(lam * (P.x - x) - P.y, p);
    return PointFp{x, y, false};
}

PointFp ec_mul(const CurveFp &c, const mpz_class &n, const PointFp &P)
{
    mpz_class k = n;
    PointFp base = P;
    if (k < 0) {
        k = -k;
        base.y = mod(-base.y, c.p);
    }
    PointFp acc;
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = ec_add(c, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i))
            acc = ec_add(c, acc, base);
    }
    return acc;
}

PointFp random_point(const CurveFp &c, std::mt19937_64 &rng)
{
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(rng()));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const mpz_class x = gen.get_z_range(c.p);
        const mpz_class f = mod(x * x * x + c.a * x + c.b, c.p);
        if (f == 0)
            return PointFp{x, 0, false};
        if (legendre(f, c.p) == 1) {
            mpz_class y = sqrt_mod_p(f, c.p);
            if (rng() & 1)
                y = c.p - y;
            return PointFp{x, y, false};
        }
    }
    fail(ErrorKind::Inconsistent, "could not find a random point");
}

int check_order(const CurveFp &curve, const mpz_class &n, int points, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    int ok = 0;
    for (int i = 0; i < points; ++i)
        if (ec_mul(curve, n, random_point(curve, rng)).infinity)
            ++ok;
    return ok;
}

namespace {

constexpr int kCertificatePoints = 20;
const mpz_class kCertificateNaiveLimit{1000000};

Certificate certify(const CurveFp &curve, const mpz_class &count, std::uint64_t seed)
{
    Certificate cert;
    cert.seed = seed;
    cert.points_checked = kCertificatePoints;
    cert.passed = check_order(curve, count, kCertificatePoints, seed) == kCertificatePoints;
    if (curve.p < kCertificateNaiveLimit) {
        cert.naive = naive_count(curve);
        cert.passed = cert.passed && *cert.naive == count;
    }
    if (!cert.passed)
        fail(ErrorKind::Inconsistent, "constructed curve failed its certificate");
    return cert;
}

mpz_class smallest_nonresidue(const mpz_class &p)
{
    for (mpz_class c = 2;; ++c)
        if (legendre(c, p) == -1)
            return c;
}

Construction construct_special(const Discriminant &disc, const mpz_class &p, const mpz_class &trace,
                               std::uint64_t seed)
{
    const bool j1728 = disc.value() == -4;
    for (long c = 1; c < 1000; ++c) {
        const CurveFp curve = j1728 ? CurveFp::make(p, -c, 0) : CurveFp::make(p, 0, 16 * c);
        const FrobeniusData fd = count_special(curve, j1728 ? SpecialJ::J1728 : SpecialJ::J0);
        if (fd.trace == trace)
            return Construction{curve, fd, c != 1, certify(curve, fd.count, seed)};
    }
    fail(ErrorKind::Precondition, "requested trace is not attained by any twist", Reason::Infeasible);
}

} // namespace

Construction cm_construct(const Discriminant &disc, const mpz_class &p, const mpz_class &trace,
                          std::uint64_t seed)
{
    require_prime_field(p);
    if (trace * trace > 4 * p)
        fail(ErrorKind::Precondition, "requested trace violates the Hasse bound", Reason::Infeasible);
    if (D_mod(disc, p) == 0)
        fail(ErrorKind::Precondition, "p divides the discriminant", Reason::Ramified);
    std::vector<mpz_class> roots;
    if (disc.units_are_pm1()) {
        if (legendre(-mpz_class(static_cast<long>(disc.d())), p) != 1)
            fail(ErrorKind::NoSolution, "p is inert in the quadratic field", Reason::Inert);
        roots = roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(disc.value()).as_qpoly(), p));
        if (roots.empty())
            fail(ErrorKind::NoSolution, "class polynomial has no root mod p", Reason::NoRoot);
    }
    const QuadElem lambda = good_generator(disc, p);
    if (abs(trace) != abs(lambda.trace()))
        fail(ErrorKind::Precondition,
             "requested |trace| " + mpz_class(abs(trace)).get_str() + " differs from |Tr(lambda)| = " +
                 mpz_class(abs(lambda.trace())).get_str(),
             Reason::Infeasible);
    if (!disc.units_are_pm1())
        return construct_special(disc, p, trace, seed);

    const mpz_class s = sqrt_mod_p(-mpz_class(static_cast<long>(disc.d())), p);
    for (const auto &j0 : roots) {
        if (j0 == 0 || j0 == mod(mpz_class(1728), p))
            continue;
        const mpz_class k = mod(1728 - j0, p);
        CurveFp curve = CurveFp::make(p, 3 * j0 * k, 2 * j0 * k * k);
        FrobeniusData fd = frobenius_trace(disc, curve, j0, s);
        bool twisted = false;
        if (fd.trace != trace) {
            curve = curve.twist(smallest_nonresidue(p));
            fd = frobenius_trace(disc, curve, j0, s);
            twisted = true;
        }
        if (fd.trace != trace)
            fail(ErrorKind::Inconsistent, "twisting did not produce the requested trace");
        return Construction{curve, fd, twisted, certify(curve, fd.count, seed)};
    }
    fail(ErrorKind::NoSolution, "every root of the class polynomial is 0 or 1728 mod p", Reason::NoRoot);
}

Construction cm_construct_count(const Discriminant &disc, const mpz_class &p, const mpz_class &count,
                                std::uint64_t seed)
{
    return cm_construct(disc, p, p + 1 - count, seed);
}

} // namespace cmcount
