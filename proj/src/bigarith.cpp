// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/bigarith.hpp"

#include <string>
#include <utility>

#include "cmcount/errors.hpp"

namespace cmcount {

mpz_class mod(const mpz_class &a, const mpz_class &m)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class powm(const mpz_class &base, const mpz_class &exp, const mpz_class &m)
{
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invm(const mpz_class &a, const mpz_class &m)
{
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::Precondition, a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

bool is_probable_prime(const mpz_class &n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

int jacobi(const mpz_class &a_in, const mpz_class &n_in)
{
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
        fail(ErrorKind::InvalidArgument, "jacobi: modulus must be odd and positive, got " + n_in.get_str());

    mpz_class n = n_in;
    mpz_class a = mod(a_in, n);
    int result = 1;
    while (a != 0) {
        unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
        if (twos != 0) {
            a >>= twos;
            unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if ((twos & 1) && (n8 == 3 || n8 == 5))
                result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        a = mod(a, n);
    }
    return n == 1 ? result : 0;
}

int legendre(const mpz_class &a, const mpz_class &p)
{
    return jacobi(a, p);
}

int SymbolValue::sign() const
{
    if (order != 2)
        fail(ErrorKind::InvalidArgument, "sign() requires an order-2 symbol");
    return exponent == 0 ? 1 : -1;
}

namespace {

void require_odd_prime(const mpz_class &p, const char *who)
{
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p))
        fail(ErrorKind::InvalidArgument, std::string(who) + ": " + p.get_str() + " is not an odd prime");
}

} // namespace

mpz_class sqrt_mod_p(const mpz_class &a_in, const mpz_class &p)
{
    require_odd_prime(p, "sqrt_mod_p");
    mpz_class a = mod(a_in, p);
    if (a == 0)
        return 0;
    int leg = legendre(a, p);
    if (leg != 1)
        fail(ErrorKind::NoSolution,
             a.get_str() + " is a nonresidue mod " + p.get_str() + " (legendre = " + std::to_string(leg) + ")",
             Reason::NonResidue);

    mpz_class r;
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
        r = powm(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        mpz_class q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        q >>= s;
        mpz_class z = 2;
        while (legendre(z, p) != -1)
            ++z;
        mpz_class c = powm(z, q, p);
        mpz_class t = powm(a, q, p);
        r = powm(a, (q + 1) / 2, p);
        unsigned long m = s;
        while (t != 1) {
            unsigned long i = 0;
            mpz_class t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            mpz_class b = c;
            for (unsigned long k = 0; k + i + 1 < m; ++k)
                b = b * b % p;
            r = r * b % p;
            c = b * b % p;
            t = t * c % p;
            m = i;
        }
    }
    mpz_class other = p - r;
    return other < r ? other : r;
}

mpz_class canonical_root_of_unity(unsigned n, const mpz_class &p)
{
    require_odd_prime(p, "canonical_root_of_unity");
    if (n != 2 && n != 3 && n != 4 && n != 6)
        fail(ErrorKind::InvalidArgument, "root of unity order must be 2, 3, 4 or 6");
    if (mpz_fdiv_ui(p.get_mpz_t(), n) != 1)
        fail(ErrorKind::Precondition, "p = " + p.get_str() + " is not 1 mod " + std::to_string(n));

    mpz_class r1, r2;
    if (n == 2) {
        return p - 1;
    } else if (n == 4) {
        r1 = sqrt_mod_p(-1, p);
        r2 = p - r1;
    } else {
        mpz_class s = sqrt_mod_p(-3, p);
        mpz_class half = invm(2, p);
        mpz_class shift = (n == 3) ? mpz_class(-1) : mpz_class(1);
        r1 = mod((shift + s) * half, p);
        r2 = mod((shift - s) * half, p);
    }
    return r1 < r2 ? r1 : r2;
}

SymbolValue power_residue_symbol(const mpz_class &a, const mpz_class &p, unsigned n)
{
    require_odd_prime(p, "power_residue_symbol");
    if (n != 2 && n != 3 && n != 4 && n != 6)
        fail(ErrorKind::InvalidArgument, "power residue symbol order must be 2, 3, 4 or 6");
    if (n > 2 && mpz_fdiv_ui(p.get_mpz_t(), n) != 1)
        fail(ErrorKind::Precondition, "p = " + p.get_str() + " is not 1 mod " + std::to_string(n));
    mpz_class ar = mod(a, p);
    if (ar == 0)
        fail(ErrorKind::Precondition, "power residue symbol of an argument divisible by p");

    mpz_class c = powm(ar, (p - 1) / n, p);
    mpz_class zeta = canonical_root_of_unity(n, p);
    mpz_class cur = 1;
    for (unsigned k = 0; k < n; ++k) {
        if (cur == c)
            return SymbolValue{n, k};
        cur = cur * zeta % p;
    }
    fail(ErrorKind::Inconsistent, "power residue not in mu_n; is p prime?");
}

NormSolution cornacchia(std::int64_t D, const mpz_class &p)
{
    if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
        fail(ErrorKind::InvalidArgument, "invalid discriminant " + std::to_string(D));
    require_odd_prime(p, "cornacchia");

    const mpz_class Dz = static_cast<long>(D);
    if (mod(Dz, p) == 0)
        fail(ErrorKind::NoSolution, p.get_str() + " is ramified for discriminant " + std::to_string(D), Reason::Ramified);
    if (legendre(Dz, p) != 1)
        fail(ErrorKind::NoSolution, p.get_str() + " is inert for discriminant " + std::to_string(D), Reason::Inert);

    const bool odd = (D & 1) != 0;
    const mpz_class absD = -Dz;
    const mpz_class d = odd ? absD : absD / 4;
    const mpz_class target = odd ? mpz_class(4 * p) : p;

    mpz_class r = sqrt_mod_p(odd ? Dz : mpz_class(-d), p);
    mpz_class a, b;
    if (odd) {
        if (mpz_odd_p(r.get_mpz_t()) != mpz_odd_p(Dz.get_mpz_t()))
            r = p - r;
        a = 2 * p;
    } else {
        if (2 * r < p)
            r = p - r;
        a = p;
    }
    b = r;
    mpz_class limit;
    mpz_sqrt(limit.get_mpz_t(), target.get_mpz_t());
    while (b > limit) {
        mpz_class t = a % b;
        a = b;
        b = t;
    }
    mpz_class rest = target - b * b;
    const mpz_class &coef = odd ? absD : d;
    if (rest >= 0 && mpz_divisible_p(rest.get_mpz_t(), coef.get_mpz_t())) {
        mpz_class c = rest / coef;
        if (mpz_perfect_square_p(c.get_mpz_t())) {
            mpz_class v;
            mpz_sqrt(v.get_mpz_t(), c.get_mpz_t());
            if (odd)
                return NormSolution{b, v};
            return NormSolution{2 * b, 2 * v};
        }
    }
    fail(ErrorKind::NoSolution,
         p.get_str() + " splits for discriminant " + std::to_string(D) + " but is not represented by the principal form",
         Reason::NonPrincipal);
}

} // namespace cmcount
