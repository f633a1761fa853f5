// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Integer and modular arithmetic: residue symbols, square roots mod p,
// and norm-equation solving for imaginary quadratic orders.

#ifndef CMCOUNT_BIGARITH_HPP
#define CMCOUNT_BIGARITH_HPP

#include <cstdint>

#include <gmpxx.h>

namespace cmcount {

/// Least non-negative residue of a mod m (m > 0).
mpz_class mod(const mpz_class &a, const mpz_class &m);

mpz_class powm(const mpz_class &base, const mpz_class &exp, const mpz_class &m);

/// Inverse of a mod m; throws Precondition if gcd(a, m) != 1.
mpz_class invm(const mpz_class &a, const mpz_class &m);

bool is_probable_prime(const mpz_class &n);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const mpz_class &a, const mpz_class &n);

/// Legendre symbol for an odd prime p (0 when p | a).
int legendre(const mpz_class &a, const mpz_class &p);

/// An element of mu_n, stored as the exponent of the canonical primitive
/// n-th root of unity mod p (the smallest one in [1, p)).
struct SymbolValue {
    unsigned order = 2;
    unsigned exponent = 0;

    /// +1 / -1 for order-2 symbols; throws for other orders.
    int sign() const;
    bool operator==(const SymbolValue &) const = default;
};

/// Smallest primitive n-th root of unity mod p, n in {2, 3, 4, 6}, p = 1 mod n.
mpz_class canonical_root_of_unity(unsigned n, const mpz_class &p);

/// The n-th power residue symbol (a/p)_n for a degree-1 prime: the unique
/// mu_n element congruent to a^((p-1)/n).
SymbolValue power_residue_symbol(const mpz_class &a, const mpz_class &p, unsigned n);

/// r with r^2 = a (mod p), 0 <= r < p, the smaller of the two roots.
mpz_class sqrt_mod_p(const mpz_class &a, const mpz_class &p);

/// Solution of N(u + v sqrt(-d)) = p in doubled coordinates (2u, 2v).
struct NormSolution {
    mpz_class twice_u;
    mpz_class twice_v;
};

/// Cornacchia's descent for the order of discriminant D < 0.
///
/// For odd D solves X^2 + |D| Y^2 = 4p (u = X/2, v = Y/2); for even D solves
/// u^2 + (|D|/4) v^2 = p. Returns u >= 0, v >= 0. Throws NoSolution with
/// reason Inert, Ramified or NonPrincipal.
NormSolution cornacchia(std::int64_t D, const mpz_class &p);

} // namespace cmcount

#endif
