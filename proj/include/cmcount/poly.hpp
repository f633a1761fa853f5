// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Dense univariate polynomials over Q and over F_p.

#ifndef CMCOUNT_POLY_HPP
#define CMCOUNT_POLY_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cmcount {

/// Polynomial with rational coefficients, c[k] is the coefficient of x^k.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    static QPoly constant(const mpq_class &c);
    static QPoly x_minus(const mpq_class &a);
    static QPoly from_integers(const std::vector<mpz_class> &coeffs);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class> &coeffs() const { return c_; }
    mpq_class coeff(long k) const;
    const mpq_class &lead() const { return c_.back(); }

    QPoly operator+(const QPoly &o) const;
    QPoly operator-(const QPoly &o) const;
    QPoly operator*(const QPoly &o) const;
    QPoly operator*(const mpq_class &s) const;
    QPoly operator-() const;
    bool operator==(const QPoly &o) const { return c_ == o.c_; }

    /// Quotient and remainder; throws on division by zero.
    std::pair<QPoly, QPoly> divmod(const QPoly &m) const;
    QPoly operator%(const QPoly &m) const { return divmod(m).second; }
    QPoly derivative() const;
    mpq_class eval(const mpq_class &x) const;
    /// Evaluation in F_p; throws Precondition if p divides a denominator.
    mpz_class eval_mod(const mpz_class &x, const mpz_class &p) const;
    /// Least common multiple of coefficient denominators.
    mpz_class denominator() const;
    bool is_integral() const;
    std::vector<mpz_class> integer_coeffs() const;

    /// Human rendering such as "x^3 + 3491750*x^2 - 5151296875*x + 12771880859375".
    std::string to_string(const std::string &var = "x") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Inverse of a modulo m (gcd must be 1); throws Precondition otherwise.
QPoly inverse_mod(const QPoly &a, const QPoly &m);

/// Polynomials over F_p with coefficients in [0, p).
class FpPoly {
public:
    FpPoly(mpz_class p, std::vector<mpz_class> coeffs = {});
    static FpPoly from_qpoly(const QPoly &q, const mpz_class &p);
    static FpPoly x(const mpz_class &p);

    const mpz_class &p() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class> &coeffs() const { return c_; }

    FpPoly operator+(const FpPoly &o) const;
    FpPoly operator-(const FpPoly &o) const;
    FpPoly operator*(const FpPoly &o) const;
    std::pair<FpPoly, FpPoly> divmod(const FpPoly &m) const;
    FpPoly operator%(const FpPoly &m) const { return divmod(m).second; }
    FpPoly monic() const;
    FpPoly derivative() const;
    mpz_class eval(const mpz_class &x) const;
    /// base^e mod m.
    FpPoly powmod(const mpz_class &e, const FpPoly &m) const;

private:
    void trim();
    mpz_class p_;
    std::vector<mpz_class> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);

/// Distinct roots in F_p of f, sorted ascending (equal-degree splitting with
/// a deterministic generator).
std::vector<mpz_class> roots_mod_p(const FpPoly &f, std::mt19937_64 &rng);
std::vector<mpz_class> roots_mod_p(const FpPoly &f);

} // namespace cmcount

#endif
