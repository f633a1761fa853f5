// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_COUNTING_HPP
#define CMCOUNT_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmcount/epsilon.hpp"
#include "cmcount/quadorder.hpp"

namespace cmcount {

/// y^2 = x^3 + a x + b over F_p, p > 3 prime.
struct CurveFp {
    mpz_class p, a, b;

    /// Reduces a, b into [0, p) and checks p and 4a^3 + 27b^2 != 0.
    static CurveFp make(const mpz_class &p, const mpz_class &a, const mpz_class &b);
    /// -16 (4a^3 + 27b^2) mod p.
    mpz_class discriminant() const;
    mpz_class j_invariant() const;
    /// y^2 = x^3 + c^2 a x + c^3 b.
    CurveFp twist(const mpz_class &c) const;
};

enum class Branch { Odd, FourOrEight, ZeroOrTwelve, J1728, J0, OneMod4 };

std::string to_string(Branch b);

/// Result of a point count from the closed formulas.
struct FrobeniusData {
    QuadElem lambda;
    Mu4 epsilon;
    Mu4 W;
    mpz_class trace;
    mpz_class count;
    Branch branch;
    /// Residue-field data: root of the class polynomial and image of sqrt(-d).
    mpz_class j0, s;
};

/// Upper limit (exclusive) on p for the enumeration oracle.
inline const mpz_class kNaiveLimit{10000000};

/// p + 1 + sum of Legendre symbols. Throws Resource for p >= 10^7.
mpz_class naive_count(const CurveFp &curve);
/// Raw enumeration: any odd prime p, no nonsingularity check.
mpz_class naive_count(const mpz_class &p, const mpz_class &a, const mpz_class &b);

/// Count of a curve with j = j0, where j0 is a root of H_D mod p and s^2 = -d.
FrobeniusData frobenius_trace(const Discriminant &disc, const CurveFp &curve, const mpz_class &j0,
                              const mpz_class &s);

/// Same with j0 = j(curve) and the smaller square root of -d.
FrobeniusData frobenius_trace(const Discriminant &disc, const CurveFp &curve);

/// Image of gamma3(tau_D) (odd D) or i*gamma3(tau_D) (D = 4, 8 mod 16) at the
/// degree-one prime given by (j0, s).
mpz_class gamma3_image(const Discriminant &disc, const mpz_class &p, const mpz_class &j0, const mpz_class &s);

/// Image of i at the prime (j0, s) for D = 0, 12 (mod 16).
mpz_class i_image(const Discriminant &disc, const mpz_class &p, const mpz_class &j0, const mpz_class &s);

enum class SpecialJ { J1728, J0 };

/// y^2 = x^3 - a x (J1728, curve.b must be 0) or y^2 = x^3 + 16 b (J0, curve.a must be 0).
FrobeniusData count_special(const CurveFp &curve, SpecialJ which);

/// The associate of lambda in Z[i] congruent to 1 mod 2+2i.
QuadElem primary_gaussian(const QuadElem &lambda);
/// The associate of lambda in Z[(1+sqrt(-3))/2] congruent to 1 mod 3.
QuadElem primary_eisenstein(const QuadElem &lambda);

/// Count for p = 1 (mod 4) from u and the quartic symbol of the discriminant.
FrobeniusData count_1mod4(const Discriminant &disc, const CurveFp &curve);

/// lambda normalized as required by count_1mod4.
QuadElem normalize_1mod4(const Discriminant &disc, const mpz_class &p);

struct Certificate {
    std::uint64_t seed = 0;
    int points_checked = 0;
    bool passed = false;
    std::optional<mpz_class> naive;
};

struct Construction {
    CurveFp curve;
    FrobeniusData data;
    bool twisted = false;
    Certificate certificate;
};

/// Builds a curve over F_p with CM by the order of disc and the requested trace.
Construction cm_construct(const Discriminant &disc, const mpz_class &p, const mpz_class &trace,
                          std::uint64_t seed = 1);
Construction cm_construct_count(const Discriminant &disc, const mpz_class &p, const mpz_class &count,
                                std::uint64_t seed = 1);

/// Checks [n]P = O for `points` random points; returns the number that passed.
int check_order(const CurveFp &curve, const mpz_class &n, int points, std::uint64_t seed);

/// Affine point arithmetic, exposed for tests.
struct PointFp {
    mpz_class x, y;
    bool infinity = true;
};
PointFp ec_add(const CurveFp &curve, const PointFp &P, const PointFp &Q);
PointFp ec_mul(const CurveFp &curve, const mpz_class &n, const PointFp &P);
PointFp random_point(const CurveFp &curve, std::mt19937_64 &rng);

} // namespace cmcount

#endif
