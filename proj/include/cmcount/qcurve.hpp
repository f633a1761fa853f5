// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// CM Q-curves over Q(j) for d = 2, 3 (mod 4) and their Hecke characters.

#ifndef CMCOUNT_QCURVE_HPP
#define CMCOUNT_QCURVE_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "cmcount/counting.hpp"
#include "cmcount/epsilon.hpp"
#include "cmcount/poly.hpp"
#include "cmcount/quadorder.hpp"

namespace cmcount {

/// Element of Q(j) = Q[x]/H_D(x), kept reduced.
struct QjElem {
    QPoly poly;
};

/// y^2 = x^3 + a x + b with a, b in Q(j).
struct QcurveModel {
    std::int64_t d = 0;
    std::int64_t D = 0;
    QPoly H;
    QjElem a, b;
    /// Discriminant of the model reduced mod H, and (-1)^d d^3 j^8 reduced mod H.
    QjElem discriminant, expected_discriminant;
    bool discriminant_verified = false;
};

/// Throws InvalidArgument for non-squarefree d, Precondition
/// (ExcludedDiscriminant) for d = 1 (mod 4) and (UnitGroup) for d = 3.
QcurveModel qcurve_model(std::int64_t d);

/// psi(P) from the Jacobi-symbol formulas, for lambda = u + v sqrt(-d) of prime norm q.
QuadElem qcurve_hecke(std::int64_t d, const mpq_class &u, const mpq_class &v);

struct QcurveReport {
    std::int64_t d = 0;
    mpz_class p;
    mpz_class j0, s;
    CurveFp reduced;
    QuadElem lambda;
    /// Legendre symbol of the image of sqrt(-d).
    int beta_symbol = 0;
    Mu4 epsilon;
    mpz_class trace_main;
    mpz_class trace_hecke;
    mpz_class trace_counting;
    std::optional<mpz_class> trace_naive;
    bool agree = false;
};

/// Reduces the model at the degree-one prime (j0, s) above p and compares the traces.
QcurveReport qcurve_crosscheck(std::int64_t d, const mpz_class &p);

/// Long Weierstrass model over Q(sqrt(33)) with CM by the order of conductor 3
/// in Q(sqrt(-11)); its discriminant is a unit.
LongWeierstrass conductor3_unit_model();

} // namespace cmcount

#endif
