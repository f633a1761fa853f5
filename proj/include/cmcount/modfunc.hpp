// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_MODFUNC_HPP
#define CMCOUNT_MODFUNC_HPP

#include <array>

#include "cmcount/bigfloat.hpp"
#include "cmcount/quadorder.hpp"

namespace cmcount {

/// A point moved into the standard fundamental domain:
/// tau = g(tau_red) with g = {a, b, c, d} in SL2(Z).
struct ReducedPoint {
    BigComplex tau_red;
    std::array<long, 4> g{1, 0, 0, 1};
    /// eta(tau) = eta_factor * eta(tau_red).
    BigComplex eta_factor;
};

/// Throws Domain unless Im tau > 0.
ReducedPoint reduce_point(const BigComplex &tau, long prec);

/// Dedekind eta.
BigComplex eta(const BigComplex &tau, long prec);

/// Normalized Eisenstein series E4 and E6.
std::array<BigComplex, 2> eisenstein(const BigComplex &tau, long prec);

/// j via theta constants (independent of the eta/Eisenstein route).
BigComplex j_invariant(const BigComplex &tau, long prec);

struct WeberValues {
    BigComplex eta;
    BigComplex gamma2;
    BigComplex gamma3;
    BigComplex j;
    /// |gamma2^3 - j| and |gamma3^2 - (j - 1728)|.
    BigReal residual2;
    BigReal residual3;
};

/// gamma2 = E4/eta^8, gamma3 = E6/eta^12 and j at tau.
WeberValues weber_values(const BigComplex &tau, long prec);

/// gamma3 alone.
BigComplex gamma3(const BigComplex &tau, long prec);

/// Numerical value of r tau_D + s.
BigComplex cm_point_value(const CmPoint &pt, long prec);

/// Working precision used internally for a point with the given imaginary part.
long working_precision(long prec, double im_tau);

} // namespace cmcount

#endif
