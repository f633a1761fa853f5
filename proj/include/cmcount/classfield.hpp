// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_CLASSFIELD_HPP
#define CMCOUNT_CLASSFIELD_HPP

#include <cstdint>
#include <vector>

#include "cmcount/poly.hpp"
#include "cmcount/quadorder.hpp"

namespace cmcount {

/// Reduced primitive forms of discriminant D, sorted lexicographically.
std::vector<BinaryForm> reduced_forms(std::int64_t D);

/// Default upper bound on the class number accepted by the polynomial routines.
constexpr std::size_t kDefaultClassNumberBound = 64;

/// Monic integer polynomial whose roots are the j-invariants of the classes of D.
struct ClassPoly {
    std::int64_t D = 0;
    /// Coefficients from the constant term up; the last one is 1.
    std::vector<mpz_class> coeffs;
    /// Precision (bits) at which the coefficients first rounded cleanly,
    /// and the doubled precision that reproduced them.
    long precision = 0;
    long confirm_precision = 0;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    QPoly as_qpoly() const { return QPoly::from_integers(coeffs); }
};

/// Computes (and caches) the class polynomial. Throws Resource when the class
/// number exceeds `bound`.
const ClassPoly &hilbert_class_poly(std::int64_t D, std::size_t bound = kDefaultClassNumberBound);

enum class GammaMode {
    /// G(j) = sqrt(D) gamma3, D odd.
    Odd,
    /// G(j) = sqrt(-D) gamma3, D = 4, 8 (mod 16).
    Even,
};

/// G in Q[x] (degree < h) with G(j(tau_D)) = radical * gamma3(tau_D).
struct GammaExpr {
    std::int64_t D = 0;
    GammaMode mode = GammaMode::Odd;
    QPoly G;
    /// G * H' mod H, which has integer coefficients.
    QPoly G_times_derivative;
    /// Sign applied to each reduced form's value (1 or -1), in form order.
    std::vector<int> signs;
    long precision = 0;
};

/// Throws Precondition (mode error) for D = 0, 12 (mod 16) and D = -3, -4.
const GammaExpr &gamma3_poly(std::int64_t D);

/// P in Q[x] with P(j(tau_D)) = sqrt(d) for D = 0, 12 (mod 16).
struct GenusRadical {
    std::int64_t D = 0;
    QPoly P;
    /// Genus character value per reduced form.
    std::vector<int> characters;
};

const GenusRadical &genus_radical(std::int64_t D);

/// An odd integer m > 0 coprime to D represented by the form.
std::int64_t odd_represented_value(const BinaryForm &form);

} // namespace cmcount

#endif
