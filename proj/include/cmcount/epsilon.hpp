// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#ifndef CMCOUNT_EPSILON_HPP
#define CMCOUNT_EPSILON_HPP

#include <array>
#include <string>
#include <vector>

#include "cmcount/quadorder.hpp"

namespace cmcount {

/// 2x2 matrix over Z/4Z, row-major {a, b, c, d}.
struct Mat2Z4 {
    std::array<int, 4> e{1, 0, 0, 1};

    static Mat2Z4 make(long a, long b, long c, long d);
    int det() const;
    Mat2Z4 operator*(const Mat2Z4 &o) const;
    /// Inverse of a determinant-one matrix.
    Mat2Z4 inverse() const;
    bool operator==(const Mat2Z4 &) const = default;
    auto operator<=>(const Mat2Z4 &) const = default;
};

/// Element i^k of mu_4.
struct Mu4 {
    int k = 0;

    static Mu4 of(long k) { return Mu4{static_cast<int>(((k % 4) + 4) % 4)}; }
    Mu4 operator*(Mu4 o) const { return of(k + o.k); }
    Mu4 conj() const { return of(-k); }
    bool is_real() const { return (k & 1) == 0; }
    /// +1 or -1; only meaningful when is_real().
    int sign() const { return k == 0 ? 1 : -1; }
    bool operator==(const Mu4 &) const = default;

    /// "i^k".
    std::string power_string() const;
    /// "1", "i", "-1", "-i".
    std::string value_string() const;
};

/// All 48 elements of SL2(Z/4Z), sorted.
const std::vector<Mat2Z4> &sl2_z4();
/// Commutator subgroup of SL2(Z/4Z), sorted.
const std::vector<Mat2Z4> &sl2_z4_commutator();

/// The homomorphism SL2(Z/4Z) -> mu_4 sending [[1,1],[0,1]] to i.
/// Throws InvalidArgument unless det M = 1.
Mu4 phi(const Mat2Z4 &M);

/// Matrix of multiplication by lambda on the basis (tau_D, 1), scaled so that
/// its determinant is one, reduced mod 4.
Mat2Z4 normalized_q_matrix(const QuadElem &lambda);

/// delta for tau = r tau_D + s (s = 0 mod 4); r_mod4 is 1 or 3.
/// Throws Precondition if lambda has even norm.
Mu4 delta_tau(const QuadElem &lambda, int r_mod4 = 1);

/// epsilon for tau = r tau_D + s (s = 0 mod 4); r_mod4 is 1 or 3.
Mu4 epsilon_tau(const QuadElem &lambda, int r_mod4 = 1);

/// Units of O/4O as residue classes, sorted.
std::vector<ResidueClass> unit_classes(const Discriminant &disc);

struct EpsilonRow {
    std::string label;
    Mu4 value;
};

/// Table of epsilon at tau_D. For odd D the rows are keyed by the class of
/// lambda^3 in {1, -sqrt(-d), -1, sqrt(-d)}; otherwise by lambda mod 4.
/// Rows are grouped by value in the order 1, i, -1, -i.
struct EpsilonTable {
    std::int64_t D = 0;
    bool keyed_by_cube = false;
    std::vector<EpsilonRow> rows;
};

EpsilonTable epsilon_table(const Discriminant &disc);

/// Label of a class in terms of sqrt(-d): "a+b√-d" with a, b in {-1, 0, 1, 2},
/// when the class has such a representative; otherwise the basis label.
std::string sqrt_label(const ResidueClass &rc);

} // namespace cmcount

#endif
