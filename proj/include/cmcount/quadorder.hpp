// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Imaginary quadratic orders: discriminant descriptors, exact elements
// u + v sqrt(-d), residue classes mod 4O, the canonical CM point tau_D,
// and CM points attached to non-principal ideal classes.

#ifndef CMCOUNT_QUADORDER_HPP
#define CMCOUNT_QUADORDER_HPP

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cmcount {

class QuadElem;

/// Descriptor of the order of discriminant D < 0.
///
/// d is -D for odd D and -D/4 for even D, so the order is Z[(1+sqrt(-d))/2]
/// or Z[sqrt(-d)] respectively, with sqrt(-d) taken in the upper half-plane.
class Discriminant {
public:
    /// Throws InvalidArgument unless D < 0 and D = 0, 1 (mod 4).
    static Discriminant make(std::int64_t D);

    std::int64_t value() const { return D_; }
    std::int64_t d() const { return d_; }
    std::int64_t conductor() const { return f_; }
    std::int64_t fundamental() const { return D0_; }
    int mod8() const { return static_cast<int>(((D_ % 8) + 8) % 8); }
    int mod16() const { return static_cast<int>(((D_ % 16) + 16) % 16); }
    int mod32() const { return static_cast<int>(((D_ % 32) + 32) % 32); }

    bool is_odd() const { return (D_ & 1) != 0; }
    bool is_fundamental() const { return f_ == 1; }
    /// O^x = {+1, -1}, i.e. D is neither -3 nor -4.
    bool units_are_pm1() const { return D_ != -3 && D_ != -4; }
    /// D = 4 or 8 (mod 16).
    bool is_4or8() const { return mod16() == 4 || mod16() == 8; }
    /// D = 0 or 12 (mod 16).
    bool is_0or12() const { return mod16() == 0 || mod16() == 12; }

    /// The canonical CM point tau_D with Z + Z tau_D = O.
    QuadElem tau() const;

    bool operator==(const Discriminant &o) const { return D_ == o.D_; }

private:
    std::int64_t D_ = 0, d_ = 0, f_ = 1, D0_ = 0;
};

/// Position of tau_D in the normalization table, for reporting.
std::string tau_table_row(const Discriminant &disc);

/// z_d for a fundamental discriminant with d = 2, 3 (mod 4) (equals tau_D).
QuadElem z_d(std::int64_t d);

/// Residue class of an element modulo m*O, in coordinates of the basis {1, w}
/// with w = (1 + sqrt(-d))/2 for odd D and w = sqrt(-d) for even D.
struct ResidueClass {
    std::int64_t D = 0;
    int modulus = 4;
    int x = 0;
    int y = 0;

    bool operator==(const ResidueClass &) const = default;
    auto operator<=>(const ResidueClass &) const = default;

    /// Class label: "a+b√-d" with a, b in {-1, 0, 1, 2} for even D,
    /// "x+yω" for odd D.
    std::string label() const;
};

/// u + v sqrt(-d) in the order of discriminant D, stored as (2u, 2v).
class QuadElem {
public:
    /// Throws InvalidArgument if (2u, 2v) does not describe an element of O.
    QuadElem(const Discriminant &disc, mpz_class twice_u, mpz_class twice_v);
    static QuadElem from_uv(const Discriminant &disc, const mpz_class &u, const mpz_class &v);
    static QuadElem from_basis(const Discriminant &disc, const mpz_class &x, const mpz_class &y);
    static QuadElem from_residue(const ResidueClass &rc);

    const Discriminant &disc() const { return disc_; }
    const mpz_class &twice_u() const { return U_; }
    const mpz_class &twice_v() const { return V_; }
    mpq_class u() const
    {
        mpq_class r(U_, 2);
        r.canonicalize();
        return r;
    }
    mpq_class v() const
    {
        mpq_class r(V_, 2);
        r.canonicalize();
        return r;
    }

    /// Coordinates (x, y) with element = x + y w.
    std::array<mpz_class, 2> basis_coords() const;
    /// Coordinates (x, y) with element = x + y tau_D.
    std::array<mpz_class, 2> tau_coords() const;

    mpz_class norm() const;
    mpz_class trace() const { return U_; }
    QuadElem conj() const;

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem &o) const;
    QuadElem operator-(const QuadElem &o) const;
    QuadElem operator*(const QuadElem &o) const;
    QuadElem pow(unsigned e) const;
    bool operator==(const QuadElem &o) const;

    ResidueClass reduce(int modulus) const;

    std::string to_string() const;

private:
    void require_same(const QuadElem &o) const;

    Discriminant disc_;
    mpz_class U_, V_;
};

/// tau = r * tau_D + s with rational r > 0 and s.
struct CmPoint {
    Discriminant disc;
    mpq_class r;
    mpq_class s;

    /// r (mod 4) as a 2-adic unit; 1 or 3.
    int r_mod4() const;
    /// Real part (rational) and the coefficient c of Im(tau) = c * sqrt(d).
    mpq_class real_part() const;
    mpq_class imag_coeff() const;
};

/// Primitive binary quadratic form A x^2 + B xy + C y^2.
struct BinaryForm {
    std::int64_t A = 0, B = 0, C = 0;

    std::int64_t discriminant() const { return B * B - 4 * A * C; }
    bool is_primitive() const;
    bool operator==(const BinaryForm &) const = default;
    auto operator<=>(const BinaryForm &) const = default;
};

/// A properly equivalent form with odd leading coefficient.
BinaryForm odd_index_form(const BinaryForm &form);

/// CM point for the ideal class of `form` with r = 1 (mod 2) and s = 0 (mod 4).
/// Requires A odd (Precondition otherwise).
CmPoint tau_from_ideal(const Discriminant &disc, const BinaryForm &form);

/// lambda in O with norm p, from the principal-form representation of p.
/// Requires p odd and coprime to D. Sign and conjugate are not normalized.
QuadElem good_generator(const Discriminant &disc, const mpz_class &p);

/// Element x + y sqrt(m) of Q(sqrt(m)), m squarefree (positive or negative).
class QuadFieldElem {
public:
    QuadFieldElem(std::int64_t m, mpq_class x = 0, mpq_class y = 0);

    std::int64_t radicand() const { return m_; }
    const mpq_class &x() const { return x_; }
    const mpq_class &y() const { return y_; }

    QuadFieldElem operator+(const QuadFieldElem &o) const;
    QuadFieldElem operator-(const QuadFieldElem &o) const;
    QuadFieldElem operator*(const QuadFieldElem &o) const;
    QuadFieldElem operator-() const;
    bool operator==(const QuadFieldElem &o) const;

    mpq_class norm() const { return x_ * x_ - m_ * y_ * y_; }
    std::string to_string() const;

private:
    std::int64_t m_;
    mpq_class x_, y_;
};

/// Coefficients of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct LongWeierstrass {
    QuadFieldElem a1, a2, a3, a4, a6;
};

/// Discriminant of the long Weierstrass model, computed exactly.
QuadFieldElem weierstrass_disc(const LongWeierstrass &e);

} // namespace cmcount

#endif
