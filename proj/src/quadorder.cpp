// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/quadorder.hpp"

#include <numeric>
#include <sstream>

#include "cmcount/bigarith.hpp"
#include "cmcount/errors.hpp"

namespace cmcount {

namespace {

int mod4_signed(const mpz_class &a, int m)
{
    return static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

// Maps {0,1,2,3} to {0,1,2,-1}.
int centered4(int a)
{
    return a == 3 ? -1 : a;
}

std::string linear_label(int a, int b, const char *gen)
{
    std::ostringstream os;
    if (a != 0 || b == 0)
        os << a;
    if (b != 0) {
        if (b < 0)
            os << "-";
        else if (a != 0)
            os << "+";
        if (b != 1 && b != -1)
            os << (b < 0 ? -b : b);
        os << gen;
    }
    return os.str();
}

} // namespace

Discriminant Discriminant::make(std::int64_t D)
{
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (D >= 0 || (r != 0 && r != 1))
        fail(ErrorKind::InvalidArgument, "invalid discriminant " + std::to_string(D));
    Discriminant disc;
    disc.D_ = D;
    disc.d_ = (D & 1) ? -D : -D / 4;
    std::int64_t f = 1;
    for (std::int64_t g = 2; g * g <= -D; ++g) {
        if (D % (g * g) != 0)
            continue;
        const std::int64_t q = D / (g * g);
        const std::int64_t qr = ((q % 4) + 4) % 4;
        if (qr == 0 || qr == 1)
            f = g;
    }
    disc.f_ = f;
    disc.D0_ = D / (f * f);
    return disc;
}

QuadElem Discriminant::tau() const
{
    if (is_odd())
        return QuadElem(*this, mod8() == 1 ? -3 : 3, 1);
    if (mod32() == 4 || mod32() == 8)
        return QuadElem(*this, 6, 2);
    return QuadElem(*this, 0, 2);
}

std::string tau_table_row(const Discriminant &disc)
{
    if (disc.is_odd())
        return disc.mod8() == 1 ? "D = 1 (mod 8)" : "D = 5 (mod 8)";
    if (disc.mod32() == 4 || disc.mod32() == 8)
        return "D = 4 or 8 (mod 32)";
    return "otherwise";
}

QuadElem z_d(std::int64_t d)
{
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (d <= 0 || (r != 2 && r != 3))
        fail(ErrorKind::Precondition, "z_d is defined for d = 2, 3 (mod 4)");
    const Discriminant disc = Discriminant::make(r == 3 ? -d : -4 * d);
    if (!disc.is_fundamental())
        fail(ErrorKind::Precondition, "z_d requires squarefree d");
    return disc.tau();
}

std::string ResidueClass::label() const
{
    if (D & 1)
        return linear_label(centered4(x), centered4(y), "ω");
    return linear_label(centered4(x), centered4(y), "√-d");
}

QuadElem::QuadElem(const Discriminant &disc, mpz_class twice_u, mpz_class twice_v)
    : disc_(disc), U_(std::move(twice_u)), V_(std::move(twice_v))
{
    const bool u_odd = mpz_odd_p(U_.get_mpz_t()) != 0;
    const bool v_odd = mpz_odd_p(V_.get_mpz_t()) != 0;
    const bool ok = disc_.is_odd() ? (u_odd == v_odd) : (!u_odd && !v_odd);
    if (!ok)
        fail(ErrorKind::InvalidArgument,
             "(" + U_.get_str() + "/2) + (" + V_.get_str() + "/2)√-d is not in the order of discriminant " +
                 std::to_string(disc_.value()));
}

QuadElem QuadElem::from_uv(const Discriminant &disc, const mpz_class &u, const mpz_class &v)
{
    return QuadElem(disc, 2 * u, 2 * v);
}

QuadElem QuadElem::from_basis(const Discriminant &disc, const mpz_class &x, const mpz_class &y)
{
    if (disc.is_odd())
        return QuadElem(disc, 2 * x + y, y);
    return QuadElem(disc, 2 * x, 2 * y);
}

QuadElem QuadElem::from_residue(const ResidueClass &rc)
{
    return from_basis(Discriminant::make(rc.D), rc.x, rc.y);
}

std::array<mpz_class, 2> QuadElem::basis_coords() const
{
    if (disc_.is_odd())
        return {mpz_class((U_ - V_) / 2), V_};
    return {mpz_class(U_ / 2), mpz_class(V_ / 2)};
}

std::array<mpz_class, 2> QuadElem::tau_coords() const
{
    const QuadElem t = disc_.tau();
    mpz_class y = V_ / t.V_;
    mpz_class x = (U_ - y * t.U_) / 2;
    return {x, y};
}

mpz_class QuadElem::norm() const
{
    return (U_ * U_ + mpz_class(static_cast<long>(disc_.d())) * V_ * V_) / 4;
}

QuadElem QuadElem::conj() const
{
    return QuadElem(disc_, U_, -V_);
}

void QuadElem::require_same(const QuadElem &o) const
{
    if (!(disc_ == o.disc_))
        fail(ErrorKind::InvalidArgument, "quadratic elements from different orders");
}

QuadElem QuadElem::operator-() const
{
    return QuadElem(disc_, -U_, -V_);
}

QuadElem QuadElem::operator+(const QuadElem &o) const
{
    require_same(o);
    return QuadElem(disc_, U_ + o.U_, V_ + o.V_);
}

QuadElem QuadElem::operator-(const QuadElem &o) const
{
    require_same(o);
    return QuadElem(disc_, U_ - o.U_, V_ - o.V_);
}

QuadElem QuadElem::operator*(const QuadElem &o) const
{
    require_same(o);
    const mpz_class d = static_cast<long>(disc_.d());
    mpz_class U = (U_ * o.U_ - d * V_ * o.V_) / 2;
    mpz_class V = (U_ * o.V_ + o.U_ * V_) / 2;
    return QuadElem(disc_, U, V);
}

QuadElem QuadElem::pow(unsigned e) const
{
    QuadElem result(disc_, 2, 0);
    QuadElem base = *this;
    while (e != 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool QuadElem::operator==(const QuadElem &o) const
{
    return disc_ == o.disc_ && U_ == o.U_ && V_ == o.V_;
}

ResidueClass QuadElem::reduce(int modulus) const
{
    const auto xy = basis_coords();
    return ResidueClass{disc_.value(), modulus, mod4_signed(xy[0], modulus), mod4_signed(xy[1], modulus)};
}

std::string QuadElem::to_string() const
{
    std::ostringstream os;
    if (V_ == 0) {
        os << u();
        return os.str();
    }
    if (U_ != 0)
        os << u() << (V_ < 0 ? " - " : " + ");
    else if (V_ < 0)
        os << "-";
    const mpq_class av = abs(v());
    if (av != 1)
        os << av;
    os << "√-" << disc_.d();
    return os.str();
}

int CmPoint::r_mod4() const
{
    const mpz_class &num = r.get_num();
    const mpz_class &den = r.get_den();
    if (mpz_even_p(num.get_mpz_t()) || mpz_even_p(den.get_mpz_t()))
        fail(ErrorKind::Precondition, "r is not a 2-adic unit");
    // den^-1 = den (mod 4) for odd den
    return static_cast<int>(mpz_fdiv_ui(mpz_class(num * den).get_mpz_t(), 4));
}

mpq_class CmPoint::real_part() const
{
    const QuadElem t = disc.tau();
    return r * t.u() + s;
}

mpq_class CmPoint::imag_coeff() const
{
    return r * disc.tau().v();
}

bool BinaryForm::is_primitive() const
{
    return std::gcd(std::gcd(A, B), C) == 1;
}

BinaryForm odd_index_form(const BinaryForm &form)
{
    if (form.A & 1)
        return form;
    if (form.C & 1)
        return BinaryForm{form.C, -form.B, form.A};
    return BinaryForm{form.A + form.B + form.C, form.B + 2 * form.C, form.C};
}

CmPoint tau_from_ideal(const Discriminant &disc, const BinaryForm &form)
{
    if (form.discriminant() != disc.value())
        fail(ErrorKind::InvalidArgument, "form discriminant does not match");
    if (form.A <= 0 || !form.is_primitive())
        fail(ErrorKind::InvalidArgument, "form must be positive definite and primitive");
    if ((form.A & 1) == 0)
        fail(ErrorKind::Precondition, "leading coefficient must be odd (odd-index ideal); use odd_index_form");

    // (-B + sqrt(D))/2 = tau_D + c with c = -(TU + B)/2.
    const QuadElem t = disc.tau();
    const mpz_class TU = t.twice_u();
    mpz_class c = -(TU + form.B) / 2;
    const mpz_class A = static_cast<long>(form.A);
    const mpz_class k = mod(c * A, 4);
    c -= k * A;
    return CmPoint{disc, mpq_class(1, A), mpq_class(c, A)};
}

QuadElem good_generator(const Discriminant &disc, const mpz_class &p)
{
    if (mpz_even_p(p.get_mpz_t()))
        fail(ErrorKind::Precondition, "p must be odd");
    if (mod(mpz_class(static_cast<long>(disc.value())), p) == 0)
        fail(ErrorKind::Precondition, "p divides the discriminant", Reason::Ramified);
    const NormSolution sol = cornacchia(disc.value(), p);
    return QuadElem(disc, sol.twice_u, sol.twice_v);
}

QuadFieldElem::QuadFieldElem(std::int64_t m, mpq_class x, mpq_class y) : m_(m), x_(std::move(x)), y_(std::move(y))
{
    x_.canonicalize();
    y_.canonicalize();
}

QuadFieldElem QuadFieldElem::operator+(const QuadFieldElem &o) const
{
    return QuadFieldElem(m_, x_ + o.x_, y_ + o.y_);
}

QuadFieldElem QuadFieldElem::operator-(const QuadFieldElem &o) const
{
    return QuadFieldElem(m_, x_ - o.x_, y_ - o.y_);
}

QuadFieldElem QuadFieldElem::operator*(const QuadFieldElem &o) const
{
    if (m_ != o.m_)
        fail(ErrorKind::InvalidArgument, "quadratic field elements with different radicands");
    return QuadFieldElem(m_, x_ * o.x_ + m_ * y_ * o.y_, x_ * o.y_ + o.x_ * y_);
}

QuadFieldElem QuadFieldElem::operator-() const
{
    return QuadFieldElem(m_, -x_, -y_);
}

bool QuadFieldElem::operator==(const QuadFieldElem &o) const
{
    return m_ == o.m_ && x_ == o.x_ && y_ == o.y_;
}

std::string QuadFieldElem::to_string() const
{
    std::ostringstream os;
    os << x_;
    if (y_ != 0)
        os << (y_ < 0 ? " - " : " + ") << abs(y_) << "√" << m_;
    return os.str();
}

QuadFieldElem weierstrass_disc(const LongWeierstrass &e)
{
    const std::int64_t m = e.a1.radicand();
    auto k = [m](long c) { return QuadFieldElem(m, c); };
    const QuadFieldElem b2 = e.a1 * e.a1 + k(4) * e.a2;
    const QuadFieldElem b4 = k(2) * e.a4 + e.a1 * e.a3;
    const QuadFieldElem b6 = e.a3 * e.a3 + k(4) * e.a6;
    const QuadFieldElem b8 = e.a1 * e.a1 * e.a6 + k(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
                             e.a4 * e.a4;
    return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

} // namespace cmcount
