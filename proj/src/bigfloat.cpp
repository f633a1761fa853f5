// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <utility>

#include "cmcount/errors.hpp"

namespace cmcount {

namespace {

long joint(const BigReal &a, const BigReal &b)
{
    return std::max(a.prec(), b.prec());
}

} // namespace

BigReal::BigReal(long prec)
{
    mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long prec, long value) : BigReal(prec)
{
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(long prec, const mpz_class &value) : BigReal(prec)
{
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(long prec, const mpq_class &value) : BigReal(prec)
{
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(long prec, const std::string &text) : BigReal(prec)
{
    char *end = nullptr;
    if (!text.empty())
        mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (end == nullptr || *end != '\0')
        fail(ErrorKind::InvalidArgument, "not a decimal number: '" + text + "'");
}

BigReal::BigReal(const BigReal &o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal &&o) noexcept
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal &BigReal::operator=(const BigReal &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal &BigReal::operator=(BigReal &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal()
{
    mpfr_clear(v_);
}

BigReal BigReal::pi(long prec)
{
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::with_prec(long prec) const
{
    BigReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator+(const BigReal &o) const
{
    BigReal r(joint(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-(const BigReal &o) const
{
    BigReal r(joint(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator*(const BigReal &o) const
{
    BigReal r(joint(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator/(const BigReal &o) const
{
    if (o.is_zero())
        fail(ErrorKind::Domain, "division by zero");
    BigReal r(joint(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const
{
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const
{
    BigReal r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const
{
    BigReal r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::exp() const
{
    BigReal r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::cos() const
{
    BigReal r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sin() const
{
    BigReal r(prec());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigReal::exponent2() const
{
    if (mpfr_zero_p(v_))
        return LONG_MIN / 4;
    return static_cast<long>(mpfr_get_exp(v_)) - 1;
}

mpz_class BigReal::round() const
{
    BigReal t(prec());
    mpfr_round(t.v_, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
    return z;
}

std::string BigReal::to_string(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigComplex BigComplex::operator*(const BigComplex &o) const
{
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

BigComplex BigComplex::operator/(const BigComplex &o) const
{
    const BigReal n = o.norm2();
    if (n.is_zero())
        fail(ErrorKind::Domain, "division by zero");
    return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
}

BigComplex BigComplex::pow(unsigned e) const
{
    BigComplex result(BigReal(prec(), 1L), BigReal(prec()));
    BigComplex base = *this;
    while (e != 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

BigComplex BigComplex::exp() const
{
    const BigReal m = re_.exp();
    return {m * im_.cos(), m * im_.sin()};
}

BigComplex BigComplex::sqrt() const
{
    // sqrt(z) = sqrt((|z| + x)/2) + i sign(y) sqrt((|z| - x)/2)
    const BigReal r = abs();
    const BigReal two(prec(), 2L);
    BigReal a = ((r + re_) / two).sqrt();
    BigReal b = ((r - re_) / two).sqrt();
    if (im_.sign() < 0)
        b = -b;
    return {a, b};
}

BigComplex BigComplex::root_of_unity(long k, long n, long prec)
{
    const BigReal angle = BigReal::pi(prec) * BigReal(prec, 2 * k) / BigReal(prec, n);
    return {angle.cos(), angle.sin()};
}

} // namespace cmcount
