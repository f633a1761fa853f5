// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Thin RAII wrappers over MPFR reals and pairs of them.

#ifndef CMCOUNT_BIGFLOAT_HPP
#define CMCOUNT_BIGFLOAT_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace cmcount {

class BigReal {
public:
    explicit BigReal(long prec = 128);
    BigReal(long prec, long value);
    BigReal(long prec, const mpz_class &value);
    BigReal(long prec, const mpq_class &value);
    /// Parses a decimal string; throws InvalidArgument on malformed input.
    BigReal(long prec, const std::string &text);
    BigReal(const BigReal &o);
    BigReal(BigReal &&o) noexcept;
    BigReal &operator=(const BigReal &o);
    BigReal &operator=(BigReal &&o) noexcept;
    ~BigReal();

    static BigReal pi(long prec);

    long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Copy rounded to a new precision.
    BigReal with_prec(long prec) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigReal operator+(const BigReal &o) const;
    BigReal operator-(const BigReal &o) const;
    BigReal operator*(const BigReal &o) const;
    BigReal operator/(const BigReal &o) const;
    BigReal operator-() const;
    BigReal &operator+=(const BigReal &o) { return *this = *this + o; }
    BigReal &operator-=(const BigReal &o) { return *this = *this - o; }
    BigReal &operator*=(const BigReal &o) { return *this = *this * o; }

    BigReal abs() const;
    BigReal sqrt() const;
    BigReal exp() const;
    BigReal cos() const;
    BigReal sin() const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const BigReal &o) const { return mpfr_cmp(v_, o.v_); }
    /// floor(log2 |x|), or a very negative number for zero.
    long exponent2() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer (ties away from zero).
    mpz_class round() const;
    /// Decimal rendering with the given number of significant digits.
    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

class BigComplex {
public:
    explicit BigComplex(long prec = 128) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}

    long prec() const { return re_.prec(); }
    const BigReal &re() const { return re_; }
    const BigReal &im() const { return im_; }
    BigComplex with_prec(long prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

    BigComplex operator+(const BigComplex &o) const { return {re_ + o.re_, im_ + o.im_}; }
    BigComplex operator-(const BigComplex &o) const { return {re_ - o.re_, im_ - o.im_}; }
    BigComplex operator*(const BigComplex &o) const;
    BigComplex operator*(const BigReal &o) const { return {re_ * o, im_ * o}; }
    BigComplex operator/(const BigComplex &o) const;
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex &operator+=(const BigComplex &o) { return *this = *this + o; }
    BigComplex &operator*=(const BigComplex &o) { return *this = *this * o; }

    BigComplex conj() const { return {re_, -im_}; }
    BigReal norm2() const { return re_ * re_ + im_ * im_; }
    BigReal abs() const { return norm2().sqrt(); }
    BigComplex pow(unsigned e) const;
    /// exp(z).
    BigComplex exp() const;
    /// Principal square root.
    BigComplex sqrt() const;
    /// exp(2 pi i k / n).
    static BigComplex root_of_unity(long k, long n, long prec);

private:
    BigReal re_, im_;
};

} // namespace cmcount

#endif
