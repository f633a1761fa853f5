// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cmcount/bigarith.hpp"
#include "cmcount/errors.hpp"

namespace cmcount {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs))
{
    for (auto &v : c_)
        v.canonicalize();
    trim();
}

QPoly QPoly::constant(const mpq_class &c)
{
    return QPoly(std::vector<mpq_class>{c});
}

QPoly QPoly::x_minus(const mpq_class &a)
{
    return QPoly(std::vector<mpq_class>{-a, 1});
}

QPoly QPoly::from_integers(const std::vector<mpz_class> &coeffs)
{
    std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
    return QPoly(std::move(q));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpq_class QPoly::coeff(long k) const
{
    if (k < 0 || k > degree())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

QPoly QPoly::operator+(const QPoly &o) const
{
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = coeff(static_cast<long>(k)) + o.coeff(static_cast<long>(k));
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly &o) const
{
    return *this + (-o);
}

QPoly QPoly::operator-() const
{
    std::vector<mpq_class> r(c_);
    for (auto &v : r)
        v = -v;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly &o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            r[a + b] += c_[a] * o.c_[b];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class &s) const
{
    std::vector<mpq_class> r(c_);
    for (auto &v : r)
        v *= s;
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &m) const
{
    if (m.is_zero())
        fail(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (degree() < m.degree())
        return {QPoly(), *this};
    std::vector<mpq_class> rem(c_);
    std::vector<mpq_class> quo(c_.size() - m.c_.size() + 1);
    const mpq_class inv_lead = 1 / m.lead();
    for (long k = degree(); k >= m.degree(); --k) {
        const mpq_class f = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (f == 0)
            continue;
        const long shift = k - m.degree();
        quo[static_cast<std::size_t>(shift)] = f;
        for (long t = 0; t <= m.degree(); ++t)
            rem[static_cast<std::size_t>(t + shift)] -= f * m.c_[static_cast<std::size_t>(t)];
    }
    rem.resize(static_cast<std::size_t>(m.degree()));
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        r[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class &x) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class QPoly::eval_mod(const mpz_class &x, const mpz_class &p) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const mpz_class &den = it->get_den();
        if (mod(den, p) == 0)
            fail(ErrorKind::Precondition, "p divides a coefficient denominator", Reason::BadReduction);
        acc = mod(acc * x + it->get_num() * invm(den, p), p);
    }
    return acc;
}

mpz_class QPoly::denominator() const
{
    mpz_class l = 1;
    for (const auto &v : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

bool QPoly::is_integral() const
{
    return denominator() == 1;
}

std::vector<mpz_class> QPoly::integer_coeffs() const
{
    if (!is_integral())
        fail(ErrorKind::InvalidArgument, "polynomial has non-integral coefficients");
    std::vector<mpz_class> r;
    for (const auto &v : c_)
        r.push_back(v.get_num());
    return r;
}

std::string QPoly::to_string(const std::string &var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const mpq_class &v = c_[static_cast<std::size_t>(k)];
        if (v == 0)
            continue;
        const mpq_class a = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || a != 1) {
            os << a;
            if (k > 0)
                os << "*";
        }
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

QPoly inverse_mod(const QPoly &a, const QPoly &m)
{
    // extended Euclid: s*a = r (mod m)
    QPoly r0 = m, r1 = a % m;
    QPoly s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        fail(ErrorKind::Precondition, "polynomial is not invertible modulo the given modulus");
    return (s0 * (1 / r0.lead())) % m;
}

FpPoly::FpPoly(mpz_class p, std::vector<mpz_class> coeffs) : p_(std::move(p)), c_(std::move(coeffs))
{
    for (auto &v : c_)
        v = mod(v, p_);
    trim();
}

FpPoly FpPoly::from_qpoly(const QPoly &q, const mpz_class &p)
{
    std::vector<mpz_class> c;
    for (const auto &v : q.coeffs()) {
        if (mod(v.get_den(), p) == 0)
            fail(ErrorKind::Precondition, "p divides a coefficient denominator", Reason::BadReduction);
        c.push_back(mod(v.get_num() * invm(v.get_den(), p), p));
    }
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::x(const mpz_class &p)
{
    return FpPoly(p, {0, 1});
}

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly &o) const
{
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < c_.size())
            r[k] += c_[k];
        if (k < o.c_.size())
            r[k] += o.c_[k];
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly &o) const
{
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < c_.size())
            r[k] += c_[k];
        if (k < o.c_.size())
            r[k] -= o.c_[k];
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly &o) const
{
    if (is_zero() || o.is_zero())
        return FpPoly(p_);
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            r[a + b] += c_[a] * o.c_[b];
    return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly &m) const
{
    if (m.is_zero())
        fail(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (degree() < m.degree())
        return {FpPoly(p_), *this};
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quo(c_.size() - m.c_.size() + 1);
    const mpz_class inv_lead = invm(m.c_.back(), p_);
    for (long k = degree(); k >= m.degree(); --k) {
        const mpz_class f = mod(rem[static_cast<std::size_t>(k)] * inv_lead, p_);
        if (f == 0)
            continue;
        const long shift = k - m.degree();
        quo[static_cast<std::size_t>(shift)] = f;
        for (long t = 0; t <= m.degree(); ++t) {
            mpz_class &slot = rem[static_cast<std::size_t>(t + shift)];
            slot = mod(slot - f * m.c_[static_cast<std::size_t>(t)], p_);
        }
    }
    rem.resize(static_cast<std::size_t>(m.degree()));
    return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const
{
    if (is_zero())
        return *this;
    const mpz_class inv = invm(c_.back(), p_);
    std::vector<mpz_class> r(c_);
    for (auto &v : r)
        v *= inv;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::derivative() const
{
    std::vector<mpz_class> r;
    for (std::size_t k = 1; k < c_.size(); ++k)
        r.push_back(c_[k] * static_cast<unsigned long>(k));
    return FpPoly(p_, std::move(r));
}

mpz_class FpPoly::eval(const mpz_class &x) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = mod(acc * x + *it, p_);
    return acc;
}

FpPoly FpPoly::powmod(const mpz_class &e, const FpPoly &m) const
{
    FpPoly result(p_, {1});
    result = result % m;
    FpPoly base = *this % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * base) % m;
    }
    return result;
}

FpPoly gcd(FpPoly a, FpPoly b)
{
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

void split(const FpPoly &g, std::mt19937_64 &rng, std::vector<mpz_class> &out)
{
    if (g.degree() <= 0)
        return;
    const mpz_class &p = g.p();
    if (g.degree() == 1) {
        const auto &c = g.coeffs();
        out.push_back(mod(-c[0] * invm(c[1], p), p));
        return;
    }
    const mpz_class half = (p - 1) / 2;
    for (int attempt = 0; attempt < 256; ++attempt) {
        mpz_class a = static_cast<unsigned long>(rng());
        a = mod(a, p);
        const FpPoly base(p, {a, 1});
        const FpPoly h = gcd(g, base.powmod(half, g) - FpPoly(p, {1}));
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split(h, rng, out);
            split(g.divmod(h).first.monic(), rng, out);
            return;
        }
    }
    fail(ErrorKind::Inconsistent, "root splitting did not make progress");
}

} // namespace

std::vector<mpz_class> roots_mod_p(const FpPoly &f, std::mt19937_64 &rng)
{
    const mpz_class &p = f.p();
    if (f.degree() <= 0)
        return {};
    const FpPoly X = FpPoly::x(p);
    const FpPoly fm = f.monic();
    FpPoly g = gcd(fm, X.powmod(p, fm) - X);
    std::vector<mpz_class> out;
    if (p <= 3) {
        for (mpz_class x = 0; x < p; ++x)
            if (f.eval(x) == 0)
                out.push_back(x);
        return out;
    }
    split(g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> roots_mod_p(const FpPoly &f)
{
    std::mt19937_64 rng(0x5eed);
    return roots_mod_p(f, rng);
}

} // namespace cmcount
