// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/classfield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "cmcount/errors.hpp"
#include "cmcount/modfunc.hpp"

namespace cmcount {

namespace {

using CPoly = std::vector<BigComplex>;

constexpr long kMaxPrecision = 1L << 17;

CPoly product_of_linears(const std::vector<BigComplex> &roots, long prec, std::size_t skip = SIZE_MAX)
{
    CPoly poly{BigComplex(BigReal(prec, 1L), BigReal(prec))};
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (k == skip)
            continue;
        CPoly next(poly.size() + 1, BigComplex(prec));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] += poly[t];
            next[t] = next[t] - poly[t] * roots[k];
        }
        poly = std::move(next);
    }
    return poly;
}

/// Every coefficient within 2^-16 of an integer and with negligible imaginary part.
std::optional<std::vector<mpz_class>> round_integral(const CPoly &poly)
{
    std::vector<mpz_class> out;
    for (const auto &c : poly) {
        const mpz_class z = c.re().round();
        const BigReal dr = (c.re() - BigReal(c.prec(), z)).abs();
        if (dr.exponent2() >= -16 || c.im().abs().exponent2() >= -16)
            return std::nullopt;
        out.push_back(z);
    }
    return out;
}

BigComplex form_point(const BinaryForm &f, long prec)
{
    const BigReal two_a(prec, 2 * f.A);
    const BigReal re = BigReal(prec, -f.B) / two_a;
    const BigReal im = BigReal(prec, -f.discriminant()).sqrt() / two_a;
    return {re, im};
}

std::optional<std::vector<mpz_class>> class_poly_at(const std::vector<BinaryForm> &forms, long prec)
{
    std::vector<BigComplex> roots;
    for (const auto &f : forms)
        roots.push_back(j_invariant(form_point(f, prec), prec));
    return round_integral(product_of_linears(roots, prec));
}

long class_poly_precision_estimate(const std::vector<BinaryForm> &forms)
{
    double bits = 0;
    for (const auto &f : forms)
        bits += M_PI * std::sqrt(static_cast<double>(-f.discriminant())) / static_cast<double>(f.A) / std::log(2.0);
    return static_cast<long>(bits) + static_cast<long>(forms.size()) + 96;
}

/// CM points per reduced form: tau_D for the principal form, the odd-index
/// point for the others.
std::vector<CmPoint> conjugate_points(const Discriminant &disc, const std::vector<BinaryForm> &forms)
{
    std::vector<CmPoint> pts;
    for (std::size_t k = 0; k < forms.size(); ++k) {
        if (k == 0)
            pts.push_back(CmPoint{disc, 1, 0});
        else
            pts.push_back(tau_from_ideal(disc, odd_index_form(forms[k])));
    }
    return pts;
}

/// Sum of values[k] * prod_{l != k} (x - roots[l]) with the given signs.
CPoly lagrange_numerator(const std::vector<CPoly> &basis, const std::vector<BigComplex> &values,
                         const std::vector<int> &signs, long prec)
{
    CPoly acc(basis.empty() ? 0 : basis[0].size(), BigComplex(prec));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const BigComplex v = signs[k] > 0 ? values[k] : -values[k];
        for (std::size_t t = 0; t < basis[k].size(); ++t)
            acc[t] += basis[k][t] * v;
    }
    return acc;
}

struct Interpolated {
    std::vector<mpz_class> numerator;
    std::vector<int> signs;
};

/// Finds signs making the interpolation numerator integral, starting from
/// `predicted` and flipping non-principal entries when that fails.
std::optional<Interpolated> integral_interpolation(const std::vector<BigComplex> &roots,
                                                   const std::vector<BigComplex> &values, long prec,
                                                   const std::vector<int> &predicted, bool allow_sign_search)
{
    const std::size_t h = roots.size();
    std::vector<CPoly> basis;
    for (std::size_t k = 0; k < h; ++k)
        basis.push_back(product_of_linears(roots, prec, k));
    std::vector<int> signs(predicted);
    const std::size_t combos = allow_sign_search && h > 1 && h <= 16 ? (std::size_t{1} << (h - 1)) : 1;
    for (std::size_t mask = 0; mask < combos; ++mask) {
        for (std::size_t k = 1; k < h; ++k)
            signs[k] = (mask >> (k - 1)) & 1 ? -predicted[k] : predicted[k];
        if (auto r = round_integral(lagrange_numerator(basis, values, signs, prec)))
            return Interpolated{*r, signs};
    }
    return std::nullopt;
}

std::mutex cache_mutex;

} // namespace

std::vector<BinaryForm> reduced_forms(std::int64_t D)
{
    const Discriminant disc = Discriminant::make(D);
    (void)disc;
    std::vector<BinaryForm> out;
    const std::int64_t absD = -D;
    for (std::int64_t A = 1; 3 * A * A <= absD; ++A) {
        for (std::int64_t B = -A + 1; B <= A; ++B) {
            if (((B - D) % 2) != 0)
                continue;
            const std::int64_t num = B * B - D;
            if (num % (4 * A) != 0)
                continue;
            const std::int64_t C = num / (4 * A);
            if (C < A)
                continue;
            if (A == C && B < 0)
                continue;
            BinaryForm f{A, B, C};
            if (f.is_primitive())
                out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const ClassPoly &hilbert_class_poly(std::int64_t D, std::size_t bound)
{
    static std::map<std::int64_t, ClassPoly> cache;
    const auto forms = reduced_forms(D);
    if (forms.size() > bound)
        fail(ErrorKind::Resource, "class number " + std::to_string(forms.size()) + " exceeds the bound " +
                                      std::to_string(bound));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(D);
        if (it != cache.end())
            return it->second;
    }
    long prec = class_poly_precision_estimate(forms);
    ClassPoly result;
    result.D = D;
    for (;;) {
        if (prec > kMaxPrecision)
            fail(ErrorKind::Resource, "class polynomial needs more than the maximum precision");
        auto first = class_poly_at(forms, prec);
        if (!first) {
            prec *= 2;
            continue;
        }
        auto second = class_poly_at(forms, 2 * prec);
        if (!second || *second != *first) {
            prec *= 2;
            continue;
        }
        result.coeffs = *first;
        result.precision = prec;
        result.confirm_precision = 2 * prec;
        break;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(D, std::move(result)).first->second;
}

const GammaExpr &gamma3_poly(std::int64_t D)
{
    static std::map<std::int64_t, GammaExpr> cache;
    const Discriminant disc = Discriminant::make(D);
    if (!disc.units_are_pm1())
        fail(ErrorKind::Precondition, "gamma3 polynomial is not defined for D = -3, -4", Reason::UnitGroup);
    if (disc.is_0or12())
        fail(ErrorKind::Precondition, "gamma3 polynomial is not used for D = 0, 12 (mod 16) (mode error)");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(D);
        if (it != cache.end())
            return it->second;
    }
    const ClassPoly &H = hilbert_class_poly(D);
    const QPoly Hq = H.as_qpoly();
    const QPoly dH = Hq.derivative();
    const auto forms = reduced_forms(D);
    const auto points = conjugate_points(disc, forms);
    const GammaMode mode = disc.is_odd() ? GammaMode::Odd : GammaMode::Even;
    const mpq_class target_scale = mode == GammaMode::Odd ? mpq_class(D) : mpq_class(-D);
    // odd-index points with r = 3 (mod 4) flip the sign in the even mode
    std::vector<int> predicted;
    for (const auto &pt : points)
        predicted.push_back(mode == GammaMode::Even && pt.r_mod4() == 3 ? -1 : 1);

    long prec = H.confirm_precision + 64;
    for (;;) {
        if (prec > kMaxPrecision)
            fail(ErrorKind::Resource, "gamma3 polynomial needs more than the maximum precision");
        std::vector<BigComplex> roots, values;
        const BigReal sqrt_d = BigReal(prec, static_cast<long>(disc.d())).sqrt();
        for (const auto &pt : points) {
            const WeberValues w = weber_values(cm_point_value(pt, prec), prec);
            roots.push_back(w.j);
            if (mode == GammaMode::Odd)
                values.push_back(w.gamma3 * BigComplex(BigReal(prec), sqrt_d)); // i sqrt(d)
            else
                values.push_back(w.gamma3 * (sqrt_d * BigReal(prec, 2L)));
        }
        auto interp = integral_interpolation(roots, values, prec, predicted, true);
        if (!interp) {
            prec *= 2;
            continue;
        }
        const QPoly Gt = QPoly::from_integers(interp->numerator);
        const QPoly G = (Gt * inverse_mod(dH, Hq)) % Hq;
        const QPoly lhs = (G * G) % Hq;
        const QPoly rhs = (QPoly::x_minus(1728) * target_scale) % Hq;
        if (!(lhs == rhs)) {
            prec *= 2;
            continue;
        }
        GammaExpr expr;
        expr.D = D;
        expr.mode = mode;
        expr.G = G;
        expr.G_times_derivative = Gt;
        expr.signs = interp->signs;
        expr.precision = prec;
        std::lock_guard<std::mutex> lock(cache_mutex);
        return cache.emplace(D, std::move(expr)).first->second;
    }
}

std::int64_t odd_represented_value(const BinaryForm &f)
{
    const std::int64_t D = f.discriminant();
    std::int64_t best = 0;
    for (std::int64_t x = -24; x <= 24; ++x)
        for (std::int64_t y = -24; y <= 24; ++y) {
            const std::int64_t m = f.A * x * x + f.B * x * y + f.C * y * y;
            if (m <= 0 || (m & 1) == 0 || std::gcd(m, D) != 1)
                continue;
            if (best == 0 || m < best)
                best = m;
        }
    if (best == 0)
        fail(ErrorKind::Inconsistent, "no small odd value coprime to D represented by the form");
    return best;
}

const GenusRadical &genus_radical(std::int64_t D)
{
    static std::map<std::int64_t, GenusRadical> cache;
    const Discriminant disc = Discriminant::make(D);
    if (!disc.is_0or12())
        fail(ErrorKind::Precondition, "genus radical is only used for D = 0, 12 (mod 16)");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(D);
        if (it != cache.end())
            return it->second;
    }
    const ClassPoly &H = hilbert_class_poly(D);
    const QPoly Hq = H.as_qpoly();
    const QPoly dH = Hq.derivative();
    const auto forms = reduced_forms(D);
    std::vector<int> chi;
    for (const auto &f : forms)
        chi.push_back((odd_represented_value(f) % 4) == 1 ? 1 : -1);
    long prec = H.confirm_precision + 64;
    for (;;) {
        if (prec > kMaxPrecision)
            fail(ErrorKind::Resource, "genus radical needs more than the maximum precision");
        std::vector<BigComplex> roots, values;
        const BigReal sqrt_d = BigReal(prec, static_cast<long>(disc.d())).sqrt();
        for (const auto &f : forms)
            roots.push_back(j_invariant(form_point(f, prec), prec));
        for (int c : chi)
            values.push_back(BigComplex(c > 0 ? sqrt_d : -sqrt_d, BigReal(prec)));
        auto interp = integral_interpolation(roots, values, prec, std::vector<int>(forms.size(), 1), false);
        if (!interp) {
            prec *= 2;
            continue;
        }
        const QPoly P = (QPoly::from_integers(interp->numerator) * inverse_mod(dH, Hq)) % Hq;
        if (!((P * P) % Hq == QPoly::constant(mpq_class(disc.d())) % Hq)) {
            prec *= 2;
            continue;
        }
        GenusRadical gr{D, P, chi};
        std::lock_guard<std::mutex> lock(cache_mutex);
        return cache.emplace(D, std::move(gr)).first->second;
    }
}

} // namespace cmcount
