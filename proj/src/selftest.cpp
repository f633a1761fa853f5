// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "cmcount/bigarith.hpp"
#include "cmcount/classfield.hpp"
#include "cmcount/counting.hpp"
#include "cmcount/epsilon.hpp"
#include "cmcount/errors.hpp"
#include "cmcount/modfunc.hpp"
#include "cmcount/poly.hpp"
#include "cmcount/qcurve.hpp"

namespace cmcount {

namespace {

const std::vector<std::int64_t> kSweepDiscs = {-7,  -8,  -11, -15, -19, -20, -23, -24, -40,
                                               -43, -67, -163, -12, -16, -27, -28, -75, -99};
const std::vector<std::int64_t> kQcurveDs = {2, 6, 7, 10, 11, 14, 15, 19, 22, 23};

struct Tally {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string &what)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
};

SuiteResult run_suite(const std::string &name, const std::function<void(Tally &)> &body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    SuiteResult r;
    r.name = name;
    try {
        body(t);
        r.passed = t.failures == 0;
        r.detail = r.passed ? "ok" : std::to_string(t.failures) + " failures, first: " + t.first_failure;
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.cases = t.cases;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string tag(std::int64_t D, const mpz_class &p)
{
    return "D=" + std::to_string(D) + " p=" + p.get_str();
}

mpz_class nonresidue(const mpz_class &p)
{
    for (mpz_class c = 2;; ++c)
        if (legendre(c, p) == -1)
            return c;
}

bool splits_principally(const Discriminant &disc, const mpz_class &p)
{
    try {
        good_generator(disc, p);
        return true;
    } catch (const Error &) {
        return false;
    }
}

void phi_suite(Tally &t)
{
    const auto &G = sl2_z4();
    for (const auto &M : G)
        for (const auto &N : G)
            t.check(phi(M * N) == phi(M) * phi(N), "phi(MN) != phi(M)phi(N)");
}

void unit_suite(Tally &t)
{
    for (std::int64_t D : kSweepDiscs) {
        const Discriminant disc = Discriminant::make(D);
        for (const ResidueClass &rc : unit_classes(disc)) {
            const QuadElem l = QuadElem::from_residue(rc);
            t.check(epsilon_tau(-l) == epsilon_tau(l) * Mu4::of(2), "unit invariance at D=" + std::to_string(D));
        }
    }
}

void class_poly_suite(Tally &t)
{
    const std::vector<std::pair<std::int64_t, std::vector<mpz_class>>> fixtures = {
        {-7, {3375, 1}},
        {-8, {-8000, 1}},
        {-23, {mpz_class("12771880859375"), mpz_class("-5151296875"), 3491750, 1}},
    };
    for (const auto &[D, coeffs] : fixtures) {
        const ClassPoly &H = hilbert_class_poly(D);
        t.check(H.coeffs == coeffs && H.confirm_precision == 2 * H.precision, "H at D=" + std::to_string(D));
    }
}

void gamma3_suite(Tally &t)
{
    for (std::int64_t D : kSweepDiscs) {
        const Discriminant disc = Discriminant::make(D);
        if (disc.is_0or12())
            continue;
        const QPoly H = hilbert_class_poly(D).as_qpoly();
        const GammaExpr &g = gamma3_poly(D);
        const mpq_class scale = g.mode == GammaMode::Odd ? mpq_class(D) : mpq_class(-D);
        const QPoly rhs = (QPoly::x_minus(1728) * scale) % H;
        t.check((g.G * g.G) % H == rhs, "G^2 at D=" + std::to_string(D));
    }
}

void qcurve_model_suite(Tally &t)
{
    for (std::int64_t d : kQcurveDs)
        t.check(qcurve_model(d).discriminant_verified, "model discriminant at d=" + std::to_string(d));
    const QuadFieldElem disc = weierstrass_disc(conductor3_unit_model());
    t.check(disc == QuadFieldElem(33, -23, -4) && disc.norm() == 1, "conductor-3 unit discriminant");
}

void weber_suite(Tally &t, long prec)
{
    const BigReal tol = BigReal(prec, 1) / BigReal(prec, mpz_class(mpz_class(1) << static_cast<unsigned>(prec / 2)));
    for (std::int64_t D : {-7, -8, -11, -15, -20, -23, -24, -163}) {
        const Discriminant disc = Discriminant::make(D);
        for (const BinaryForm &f : reduced_forms(D)) {
            const CmPoint pt = tau_from_ideal(disc, odd_index_form(f));
            const BigReal re(prec, pt.real_part());
            const BigReal im = BigReal(prec, pt.imag_coeff()) * BigReal(prec, static_cast<long>(disc.d())).sqrt();
            const WeberValues w = weber_values(BigComplex(re, im), prec);
            t.check(w.residual2.cmp(tol) < 0 && w.residual3.cmp(tol) < 0, "Weber residual at D=" + std::to_string(D));
        }
    }
}

void oracle_suite(Tally &t, long bound)
{
    for (std::int64_t D : kSweepDiscs) {
        const Discriminant disc = Discriminant::make(D);
        for (long q = 5; q < bound; q += 2) {
            const mpz_class p = q;
            if (!is_probable_prime(p) || (6 * D) % q == 0 || !splits_principally(disc, p))
                continue;
            const auto roots = roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(D).as_qpoly(), p));
            const mpz_class s = sqrt_mod_p(-mpz_class(static_cast<long>(disc.d())), p);
            for (const mpz_class &j0 : roots) {
                if (j0 == 0 || j0 == 1728 % q)
                    continue;
                const mpz_class k = mod(1728 - j0, p);
                const CurveFp E = CurveFp::make(p, 3 * j0 * k, 2 * j0 * k * k);
                for (const CurveFp &C : {E, E.twist(nonresidue(p))}) {
                    const FrobeniusData fd = frobenius_trace(disc, C, j0, s);
                    t.check(fd.count == naive_count(C), tag(D, p));
                }
            }
        }
    }
}

void special_suite(Tally &t, long bound)
{
    for (long q = 5; q < bound; ++q) {
        const mpz_class p = q;
        if (!is_probable_prime(p))
            continue;
        for (long c = 1; c <= 4; ++c) {
            if (q % 4 == 1) {
                const CurveFp E = CurveFp::make(p, -c, 0);
                t.check(count_special(E, SpecialJ::J1728).count == naive_count(E), "j=1728 p=" + p.get_str());
            }
            if (q % 3 == 1) {
                const CurveFp E = CurveFp::make(p, 0, 16 * c);
                t.check(count_special(E, SpecialJ::J0).count == naive_count(E), "j=0 p=" + p.get_str());
            }
        }
    }
}

void onemod4_suite(Tally &t, long bound)
{
    for (std::int64_t D : {-7, -11, -8, -19, -43, -24}) {
        const Discriminant disc = Discriminant::make(D);
        for (long q = 5; q < bound; q += 4) {
            const mpz_class p = q;
            if (!is_probable_prime(p) || D % q == 0 || !splits_principally(disc, p))
                continue;
            for (const mpz_class &j0 : roots_mod_p(FpPoly::from_qpoly(hilbert_class_poly(D).as_qpoly(), p))) {
                const mpz_class k = mod(1728 - j0, p);
                const CurveFp E = CurveFp::make(p, 3 * j0 * k, 2 * j0 * k * k);
                for (const CurveFp &C : {E, E.twist(nonresidue(p))})
                    t.check(count_1mod4(disc, C).count == naive_count(C), tag(D, p));
            }
        }
    }
}

void qcurve_suite(Tally &t, long bound)
{
    for (std::int64_t d : kQcurveDs) {
        for (long q = 5; q < bound; q += 2) {
            const mpz_class p = q;
            if (!is_probable_prime(p) || (2 * d) % q == 0)
                continue;
            const Discriminant disc = Discriminant::make(d % 4 == 3 ? -d : -4 * d);
            if (!splits_principally(disc, p))
                continue;
            t.check(qcurve_crosscheck(d, p).agree, "d=" + std::to_string(d) + " p=" + p.get_str());
        }
    }
}

void construct_suite(Tally &t)
{
    std::mt19937_64 rng(2024);
    const std::vector<std::int64_t> discs = {-7, -8, -11, -15, -20, -23, -24, -3, -4, -40};
    int done = 0;
    while (done < 10) {
        const std::int64_t D = discs[rng() % discs.size()];
        const Discriminant disc = Discriminant::make(D);
        const mpz_class p = 1000 + rng() % 100000;
        if (!is_probable_prime(p) || !splits_principally(disc, p))
            continue;
        const QuadElem l = good_generator(disc, p);
        const mpz_class trace = (rng() & 1) ? l.trace() : mpz_class(-l.trace());
        const Construction c = cm_construct(disc, p, trace, rng());
        t.check(c.certificate.passed && c.data.trace == trace, tag(D, p));
        ++done;
    }
}

} // namespace

std::vector<SuiteResult> run_selftest(bool quick, long prec, long prime_bound)
{
    std::vector<SuiteResult> out;
    out.push_back(run_suite("phi-homomorphism", phi_suite));
    out.push_back(run_suite("epsilon-unit-invariance", unit_suite));
    out.push_back(run_suite("class-polynomials", class_poly_suite));
    out.push_back(run_suite("gamma3-identity", gamma3_suite));
    out.push_back(run_suite("qcurve-discriminants", qcurve_model_suite));
    out.push_back(run_suite("weber-residuals", [prec](Tally &t) { weber_suite(t, prec); }));
    if (quick)
        return out;
    out.push_back(run_suite("oracle-sweep", [prime_bound](Tally &t) { oracle_suite(t, prime_bound); }));
    out.push_back(run_suite("special-j", [prime_bound](Tally &t) { special_suite(t, prime_bound); }));
    out.push_back(run_suite("count-1mod4", [prime_bound](Tally &t) { onemod4_suite(t, prime_bound); }));
    out.push_back(run_suite("qcurve-crosscheck", [prime_bound](Tally &t) { qcurve_suite(t, prime_bound); }));
    out.push_back(run_suite("construction", construct_suite));
    return out;
}

} // namespace cmcount
