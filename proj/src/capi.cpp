// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cmcount/cmcount.h"

#include <cmath>
#include <map>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cmcount/bigarith.hpp"
#include "cmcount/classfield.hpp"
#include "cmcount/counting.hpp"
#include "cmcount/epsilon.hpp"
#include "cmcount/errors.hpp"
#include "cmcount/modfunc.hpp"
#include "cmcount/qcurve.hpp"
#include "cmcount/selftest.hpp"

using nlohmann::ordered_json;

struct cmc_context {
    long precision = 256;
    std::uint64_t seed = 1;
    std::string last_error;
    std::string last_reason;
};

struct cmc_result {
    std::string json;
    std::string text;
    ordered_json doc;
    std::map<std::string, std::string> fields;
};

namespace {

using namespace cmcount;

ordered_json num(const mpz_class &z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class parse_int(const char *text, const char *what)
{
    if (text == nullptr)
        fail(ErrorKind::InvalidArgument, std::string("missing ") + what);
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        fail(ErrorKind::InvalidArgument, std::string("not an integer for ") + what + ": '" + text + "'");
    return z;
}

ordered_json curve_json(const CurveFp &c)
{
    return ordered_json{{"p", num(c.p)}, {"a", num(c.a)}, {"b", num(c.b)}};
}

ordered_json frobenius_json(const FrobeniusData &fd)
{
    const mpq_class u = fd.lambda.u(), v = fd.lambda.v();
    ordered_json j;
    j["lambda"] = ordered_json::array({num(u.get_num()), num(u.get_den()), num(v.get_num()), num(v.get_den())});
    j["epsilon"] = fd.epsilon.power_string();
    j["W"] = fd.W.power_string();
    j["trace"] = num(fd.trace);
    j["count"] = num(fd.count);
    j["branch"] = to_string(fd.branch);
    return j;
}

std::string frobenius_text(const FrobeniusData &fd)
{
    std::ostringstream os;
    os << "lambda  " << fd.lambda.to_string() << "\n"
       << "epsilon " << fd.epsilon.value_string() << "\n"
       << "W       " << fd.W.value_string() << "\n"
       << "trace   " << fd.trace.get_str() << "\n"
       << "count   " << fd.count.get_str() << "\n"
       << "branch  " << to_string(fd.branch) << "\n";
    return os.str();
}

std::vector<std::string> coeff_strings_high_first(const std::vector<mpq_class> &c)
{
    std::vector<std::string> out;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        out.push_back(it->get_str());
    return out;
}

std::string lines(const std::vector<std::string> &v)
{
    std::string s;
    for (const auto &x : v)
        s += x + "\n";
    return s;
}

cmc_result *make_result(ordered_json doc, std::string text)
{
    auto *r = new cmc_result;
    r->json = doc.dump(2) + "\n";
    r->doc = std::move(doc);
    r->text = text.empty() ? r->json : std::move(text);
    return r;
}

cmc_status status_of(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument:
        return CMC_INVALID_ARGUMENT;
    case ErrorKind::Precondition:
        return CMC_PRECONDITION;
    case ErrorKind::NoSolution:
        return CMC_NO_SOLUTION;
    case ErrorKind::Inconsistent:
        return CMC_INCONSISTENT;
    case ErrorKind::Resource:
        return CMC_RESOURCE;
    case ErrorKind::Domain:
        return CMC_DOMAIN;
    }
    return CMC_INTERNAL;
}

template <class F>
cmc_status guarded(cmc_context *ctx, cmc_result **out, F &&body)
{
    if (ctx == nullptr || out == nullptr)
        return CMC_INVALID_ARGUMENT;
    *out = nullptr;
    ctx->last_error.clear();
    ctx->last_reason.clear();
    try {
        *out = body();
        return CMC_OK;
    } catch (const Error &e) {
        ctx->last_error = e.what();
        ctx->last_reason = cmcount::to_string(e.reason());
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        ctx->last_error = "out of memory";
        return CMC_RESOURCE;
    } catch (const std::exception &e) {
        ctx->last_error = e.what();
        return CMC_INTERNAL;
    }
}

int digits_for(long prec)
{
    return static_cast<int>(std::floor(static_cast<double>(prec) * 0.30103)) - 2;
}

ordered_json complex_json(const BigComplex &z, int digits)
{
    return ordered_json{{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}};
}

} // namespace

extern "C" {

const char *cmc_version(void)
{
    return "1.0.0";
}

const char *cmc_status_string(cmc_status status)
{
    switch (status) {
    case CMC_OK:
        return "ok";
    case CMC_INVALID_ARGUMENT:
        return "invalid-argument";
    case CMC_PRECONDITION:
        return "precondition";
    case CMC_NO_SOLUTION:
        return "no-solution";
    case CMC_INCONSISTENT:
        return "internal-inconsistency";
    case CMC_RESOURCE:
        return "resource";
    case CMC_DOMAIN:
        return "domain";
    case CMC_INTERNAL:
        return "internal";
    }
    return "unknown";
}

int cmc_exit_code(cmc_status status)
{
    switch (status) {
    case CMC_OK:
        return 0;
    case CMC_NO_SOLUTION:
        return 3;
    case CMC_INCONSISTENT:
        return 4;
    case CMC_INTERNAL:
        return 70;
    default:
        return 2;
    }
}

cmc_status cmc_context_new(cmc_context **out)
{
    if (out == nullptr)
        return CMC_INVALID_ARGUMENT;
    *out = new (std::nothrow) cmc_context;
    return *out ? CMC_OK : CMC_RESOURCE;
}

void cmc_context_free(cmc_context *ctx)
{
    delete ctx;
}

cmc_status cmc_context_set_precision(cmc_context *ctx, long bits)
{
    if (ctx == nullptr || bits < 64)
        return CMC_INVALID_ARGUMENT;
    ctx->precision = bits;
    return CMC_OK;
}

long cmc_context_precision(const cmc_context *ctx)
{
    return ctx ? ctx->precision : 0;
}

cmc_status cmc_context_set_seed(cmc_context *ctx, uint64_t seed)
{
    if (ctx == nullptr)
        return CMC_INVALID_ARGUMENT;
    ctx->seed = seed;
    return CMC_OK;
}

const char *cmc_context_last_error(const cmc_context *ctx)
{
    return ctx ? ctx->last_error.c_str() : "";
}

const char *cmc_context_last_reason(const cmc_context *ctx)
{
    return ctx ? ctx->last_reason.c_str() : "";
}

cmc_status cmc_count(cmc_context *ctx, int64_t D, const char *p, const char *a, const char *b, const char *s,
                     cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const Discriminant disc = Discriminant::make(D);
        const CurveFp curve = CurveFp::make(parse_int(p, "p"), parse_int(a, "a"), parse_int(b, "b"));
        FrobeniusData fd = [&] {
            if (D == -4)
                return count_special(curve, SpecialJ::J1728);
            if (D == -3)
                return count_special(curve, SpecialJ::J0);
            if (s == nullptr)
                return frobenius_trace(disc, curve);
            return frobenius_trace(disc, curve, curve.j_invariant(), mod(parse_int(s, "s"), curve.p));
        }();
        ordered_json j = frobenius_json(fd);
        j["D"] = D;
        j["curve"] = curve_json(curve);
        return make_result(j, frobenius_text(fd));
    });
}

cmc_status cmc_count_1mod4(cmc_context *ctx, int64_t D, const char *p, const char *a, const char *b,
                           cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const Discriminant disc = Discriminant::make(D);
        const CurveFp curve = CurveFp::make(parse_int(p, "p"), parse_int(a, "a"), parse_int(b, "b"));
        const FrobeniusData fd = count_1mod4(disc, curve);
        ordered_json j = frobenius_json(fd);
        j["D"] = D;
        j["curve"] = curve_json(curve);
        return make_result(j, frobenius_text(fd));
    });
}

cmc_status cmc_oracle(cmc_context *ctx, const char *p, const char *a, const char *b, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const mpz_class P = parse_int(p, "p");
        const mpz_class n = naive_count(P, parse_int(a, "a"), parse_int(b, "b"));
        const ordered_json curve{{"p", num(P)}, {"a", num(mod(parse_int(a, "a"), P))}, {"b", num(mod(parse_int(b, "b"), P))}};
        return make_result(ordered_json{{"count", num(n)}, {"curve", curve}}, n.get_str() + "\n");
    });
}

cmc_status cmc_construct(cmc_context *ctx, int64_t D, const char *p, const char *target, int by_trace,
                         cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const Discriminant disc = Discriminant::make(D);
        const mpz_class P = parse_int(p, "p");
        const mpz_class T = parse_int(target, by_trace ? "trace" : "count");
        const Construction c = by_trace ? cm_construct(disc, P, T, ctx->seed) : cm_construct_count(disc, P, T, ctx->seed);
        ordered_json cert{{"seed", c.certificate.seed},
                          {"points_checked", c.certificate.points_checked},
                          {"passed", c.certificate.passed}};
        cert["naive_count"] = c.certificate.naive ? num(*c.certificate.naive) : ordered_json(nullptr);
        ordered_json j{{"D", D},         {"curve", curve_json(c.curve)}, {"count", num(c.data.count)},
                       {"trace", num(c.data.trace)}, {"twisted", c.twisted},  {"frobenius", frobenius_json(c.data)},
                       {"certificate", cert}};
        std::ostringstream os;
        os << "y^2 = x^3 + " << c.curve.a.get_str() << "*x + " << c.curve.b.get_str() << " over F_" << c.curve.p.get_str()
           << "\n"
           << frobenius_text(c.data) << "certificate " << (c.certificate.passed ? "passed" : "failed") << " ("
           << c.certificate.points_checked << " points, seed " << c.certificate.seed << ")\n";
        return make_result(j, os.str());
    });
}

cmc_status cmc_epsilon_table(cmc_context *ctx, int64_t D, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const EpsilonTable t = epsilon_table(Discriminant::make(D));
        ordered_json rows = ordered_json::array();
        std::string text = t.keyed_by_cube ? "lambda^3 (mod 4)\n" : "lambda (mod 4)\n";
        for (const EpsilonRow &r : t.rows) {
            rows.push_back(ordered_json{{"class", r.label}, {"epsilon", r.value.power_string()}});
            text += r.label + " → " + r.value.power_string() + "\n";
        }
        ordered_json j{{"D", D}, {"key", t.keyed_by_cube ? "lambda^3 mod 4" : "lambda mod 4"}, {"rows", rows}};
        return make_result(j, text);
    });
}

cmc_status cmc_class_poly(cmc_context *ctx, int64_t D, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        Discriminant::make(D);
        const ClassPoly &H = hilbert_class_poly(D);
        std::vector<mpq_class> q(H.coeffs.begin(), H.coeffs.end());
        const auto cs = coeff_strings_high_first(q);
        ordered_json j{{"D", D},
                       {"degree", H.degree()},
                       {"coefficients", cs},
                       {"polynomial", H.as_qpoly().to_string()},
                       {"precision", H.precision},
                       {"confirm_precision", H.confirm_precision}};
        return make_result(j, lines(cs));
    });
}

cmc_status cmc_gamma3_poly(cmc_context *ctx, int64_t D, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        Discriminant::make(D);
        const GammaExpr &g = gamma3_poly(D);
        const auto cs = coeff_strings_high_first(g.G.coeffs());
        ordered_json j{{"D", D},
                       {"mode", g.mode == GammaMode::Odd ? "sqrt(D)*gamma3" : "sqrt(-D)*gamma3"},
                       {"coefficients", cs},
                       {"polynomial", g.G.to_string()},
                       {"G_times_derivative", coeff_strings_high_first(g.G_times_derivative.coeffs())},
                       {"signs", g.signs},
                       {"precision", g.precision}};
        return make_result(j, lines(cs));
    });
}

cmc_status cmc_weber(cmc_context *ctx, const char *re, const char *im, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        if (re == nullptr || im == nullptr)
            fail(ErrorKind::InvalidArgument, "missing tau");
        const long prec = ctx->precision;
        const BigComplex tau(BigReal(prec, std::string(re)), BigReal(prec, std::string(im)));
        const WeberValues w = weber_values(tau, prec);
        const int digits = digits_for(prec);
        ordered_json j{{"tau", ordered_json{{"re", re}, {"im", im}}},
                       {"precision", prec},
                       {"eta", complex_json(w.eta, digits)},
                       {"gamma2", complex_json(w.gamma2, digits)},
                       {"gamma3", complex_json(w.gamma3, digits)},
                       {"j", complex_json(w.j, digits)},
                       {"residuals",
                        ordered_json{{"gamma2", w.residual2.to_string(6)}, {"gamma3", w.residual3.to_string(6)}}}};
        return make_result(j, "");
    });
}

cmc_status cmc_qcurve(cmc_context *ctx, int64_t d, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const QcurveModel m = qcurve_model(d);
        ordered_json j{{"d", d},
                       {"D", m.D},
                       {"H", m.H.to_string("j")},
                       {"a", m.a.poly.to_string("j")},
                       {"b", m.b.poly.to_string("j")},
                       {"discriminant", m.discriminant.poly.to_string("j")},
                       {"discriminant_verified", m.discriminant_verified}};
        std::ostringstream os;
        os << "field   Q(j), H(j) = " << m.H.to_string("j") << "\n"
           << "curve   y^2 = x^3 + (" << m.a.poly.to_string("j") << ")*x + (" << m.b.poly.to_string("j") << ")\n"
           << "Delta   " << m.discriminant.poly.to_string("j") << (m.discriminant_verified ? "  (verified)" : "")
           << "\n";
        return make_result(j, os.str());
    });
}

cmc_status cmc_qcurve_check(cmc_context *ctx, int64_t d, const char *p, cmc_result **out)
{
    return guarded(ctx, out, [&] {
        const QcurveReport r = qcurve_crosscheck(d, parse_int(p, "p"));
        const mpq_class u = r.lambda.u(), v = r.lambda.v();
        ordered_json j{{"d", d},
                       {"p", num(r.p)},
                       {"j0", num(r.j0)},
                       {"s", num(r.s)},
                       {"curve", curve_json(r.reduced)},
                       {"lambda", {num(u.get_num()), num(u.get_den()), num(v.get_num()), num(v.get_den())}},
                       {"beta_symbol", r.beta_symbol},
                       {"epsilon", r.epsilon.power_string()},
                       {"trace_main", num(r.trace_main)},
                       {"trace_hecke", num(r.trace_hecke)},
                       {"trace_counting", num(r.trace_counting)},
                       {"trace_naive", r.trace_naive ? num(*r.trace_naive) : ordered_json(nullptr)},
                       {"agree", r.agree}};
        return make_result(j, "");
    });
}

cmc_status cmc_selftest(cmc_context *ctx, int quick, cmc_result **out)
{
    bool all = true;
    const cmc_status st = guarded(ctx, out, [&] {
        const auto results = run_selftest(quick != 0, ctx->precision);
        ordered_json suites = ordered_json::array();
        std::ostringstream os;
        for (const SuiteResult &r : results) {
            all = all && r.passed;
            suites.push_back(ordered_json{{"name", r.name},
                                          {"passed", r.passed},
                                          {"cases", r.cases},
                                          {"seconds", std::round(r.seconds * 1000) / 1000},
                                          {"detail", r.detail}});
            os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases) " << r.detail << "\n";
        }
        return make_result(ordered_json{{"passed", all}, {"suites", suites}}, os.str());
    });
    if (st == CMC_OK && !all) {
        ctx->last_error = "self-test failed";
        return CMC_INCONSISTENT;
    }
    return st;
}

const char *cmc_result_json(const cmc_result *result)
{
    return result ? result->json.c_str() : nullptr;
}

const char *cmc_result_text(const cmc_result *result)
{
    return result ? result->text.c_str() : nullptr;
}

const char *cmc_result_field(cmc_result *result, const char *key)
{
    if (result == nullptr || key == nullptr || !result->doc.is_object() || !result->doc.contains(key))
        return nullptr;
    const ordered_json &v = result->doc[key];
    if (v.is_structured())
        return nullptr;
    auto &slot = result->fields[key];
    slot = v.is_string() ? v.get<std::string>() : v.dump();
    return slot.c_str();
}

void cmc_result_free(cmc_result *result)
{
    delete result;
}

} // extern "C"
