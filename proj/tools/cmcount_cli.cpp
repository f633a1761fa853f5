// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// cm-counter: command-line front end over the cmcount C interface.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmcount/cmcount.h"

namespace {

constexpr int kUsageExit = 64;

enum class Format { Natural, Json, Tsv, Human };

struct RunConfig {
    long precision = 256;
    std::uint64_t seed = 1;
    Format format = Format::Natural;
};

/// Natural output per command: JSON for structured reports, text for tables.
enum class Natural { Json, Text };

std::string tsv_of(const std::string &json_text)
{
    const auto doc = nlohmann::ordered_json::parse(json_text);
    std::string out;
    for (const auto &[k, v] : doc.items())
        out += k + "\t" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return out;
}

int emit(cmc_context *ctx, cmc_status st, cmc_result *res, const RunConfig &cfg, Natural natural)
{
    if (st != CMC_OK && res == nullptr) {
        std::cerr << "error: " << cmc_status_string(st) << ": " << cmc_context_last_error(ctx);
        const std::string reason = cmc_context_last_reason(ctx);
        if (!reason.empty() && reason != "none")
            std::cerr << " [" << reason << "]";
        std::cerr << "\n";
        return cmc_exit_code(st);
    }
    bool json = false;
    switch (cfg.format) {
    case Format::Json:
        json = true;
        break;
    case Format::Natural:
        json = natural == Natural::Json;
        break;
    case Format::Tsv:
        std::cout << tsv_of(cmc_result_json(res));
        break;
    case Format::Human:
        break;
    }
    if (cfg.format != Format::Tsv)
        std::cout << (json ? cmc_result_json(res) : cmc_result_text(res));
    cmc_result_free(res);
    if (st != CMC_OK)
        std::cerr << "error: " << cmc_status_string(st) << ": " << cmc_context_last_error(ctx) << "\n";
    return cmc_exit_code(st);
}

std::optional<long> precision_from_env()
{
    const char *env = std::getenv("CM_COUNTER_PREC");
    if (env == nullptr || *env == '\0')
        return std::nullopt;
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64)
        throw CLI::ValidationError("CM_COUNTER_PREC", "must be an integer >= 64");
    return v;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Point counts, class polynomials and Hecke characters for CM elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(cmc_version()));

    RunConfig cfg;
    std::string format = "auto";
    std::optional<long> prec_flag;
    app.add_option("--format", format, "Output mode")
        ->check(CLI::IsMember({"auto", "json", "tsv", "human"}))
        ->capture_default_str();
    app.add_option("--prec", prec_flag, "Working precision in bits (default 256, or CM_COUNTER_PREC)")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--seed", cfg.seed, "Seed for randomized certificates")->capture_default_str();

    std::int64_t D = 0, d = 0;
    std::string p, a, b, s, target;
    bool quick = false, quartic = false;

    auto *count = app.add_subcommand("count", "Point count from the CM formulas");
    count->add_option("-D", D, "Discriminant")->required();
    count->add_option("-p", p, "Prime")->required();
    count->add_option("-a", a, "Coefficient a")->required();
    count->add_option("-b", b, "Coefficient b")->required();
    count->add_option("-s", s, "Image of sqrt(-d) mod p selecting the prime");
    count->add_flag("--quartic", quartic, "Use the discriminant's quartic symbol (p = 1 mod 4)");

    auto *oracle = app.add_subcommand("oracle", "Point count by enumeration (p < 10^7)");
    oracle->add_option("-p", p, "Prime")->required();
    oracle->add_option("-a", a, "Coefficient a")->required();
    oracle->add_option("-b", b, "Coefficient b")->required();

    auto *construct = app.add_subcommand("construct", "Curve with a prescribed count or trace");
    construct->add_option("-D", D, "Discriminant")->required();
    construct->add_option("-p", p, "Prime")->required();
    auto *want_count = construct->add_option("--count", target, "Number of points");
    auto *want_trace = construct->add_option("--trace", target, "Frobenius trace");
    want_count->excludes(want_trace);

    auto *eps = app.add_subcommand("epsilon-table", "Values of epsilon on (O/4O)^x");
    eps->add_option("-D", D, "Discriminant")->required();

    auto *hcp = app.add_subcommand("class-poly", "Class polynomial, leading coefficient first");
    hcp->add_option("-D", D, "Discriminant")->required();

    auto *g3p = app.add_subcommand("gamma3-poly", "Polynomial G with G(j) = radical * gamma3");
    g3p->add_option("-D", D, "Discriminant")->required();

    auto *weber = app.add_subcommand("weber", "eta, gamma2, gamma3 and j at a point of the upper half-plane");
    std::vector<std::string> tau;
    weber->add_option("--tau", tau, "Real and imaginary part")->expected(2)->required();

    auto *qc = app.add_subcommand("qcurve", "Q-curve model over Q(j)");
    qc->add_option("-d", d, "Squarefree d = 2, 3 (mod 4)")->required();

    auto *qcc = app.add_subcommand("qcurve-check", "Compare the Q-curve character routes at p");
    qcc->add_option("-d", d, "Squarefree d = 2, 3 (mod 4)")->required();
    qcc->add_option("-p", p, "Prime")->required();

    auto *self = app.add_subcommand("selftest", "Run the built-in consistency suites");
    self->add_flag("--quick", quick, "Tables and identities only");

    try {
        app.parse(argc, argv);
        if (construct->parsed() && want_count->count() + want_trace->count() != 1)
            throw CLI::ValidationError("construct", "exactly one of --count and --trace is required");
        cfg.precision = prec_flag ? *prec_flag : precision_from_env().value_or(256);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsageExit;
    }
    cfg.format = format == "json"  ? Format::Json
                 : format == "tsv" ? Format::Tsv
                 : format == "human" ? Format::Human
                                     : Format::Natural;

    cmc_context *ctx = nullptr;
    if (cmc_context_new(&ctx) != CMC_OK)
        return 2;
    cmc_context_set_precision(ctx, cfg.precision);
    cmc_context_set_seed(ctx, cfg.seed);

    cmc_result *res = nullptr;
    cmc_status st = CMC_OK;
    Natural natural = Natural::Json;
    if (count->parsed()) {
        st = quartic ? cmc_count_1mod4(ctx, D, p.c_str(), a.c_str(), b.c_str(), &res)
                     : cmc_count(ctx, D, p.c_str(), a.c_str(), b.c_str(), s.empty() ? nullptr : s.c_str(), &res);
    } else if (oracle->parsed()) {
        st = cmc_oracle(ctx, p.c_str(), a.c_str(), b.c_str(), &res);
        natural = Natural::Text;
    } else if (construct->parsed()) {
        st = cmc_construct(ctx, D, p.c_str(), target.c_str(), want_trace->count() > 0, &res);
    } else if (eps->parsed()) {
        st = cmc_epsilon_table(ctx, D, &res);
        natural = Natural::Text;
    } else if (hcp->parsed()) {
        st = cmc_class_poly(ctx, D, &res);
        natural = Natural::Text;
    } else if (g3p->parsed()) {
        st = cmc_gamma3_poly(ctx, D, &res);
        natural = Natural::Text;
    } else if (weber->parsed()) {
        st = cmc_weber(ctx, tau[0].c_str(), tau[1].c_str(), &res);
    } else if (qc->parsed()) {
        st = cmc_qcurve(ctx, d, &res);
        natural = Natural::Text;
    } else if (qcc->parsed()) {
        st = cmc_qcurve_check(ctx, d, p.c_str(), &res);
    } else if (self->parsed()) {
        st = cmc_selftest(ctx, quick ? 1 : 0, &res);
        natural = Natural::Text;
    }
    const int rc = emit(ctx, st, res, cfg, natural);
    cmc_context_free(ctx);
    return rc;
}
