// This file is part of cmcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cmcount/cmcount.h"

using nlohmann::json;

namespace {

struct Ctx {
    cmc_context *ctx = nullptr;
    Ctx() { REQUIRE(cmc_context_new(&ctx) == CMC_OK); }
    ~Ctx() { cmc_context_free(ctx); }
};

struct Res {
    cmc_result *r = nullptr;
    ~Res() { cmc_result_free(r); }
    json parsed() const { return json::parse(cmc_result_json(r)); }
};

} // namespace

TEST_CASE("status strings and exit codes")
{
    CHECK(std::string(cmc_version()).size() > 0);
    CHECK(cmc_exit_code(CMC_OK) == 0);
    CHECK(cmc_exit_code(CMC_INVALID_ARGUMENT) == 2);
    CHECK(cmc_exit_code(CMC_PRECONDITION) == 2);
    CHECK(cmc_exit_code(CMC_NO_SOLUTION) == 3);
    CHECK(cmc_exit_code(CMC_INCONSISTENT) == 4);
    CHECK(cmc_exit_code(CMC_RESOURCE) == 2);
    CHECK(cmc_exit_code(CMC_DOMAIN) == 2);
    CHECK(cmc_exit_code(CMC_INTERNAL) == 70);
    for (int s = CMC_OK; s <= CMC_INTERNAL; ++s)
        CHECK(cmc_status_string(static_cast<cmc_status>(s)) != nullptr);
}

TEST_CASE("null handling")
{
    CHECK(cmc_context_new(nullptr) == CMC_INVALID_ARGUMENT);
    cmc_context_free(nullptr);
    cmc_result_free(nullptr);
    cmc_result *r = nullptr;
    CHECK(cmc_count(nullptr, -7, "11", "9", "10", nullptr, &r) == CMC_INVALID_ARGUMENT);
    Ctx c;
    CHECK(cmc_count(c.ctx, -7, "11", "9", "10", nullptr, nullptr) == CMC_INVALID_ARGUMENT);
    CHECK(cmc_count(c.ctx, -7, nullptr, "9", "10", nullptr, &r) == CMC_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(cmc_result_json(nullptr) == nullptr);
}

TEST_CASE("context settings")
{
    Ctx c;
    CHECK(cmc_context_precision(c.ctx) == 256);
    CHECK(cmc_context_set_precision(c.ctx, 32) == CMC_INVALID_ARGUMENT);
    CHECK(cmc_context_set_precision(c.ctx, 512) == CMC_OK);
    CHECK(cmc_context_precision(c.ctx) == 512);
    CHECK(cmc_context_set_seed(c.ctx, 42) == CMC_OK);
}

TEST_CASE("count and oracle")
{
    Ctx c;
    Res r;
    REQUIRE(cmc_count(c.ctx, -7, "11", "9", "10", nullptr, &r.r) == CMC_OK);
    const json j = r.parsed();
    CHECK(j["count"] == 16);
    CHECK(j["trace"] == -4);
    CHECK(j["branch"] == "odd");
    CHECK(std::string(cmc_result_field(r.r, "count")) == "16");
    CHECK(cmc_result_field(r.r, "no-such-key") == nullptr);
    Res o;
    REQUIRE(cmc_oracle(c.ctx, "11", "9", "10", &o.r) == CMC_OK);
    CHECK(o.parsed()["count"] == 16);
    Res special;
    REQUIRE(cmc_count(c.ctx, -3, "7", "0", "2", nullptr, &special.r) == CMC_OK);
    CHECK(special.parsed()["count"] == 9);
}

TEST_CASE("errors carry a status and a message")
{
    Ctx c;
    cmc_result *r = nullptr;
    CHECK(cmc_count(c.ctx, -7, "17", "1", "1", nullptr, &r) == CMC_NO_SOLUTION);
    CHECK(std::string(cmc_context_last_reason(c.ctx)) == "inert");
    CHECK(std::string(cmc_context_last_error(c.ctx)).size() > 0);
    CHECK(cmc_count(c.ctx, -7, "11", "1", "1", nullptr, &r) == CMC_PRECONDITION);
    CHECK(cmc_count(c.ctx, -5, "11", "1", "1", nullptr, &r) == CMC_INVALID_ARGUMENT);
    CHECK(cmc_count(c.ctx, -7, "eleven", "1", "1", nullptr, &r) == CMC_INVALID_ARGUMENT);
    CHECK(cmc_construct(c.ctx, -7, "11", "24", 0, &r) == CMC_PRECONDITION);
    CHECK(std::string(cmc_context_last_reason(c.ctx)) == "infeasible");
    CHECK(cmc_qcurve(c.ctx, 5, &r) == CMC_PRECONDITION);
    CHECK(cmc_weber(c.ctx, "0", "-1", &r) == CMC_DOMAIN);
    CHECK(r == nullptr);
}

TEST_CASE("construct")
{
    Ctx c;
    Res r;
    REQUIRE(cmc_construct(c.ctx, -7, "11", "16", 0, &r.r) == CMC_OK);
    const json j = r.parsed();
    CHECK(j["count"] == 16);
    CHECK(j["certificate"]["passed"] == true);
    CHECK(j["certificate"]["naive_count"] == 16);
    Res t;
    REQUIRE(cmc_construct(c.ctx, -7, "11", "4", 1, &t.r) == CMC_OK);
    CHECK(t.parsed()["trace"] == 4);
}

TEST_CASE("tables and polynomials")
{
    Ctx c;
    Res e;
    REQUIRE(cmc_epsilon_table(c.ctx, -16, &e.r) == CMC_OK);
    CHECK(e.parsed()["rows"].size() == 8);
    CHECK(std::string(cmc_result_text(e.r)).find("1+√-d → i^3") != std::string::npos);
    Res h;
    REQUIRE(cmc_class_poly(c.ctx, -23, &h.r) == CMC_OK);
    const json hj = h.parsed();
    CHECK(hj["degree"] == 3);
    CHECK(hj["coefficients"][3] == "12771880859375");
    CHECK(std::string(cmc_result_text(h.r)) == "1\n3491750\n-5151296875\n12771880859375\n");
    Res g;
    REQUIRE(cmc_gamma3_poly(c.ctx, -7, &g.r) == CMC_OK);
    CHECK(g.parsed()["coefficients"].size() == 1);
}

TEST_CASE("weber values")
{
    Ctx c;
    Res w;
    REQUIRE(cmc_weber(c.ctx, "0", "1", &w.r) == CMC_OK);
    const json j = w.parsed();
    CHECK(std::stod(j["j"]["re"].get<std::string>()) == doctest::Approx(1728.0).epsilon(1e-15));
    CHECK(std::stod(j["residuals"]["gamma2"].get<std::string>()) < 1e-60);
}

TEST_CASE("qcurve")
{
    Ctx c;
    Res m;
    REQUIRE(cmc_qcurve(c.ctx, 7, &m.r) == CMC_OK);
    CHECK(m.parsed()["discriminant_verified"] == true);
    Res x;
    REQUIRE(cmc_qcurve_check(c.ctx, 2, "17", &x.r) == CMC_OK);
    CHECK(x.parsed()["agree"] == true);
}

TEST_CASE("quick self-test")
{
    Ctx c;
    Res s;
    REQUIRE(cmc_selftest(c.ctx, 1, &s.r) == CMC_OK);
    for (const auto &suite : s.parsed()["suites"])
        CHECK(suite["passed"] == true);
}
