#include <doctest.h>

#include "neighborly/verify.hpp"

using namespace neighborly;

namespace {

verify::Config small()
{
    verify::Config cfg;
    cfg.formulas = 8;
    cfg.witness_formulas = 2;
    cfg.max_vertices = 4;
    cfg.chain_max_vertices = 4;
    cfg.join_max_vertices = 4;
    cfg.minimal_unsat = 1;
    cfg.theta_pairs = 5;
    cfg.theta_max_vertices = 3;
    return cfg;
}

} // namespace

TEST_CASE("suite names")
{
    for (auto s : {verify::Suite::SatWitness, verify::Suite::ColoringWitness, verify::Suite::VcWitness,
                   verify::Suite::OracleBudgets, verify::Suite::CriticalityCrosschecks, verify::Suite::All})
        CHECK(verify::parse_suite(verify::to_string(s)) == s);
    CHECK_THROWS(verify::parse_suite("everything"));
}

TEST_CASE("small graph corpus")
{
    CHECK(verify::small_graph_corpus(3).size() == 1 + 1 + 2 + 8);
    CHECK(verify::small_graph_corpus(7).size() == 1 + 1 + 2 + 8 + 64 + 1024 + 32768 + 1044);
}

TEST_CASE("suites pass on a small configuration and render deterministically")
{
    const auto cfg = small();
    auto a = verify::run(verify::Suite::All, cfg);
    REQUIRE(a.size() == 5);
    CHECK(verify::all_passed(a));
    for (const auto& s : a)
        for (const auto& p : s.properties) {
            CAPTURE(p.name);
            CHECK(p.passed());
        }
    auto b = verify::run(verify::Suite::All, cfg);
    CHECK(verify::render(a, cfg) == verify::render(b, cfg));

    const std::string text = verify::render(a, cfg);
    CHECK(text.rfind("neighborly verify (seed 42)\n", 0) == 0);
    CHECK(text.find("[oracle-budgets]") != std::string::npos);
    CHECK(text.find("PASS colorer:") != std::string::npos);
    CHECK(text.find("max queries") != std::string::npos);
    CHECK(text.find("summary: PASS") != std::string::npos);
}

TEST_CASE("failures are reported with counterexamples")
{
    verify::PropertyResult p{"demo"};
    CHECK_FALSE(p.passed());
    p.checked = 10;
    CHECK(p.passed());
    for (int i = 0; i < 8; ++i) p.fail("case " + std::to_string(i));
    CHECK(p.failures == 8);
    CHECK(p.counterexamples.size() == 5);
    verify::SuiteResult s{"demo-suite", {p}};
    const std::string text = verify::render({s}, verify::Config{});
    CHECK(text.find("FAIL demo: 10 checked, 8 failures") != std::string::npos);
    CHECK(text.find("    counterexample: case 0") != std::string::npos);
    CHECK(text.find("summary: FAIL 0/1 properties") != std::string::npos);
}
