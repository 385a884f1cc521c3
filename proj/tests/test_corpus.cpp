#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/graph_io.hpp"

using namespace neighborly;

TEST_CASE("random streams are reproducible")
{
    corpus::Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    corpus::Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        auto x = c.between(3, 7);
        CHECK(x >= 3);
        CHECK(x <= 7);
    }
}

TEST_CASE("random E3CNF formulas")
{
    corpus::Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        auto f = corpus::random_e3cnf(rng, 4, 6);
        CHECK(is_e3cnf(f));
        CHECK(f.clause_count() == 6);
        CHECK(f.variable_count() == 4);
        std::set<std::vector<Literal>> seen;
        for (auto c : f.clauses()) {
            CHECK_FALSE(is_tautology(c));
            std::sort(c.begin(), c.end());
            CHECK(seen.insert(c).second);
        }
    }
}

TEST_CASE("formula corpus respects its bounds and is deterministic")
{
    corpus::FormulaCorpusConfig cfg;
    auto a = corpus::formula_corpus(cfg);
    auto b = corpus::formula_corpus(cfg);
    CHECK(a == b);
    REQUIRE(a.size() == 50);
    for (const auto& f : a) {
        CHECK(is_e3cnf(f));
        CHECK(f.variable_count() >= 3);
        CHECK(f.variable_count() <= 6);
        CHECK(f.clause_count() >= 2);
        CHECK(f.clause_count() <= 4);
    }
    cfg.seed = 43;
    CHECK(corpus::formula_corpus(cfg) != a);
}

TEST_CASE("minimal unsatisfiable corpus")
{
    for (const auto& f : corpus::minimal_unsat_corpus(42, 5)) {
        CHECK(is_e3cnf(f));
        CHECK(brute::minimal_unsat(f));
    }
    CnfFormula g(4, {{pos(0)}, {neg(0)}, {pos(1), pos(2), pos(3)}});
    auto core = corpus::minimal_unsat_core(g);
    CHECK(brute::minimal_unsat(core));
    CHECK(core.clause_count() == 2);
}

TEST_CASE("labeled enumeration")
{
    std::size_t count = 0;
    corpus::for_each_labeled_graph(4, [&](const Graph& g) {
        CHECK(g.vertex_count() == 4);
        ++count;
    });
    CHECK(count == 64);
}

TEST_CASE("isomorphism classes")
{
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n < 8; ++n) CHECK(corpus::nonisomorphic_graphs(n).size() == expected[n]);

    // Canonical forms agree on relabelings and separate the classes.
    std::set<std::string> codes;
    corpus::for_each_labeled_graph(5, [&](const Graph& g) { codes.insert(io::to_graph6(corpus::canonical_form(g))); });
    CHECK(codes.size() == 34);
}
