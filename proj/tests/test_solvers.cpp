#include <doctest.h>

#include "brute.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/error.hpp"
#include "neighborly/solvers.hpp"

using namespace neighborly;

TEST_CASE("sat_solve examples")
{
    CnfFormula one(3, {{pos(0), pos(1), pos(2)}});
    auto a = sat_solve(one);
    REQUIRE(a);
    CHECK(evaluate(one, *a));
    CHECK_FALSE(sat_solve(CnfFormula(1, {{pos(0)}, {neg(0)}})));
    CHECK(sat_solve(CnfFormula(2)));
}

TEST_CASE("sat_solve agrees with truth tables")
{
    corpus::Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = rng.between(3, 7);
        const std::size_t most = n == 3 ? 8 : 3 * n + 8;
        auto f = corpus::random_e3cnf(rng, n, rng.between(1, most));
        auto a = sat_solve(f);
        CHECK(a.has_value() == brute::satisfiable(f));
        if (a) CHECK(evaluate(f, *a));
    }
}

TEST_CASE("k_colorable examples")
{
    CHECK_FALSE(k_colorable(make_cycle(5), 2));
    auto c = k_colorable(make_cycle(5), 3);
    REQUIRE(c);
    CHECK(brute::proper(make_cycle(5), *c));
    auto p = k_colorable(brute::petersen(), 3);
    REQUIRE(p);
    CHECK(brute::proper(brute::petersen(), *p));
    CHECK(brute::chi(brute::petersen()) == 3);
}

TEST_CASE("chromatic_number examples")
{
    CHECK(chromatic_number(Graph(5)).chi == 1);
    CHECK(chromatic_number(make_clique(4)).chi == 4);
    const Graph wheel = graph_join(make_cycle(5), make_clique(1));
    CHECK(chromatic_number(wheel).chi == 4);
    CHECK(brute::chi(wheel) == 4);
    CHECK_THROWS_AS(chromatic_number(Graph()), Error);
}

TEST_CASE("chromatic_number matches exhaustive search on all graphs up to 5 vertices")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        corpus::for_each_labeled_graph(n, [](const Graph& g) {
            auto r = chromatic_number(g);
            CHECK(r.chi == brute::chi(g));
            CHECK(brute::proper(g, r.coloring));
            CHECK(brute::colors_used(r.coloring) == r.chi);
        });
    }
}

TEST_CASE("chromatic_number on random 8-vertex graphs")
{
    corpus::Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        Graph g = corpus::random_graph(rng, 8);
        auto r = chromatic_number(g);
        CHECK(r.chi == brute::chi(g));
        CHECK(brute::proper(g, r.coloring));
    }
}

TEST_CASE("colorings are normalized")
{
    auto c = k_colorable(make_path(4), 3);
    REQUIRE(c);
    CHECK(c->colors.front() == 1);
    CHECK(normalize(Coloring{{3, 1, 3, 2}}).colors == std::vector<std::size_t>{1, 2, 1, 3});
}

TEST_CASE("large graphs use the CNF encoding")
{
    // 30 disjoint triangles plus a 5-cycle: 95 vertices, chi 3.
    Graph g;
    for (int i = 0; i < 30; ++i) g = disjoint_union(g, make_clique(3));
    g = disjoint_union(g, make_cycle(5));
    CHECK_FALSE(k_colorable(g, 2));
    auto c = k_colorable(g, 3);
    REQUIRE(c);
    CHECK(brute::proper(g, *c));
    CHECK(chromatic_number(graph_join(g, make_clique(1))).chi == 4);
}

TEST_CASE("min_vertex_cover examples")
{
    auto k5 = min_vertex_cover(make_clique(5));
    CHECK(k5.size() == 4);
    CHECK(brute::is_cover(make_clique(5), k5));
    CHECK(min_vertex_cover(make_cycle(5)).size() == 3);
    CHECK(brute::beta(make_cycle(5)) == 3);
    CHECK(min_vertex_cover(Graph(4)).empty());
    CHECK(min_vertex_cover(Graph()).empty());
}

TEST_CASE("min_vertex_cover matches exhaustive search")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        corpus::for_each_labeled_graph(n, [](const Graph& g) {
            auto c = min_vertex_cover(g);
            CHECK(brute::is_cover(g, c));
            CHECK(c.size() == brute::beta(g));
        });
    }
    corpus::Rng rng(9);
    for (int t = 0; t < 100; ++t) {
        Graph g = corpus::random_graph(rng, rng.between(6, 14));
        auto c = min_vertex_cover(g);
        CHECK(brute::is_cover(g, c));
        CHECK(c.size() == brute::beta(g));
    }
}

TEST_CASE("min_vertex_cover on graphs above the branching limit")
{
    // 25 disjoint triangles and 10 disjoint edges: beta = 50 + 10.
    Graph g;
    for (int i = 0; i < 25; ++i) g = disjoint_union(g, make_clique(3));
    for (int i = 0; i < 10; ++i) g = disjoint_union(g, make_clique(2));
    auto c = min_vertex_cover(g);
    CHECK(c.size() == 60);
    CHECK(is_vertex_cover(g, c));

    // Complement of a perfect matching on 70 vertices: beta = 68.
    Graph m(70);
    for (Vertex v = 0; v < 70; v += 2) m.add_edge(v, v + 1);
    auto cc = min_vertex_cover(complement(m));
    CHECK(cc.size() == 68);
    CHECK(is_vertex_cover(complement(m), cc));
}

TEST_CASE("solvers honor time budgets")
{
    // The pigeonhole principle with 9 pigeons is far beyond a millisecond.
    CnfFormula php(9 * 8);
    auto var = [](std::size_t p, std::size_t h) { return p * 8 + h; };
    for (std::size_t p = 0; p < 9; ++p) {
        Clause c;
        for (std::size_t h = 0; h < 8; ++h) c.push_back(pos(var(p, h)));
        php.add_clause(c);
    }
    for (std::size_t h = 0; h < 8; ++h)
        for (std::size_t p = 0; p < 9; ++p)
            for (std::size_t q = p + 1; q < 9; ++q) php.add_clause({neg(var(p, h)), neg(var(q, h))});
    try {
        sat_solve(php, std::chrono::milliseconds(1));
        FAIL("expected a timeout");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Timeout);
    }
}
