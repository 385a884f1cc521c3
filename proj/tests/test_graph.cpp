#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/error.hpp"
#include "neighborly/graph.hpp"

using namespace neighborly;

TEST_CASE("apply_modification on small graphs")
{
    const Graph k3 = make_clique(3);

    Graph p = apply_modification(k3, DeleteEdge{0, 1});
    CHECK(p.edge_count() == 2);
    CHECK(p.has_edge(0, 2));
    CHECK(p.has_edge(1, 2));
    CHECK_FALSE(p.has_edge(0, 1));

    CHECK(apply_modification(k3, DeleteVertex{2}) == make_clique(2));
    CHECK(apply_modification(make_cycle(5), AddEdge{0, 2}).edge_count() == 6);

    Graph grown = apply_modification(k3, AddVertex{{0, 2}});
    CHECK(grown.vertex_count() == 4);
    CHECK(grown.degree(3) == 2);

    Graph tri = apply_modification(make_clique(4), DeleteTriangle{0, 1, 3});
    CHECK(tri.vertex_count() == 1);
    CHECK(tri.edge_count() == 0);
}

TEST_CASE("apply_modification rejects invalid modifications")
{
    const Graph k3 = make_clique(3);
    CHECK_THROWS_AS(apply_modification(k3, AddEdge{0, 1}), Error);
    CHECK_THROWS_AS(apply_modification(k3, DeleteEdge{0, 5}), Error);
    CHECK_THROWS_AS(apply_modification(k3, DeleteVertex{3}), Error);
    CHECK_THROWS_AS(apply_modification(k3, DeleteClause{0}), Error);
    CHECK_THROWS_AS(apply_modification(make_path(3), DeleteTriangle{0, 1, 2}), Error);
}

TEST_CASE("remove_vertex shifts ids and role tags")
{
    Graph g(3);
    g.set_role(2, RoleTag::vs());
    g.add_edge(0, 2);
    g.remove_vertex(1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.role(1) == RoleTag::vs());
}

TEST_CASE("role tags round-trip through text")
{
    for (RoleTag t : {RoleTag::plain(), RoleTag::vc(), RoleTag::vs(), RoleTag::literal(3, true),
                      RoleTag::gadget(Role::T, 4, 2)})
        CHECK(parse_role_tag(to_string(t)) == t);
    CHECK_FALSE(parse_role_tag("nonsense"));
}

TEST_CASE("neighborhoods")
{
    auto n = neighborhoods(make_cycle(5), 0);
    CHECK(n.open == std::vector<Vertex>{1, 4});
    CHECK(n.closed == std::vector<Vertex>{0, 1, 4});

    auto iso = neighborhoods(Graph(3), 1);
    CHECK(iso.open.empty());
    CHECK(iso.closed == std::vector<Vertex>{1});

    CHECK(neighborhoods(make_clique(4), 2).open == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("universal edges")
{
    for (std::size_t n = 1; n <= 6; ++n) CHECK(is_universal_edged(make_clique(n)));
    // Edge {0, 1} of C5 misses vertex 3.
    CHECK_FALSE(is_universal_edged(make_cycle(5)));
    CHECK_FALSE(is_universal_edge(make_cycle(5), 0, 1));
    CHECK(is_universal_edged(complement(make_path(2))));
    CHECK(is_universal_edged(Graph(4)));

    const Graph p4 = make_path(4);
    CHECK_FALSE(is_universal_edged(p4));
    CHECK_FALSE(is_universal_edge(p4, 0, 1));
    CHECK_THROWS_AS(is_universal_edge(p4, 0, 2), Error);
    auto w = find_non_universal(p4);
    REQUIRE(w);
    CHECK(w->edge == Edge(0, 1));
    CHECK(w->x == 3);
}

TEST_CASE("universal-edge predicate agrees with its definition on all graphs up to 5 vertices")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        corpus::for_each_labeled_graph(n, [&](const Graph& g) {
            bool expected = true;
            for (const auto& e : g.edges())
                for (Vertex x = 0; x < n; ++x)
                    if (x != e.u && x != e.v && !g.has_edge(x, e.u) && !g.has_edge(x, e.v)) expected = false;
            CHECK(is_universal_edged(g) == expected);
            CHECK(find_non_universal(g).has_value() == !expected);
        });
    }
}

TEST_CASE("bipartition")
{
    auto c4 = bipartition(make_cycle(4));
    REQUIRE(c4);
    CHECK(c4->a == std::vector<Vertex>{0, 2});
    CHECK(c4->b == std::vector<Vertex>{1, 3});

    CHECK_FALSE(bipartition(make_cycle(5)));

    auto edgeless = bipartition(Graph(3));
    REQUIRE(edgeless);
    CHECK(edgeless->a == std::vector<Vertex>{0, 1, 2});
    CHECK(edgeless->b.empty());
}

TEST_CASE("bipartition exists iff two colors suffice")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        corpus::for_each_labeled_graph(n, [&](const Graph& g) {
            auto b = bipartition(g);
            CHECK(b.has_value() == brute::colorable(g, 2));
            if (!b) return;
            for (const auto& e : g.edges()) {
                const bool ua = std::count(b->a.begin(), b->a.end(), e.u) > 0;
                const bool va = std::count(b->a.begin(), b->a.end(), e.v) > 0;
                CHECK(ua != va);
            }
        });
    }
}

TEST_CASE("graph join and union")
{
    CHECK(graph_join(make_clique(2), make_clique(1)) == make_clique(3));
    Graph c4 = graph_join(Graph(2), Graph(2));
    CHECK(c4.edge_count() == 4);
    CHECK(bipartition(c4));
    CHECK(graph_join(make_cycle(5), make_clique(1)).edge_count() == 10);

    Graph u = disjoint_union(make_clique(3), make_clique(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(3, 4));
}

TEST_CASE("constructors, complements and induced subgraphs")
{
    CHECK(make_clique(3).edge_count() == 3);
    CHECK(make_path(4).edge_count() == 3);
    CHECK(make_cycle(6).edge_count() == 6);
    CHECK(complement(make_clique(4)).edge_count() == 0);
    CHECK(complement(complement(make_cycle(5))) == make_cycle(5));
    Graph sub = induced_subgraph(make_cycle(5), {0, 1, 2});
    CHECK(sub == make_path(3));
}

TEST_CASE("triangles")
{
    CHECK(enumerate_triangles(make_clique(4)).size() == 4);
    CHECK(enumerate_triangles(make_cycle(5)).empty());
    auto ts = enumerate_triangles(make_clique(4));
    CHECK(ts.front() == Triangle{0, 1, 2});
    CHECK(ts.back() == Triangle{1, 2, 3});
}

TEST_CASE("complete multipartite recognition")
{
    CHECK(is_complete(make_clique(5)));
    CHECK_FALSE(is_complete(make_cycle(4)));
    auto parts = complete_multipartite_parts(make_cycle(4));
    REQUIRE(parts);
    CHECK(parts->size() == 2);
    CHECK((*parts)[0] == std::vector<Vertex>{0, 2});
    CHECK_FALSE(complete_multipartite_parts(make_path(4)));
}
