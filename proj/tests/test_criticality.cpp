#include <doctest.h>

#include "brute.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/criticality.hpp"
#include "neighborly/graph_io.hpp"
#include "neighborly/reductions.hpp"

using namespace neighborly;

namespace {

bool brute_chi_critical_edges(const Graph& g)
{
    if (g.edge_count() == 0) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    const std::size_t x = brute::chi(g);
    for (const auto& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        if (brute::chi(h) >= x) return false;
    }
    return true;
}

bool brute_beta_stable(const Graph& g)
{
    if (g.edge_count() == 0) return false;
    const std::size_t b = brute::beta(g);
    for (const auto& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        if (brute::beta(h) != b) return false;
    }
    return true;
}

} // namespace

TEST_CASE("minimally k-uncolorable")
{
    CHECK(is_minimally_k_uncolorable(make_clique(4), 3, Mode::Edge).verdict);
    CHECK(is_minimally_k_uncolorable(make_clique(4), 3, Mode::Vertex).verdict);

    Graph k4k1 = disjoint_union(make_clique(4), Graph(1));
    auto v = is_minimally_k_uncolorable(k4k1, 3, Mode::Vertex);
    CHECK_FALSE(v.verdict);
    CHECK(v.certificate == std::optional<Modification>(DeleteVertex{4}));

    auto e = is_minimally_k_uncolorable(k4k1, 3, Mode::Edge);
    CHECK_FALSE(e.verdict);
    CHECK(e.certificate == std::optional<Modification>(DeleteVertex{4}));

    auto c5 = is_minimally_k_uncolorable(make_cycle(5), 3, Mode::Edge);
    CHECK_FALSE(c5.verdict);
    CHECK_FALSE(c5.certificate);
    CHECK(c5.base == 3);
}

TEST_CASE("chi-critical")
{
    auto c5 = is_chi_critical(make_cycle(5), Mode::Edge);
    CHECK(c5.verdict);
    CHECK(c5.neighbors.size() == 5);
    for (const auto& n : c5.neighbors) CHECK(n.value == 2);

    auto c6 = is_chi_critical(make_cycle(6), Mode::Edge);
    CHECK_FALSE(c6.verdict);
    CHECK(c6.certificate == std::optional<Modification>(DeleteEdge{0, 1}));

    CHECK(is_chi_critical(make_clique(4), Mode::Vertex).verdict);
    auto edgeless = is_chi_critical(Graph(3), Mode::Edge);
    CHECK_FALSE(edgeless.verdict);
    CHECK(edgeless.degenerate);
    CHECK(is_chi_critical(Graph(), Mode::Vertex).degenerate);
}

TEST_CASE("beta-critical")
{
    CHECK(is_beta_critical(make_clique(3), Mode::Vertex).verdict);
    CHECK(is_beta_critical(theta_gadget(make_clique(3), make_clique(3)), Mode::Vertex).verdict);
    CHECK_FALSE(is_beta_critical(theta_gadget(make_clique(3), make_clique(2)), Mode::Vertex).verdict);
    CHECK(is_beta_critical(Graph(1), Mode::Vertex).degenerate);
    CHECK(is_beta_critical(make_clique(2), Mode::Edge).verdict);
}

TEST_CASE("reports serialize to JSON")
{
    auto r = is_chi_critical(make_cycle(3), Mode::Edge);
    const std::string j = r.to_json();
    CHECK(j.find("\"notion\":\"chi-critical\"") != std::string::npos);
    CHECK(j.find("\"certificate\":null") != std::string::npos);
    CHECK(j.find("\"deleted\":\"delete-edge 0 1\"") != std::string::npos);
}

TEST_CASE("minimal unsatisfiability")
{
    auto r = is_minimal_unsat(CnfFormula(1, {{pos(0)}, {neg(0)}}));
    CHECK(r.verdict);
    CHECK(r.satisfiable == std::vector<bool>{true, true});

    auto extra = is_minimal_unsat(CnfFormula(4, {{pos(0)}, {neg(0)}, {pos(1), pos(2), pos(3)}}));
    CHECK_FALSE(extra.verdict);
    CHECK(extra.certificate == std::optional<std::size_t>(2));

    CHECK_FALSE(is_minimal_unsat(CnfFormula(2, {{pos(0), pos(1)}})).verdict);

    for (const auto& phi : corpus::minimal_unsat_corpus(1, 3)) {
        CHECK(is_minimal_unsat(phi).verdict);
        CHECK(is_minimal_unsat(pw_transform(phi).formula).verdict);
    }
}

TEST_CASE("graphs of minimally unsatisfiable formulas are critical")
{
    const auto phi = corpus::minimal_unsat_corpus(4, 1).front();
    const Graph h = cai_meyer_graph(phi, false).graph;
    CHECK(is_minimally_k_uncolorable(h, 3, Mode::Edge).verdict);
    CHECK(is_chi_critical(h, Mode::Vertex).verdict);
}

TEST_CASE("chi-critical agrees with its definition on all graphs up to 5 vertices")
{
    for (std::size_t n = 1; n <= 5; ++n)
        corpus::for_each_labeled_graph(n, [](const Graph& g) {
            CHECK(is_chi_critical(g, Mode::Edge).verdict == brute_chi_critical_edges(g));
            const bool min3 = brute::chi(g) == 4 && brute_chi_critical_edges(g);
            CHECK(is_minimally_k_uncolorable(g, 3, Mode::Edge).verdict == min3);
        });
}

TEST_CASE("beta-stable graphs")
{
    CHECK(is_beta_stable(make_path(3)));
    CHECK_FALSE(is_beta_stable(make_clique(3)));
    CHECK_FALSE(is_beta_stable(Graph(3)));
    CHECK_FALSE(is_beta_stable(disjoint_union(make_clique(3), make_clique(3))));

    // Cliques each missing one edge.
    Graph k4e = make_clique(4);
    k4e.remove_edge(0, 1);
    CHECK(is_beta_stable(k4e));
    CHECK(is_beta_stable(disjoint_union(k4e, k4e)));

    auto three = find_beta_stable_graphs(3);
    bool has_p3 = false;
    for (const auto& g : three) {
        CHECK(g.edge_count() > 0);
        if (g.edge_count() == 2) has_p3 = true;
        CHECK(g != make_clique(3));
    }
    CHECK(has_p3);
}

TEST_CASE("beta-stable search matches its definition")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        auto classes = corpus::nonisomorphic_graphs(n);
        std::vector<Graph> expected;
        for (const auto& g : classes)
            if (brute_beta_stable(g)) expected.push_back(g);
        CHECK(find_beta_stable_graphs(n) == expected);
    }
    auto four = find_beta_stable_graphs(4);
    std::vector<std::string> codes;
    for (const auto& g : four) codes.push_back(io::to_graph6(g));
    CHECK(codes == std::vector<std::string>{"C]", "Co", "Cs", "C}"});
}
