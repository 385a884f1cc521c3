#include <doctest.h>

#include "brute.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/error.hpp"
#include "neighborly/reductions.hpp"

using namespace neighborly;

namespace {

CnfFormula two_clauses()
{
    return CnfFormula(3, {{pos(0), pos(1), pos(2)}, {neg(0), pos(1), neg(2)}});
}

// All eight sign patterns over three variables.
CnfFormula full_unsat()
{
    CnfFormula f(3);
    for (int s = 0; s < 8; ++s) f.add_clause({{0, (s & 1) != 0}, {1, (s & 2) != 0}, {2, (s & 4) != 0}});
    return f;
}

std::size_t colors_at(const Coloring& c, Vertex v)
{
    return c.colors.at(v);
}

} // namespace

TEST_CASE("pw_transform clause and variable counts")
{
    auto out = pw_transform(two_clauses());
    CHECK(out.formula.clause_count() == 2 + 6 + 1);
    CHECK(out.formula.variable_count() == 5);
    CHECK(out.selector_vars == std::vector<Var>{3, 4});
    CHECK(out.clause_kind[0].kind == PwClauseKind::Main);
    CHECK(out.clause_kind[2].kind == PwClauseKind::Blocker);
    CHECK(out.clause_kind[8].kind == PwClauseKind::Pair);
    CHECK(out.formula.clause(0) == Clause{pos(0), pos(1), pos(2), pos(4)});
}

TEST_CASE("pw witnesses")
{
    const auto phi = two_clauses();
    auto out = pw_transform(phi);
    for (std::size_t c = 0; c < out.formula.clause_count(); ++c) {
        auto w = pw_witness(phi, c);
        CHECK(evaluate(without_clause(out.formula, c), w));
    }
    // Pair deletion: both selectors on.
    auto pair = pw_witness(phi, 8);
    CHECK(pair[3]);
    CHECK(pair[4]);
}

TEST_CASE("pw output of an unsatisfiable formula is minimally unsatisfiable")
{
    auto out = pw_transform(full_unsat());
    CHECK(out.formula.clause_count() == 8 + 24 + 28);
    CHECK(brute::minimal_unsat(out.formula));
    CHECK_FALSE(sat_solve(out.formula));
}

TEST_CASE("f produces E3CNF with witnesses for every clause")
{
    const auto phi = two_clauses();
    FReduction fr(phi);
    const auto& psi = fr.output();
    CHECK(is_e3cnf(psi));
    CHECK(every_literal_occurs(psi));
    CHECK(sat_solve(psi));
    for (std::size_t c = 0; c < psi.clause_count(); ++c) CHECK(evaluate(without_clause(psi, c), fr.sat_witness(c)));
    CHECK(f_transform(phi) == psi);
    CHECK_THROWS_AS(FReduction(CnfFormula(3, {{pos(0), pos(1), pos(2)}})), Error);
}

TEST_CASE("f preserves satisfiability on the corpus")
{
    corpus::FormulaCorpusConfig cfg;
    cfg.count = 25;
    cfg.seed = 3;
    for (const auto& phi : corpus::formula_corpus(cfg)) {
        FReduction fr(phi);
        CHECK(brute::satisfiable(phi) == sat_solve(fr.output()).has_value());
        for (std::size_t c = 0; c < fr.output().clause_count(); c += 7)
            CHECK(evaluate(without_clause(fr.output(), c), fr.sat_witness(c)));
    }
}

TEST_CASE("gadget graph layout")
{
    CnfFormula psi(3, {{pos(0), neg(1), pos(2)}});
    auto h = cai_meyer_graph(psi);
    CHECK(h.graph.vertex_count() == 17);
    CHECK(h.graph.has_edge(0, 1));
    CHECK(h.graph.role(0) == RoleTag::vc());
    CHECK(h.graph.role(1) == RoleTag::vs());
    CHECK(h.graph.role(h.layout.literal(neg(1))) == RoleTag::literal(1, true));
    CHECK(h.graph.role(h.layout.t(0, 2)) == RoleTag::gadget(Role::T, 0, 2));
    CHECK(h.layout.clause_of(h.layout.a(0, 1)) == std::optional<std::size_t>(0));
    CHECK_FALSE(h.layout.clause_of(h.layout.literal(pos(0))));

    auto without = cai_meyer_graph(psi, false);
    CHECK(without.graph.vertex_count() == 17);
    CHECK_FALSE(without.graph.has_edge(0, 1));
}

TEST_CASE("gadget graph colorings from satisfying assignments")
{
    CnfFormula psi(3, {{pos(0), neg(1), pos(2)}, {neg(0), pos(1), pos(2)}});
    auto h = cai_meyer_graph(psi);
    for (int mask = 0; mask < 8; ++mask) {
        Assignment a(std::vector<bool>{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
        if (!evaluate(psi, a)) {
            CHECK_THROWS_AS(coloring_from_assignment(psi, h, a), Error);
            continue;
        }
        auto c = coloring_from_assignment(psi, h, a);
        CHECK(brute::proper(h.graph, c));
        CHECK(colors_at(c, h.layout.literal(pos(0))) == (a[0] ? kColorT : kColorF));
    }
}

TEST_CASE("gadget graph is 3-colorable iff the formula is satisfiable")
{
    CHECK(chromatic_number(cai_meyer_graph(full_unsat(), false).graph).chi == 4);
    CHECK(chromatic_number(cai_meyer_graph(two_clauses(), false).graph).chi == 3);
}

TEST_CASE("g on a satisfiable formula")
{
    GReduction gr(two_clauses());
    const auto& g = gr.graph();
    CHECK(g == g_transform(two_clauses()));
    CHECK_FALSE(enumerate_triangles(g).empty());
    CHECK(k_colorable(g, 3));
    CHECK_FALSE(g.has_edge(gr.layout().vc(), gr.layout().vs()));
}

TEST_CASE("g edge witnesses")
{
    GReduction gr(two_clauses());
    const auto& g = gr.graph();
    const auto& lay = gr.layout();

    const Vertex x = lay.literal(pos(0)), nx = lay.literal(neg(0));
    auto c1 = gr.opt_edge(x, nx);
    CHECK(colors_at(c1, x) == kColorT);
    CHECK(colors_at(c1, nx) == kColorT);

    const Vertex t0 = lay.t(0, 0), t1 = lay.t(0, 1), t2 = lay.t(0, 2);
    auto c3 = gr.opt_edge(t0, t1);
    CHECK(colors_at(c3, t0) == kColorT);
    CHECK(colors_at(c3, t1) == kColorT);
    CHECK(colors_at(c3, t2) == kColorC);

    CHECK_THROWS_AS(gr.opt_edge(x, lay.t(0, 0)), Error);

    for (const auto& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        auto c = gr.opt_edge(e.u, e.v);
        CHECK(brute::proper(h, c));
        CHECK(brute::colors_used(c) <= 3);
        CHECK_FALSE(bipartition(h));
    }
    CHECK(g_opt(two_clauses(), x, nx) == c1);
}

TEST_CASE("g vertex witnesses")
{
    GReduction gr(two_clauses());
    const auto& g = gr.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Graph h = apply_modification(g, DeleteVertex{v});
        auto c = gr.opt_vertex(v);
        CHECK(brute::proper(h, c));
        CHECK(brute::colors_used(c) <= 3);
    }
    CHECK(brute::proper(apply_modification(g, DeleteVertex{1}), g_opt_vertex(two_clauses(), 1)));
}

TEST_CASE("join lift")
{
    Graph c5 = join_lift(make_cycle(5), 4);
    CHECK(c5.vertex_count() == 6);
    CHECK(brute::chi(c5) == 4);
    CHECK(join_lift(make_clique(3), 4) == make_clique(4));
    CHECK(join_lift(make_clique(3), 6) == make_clique(6));
    CHECK_THROWS_AS(join_lift(make_cycle(5), 3), Error);
}

TEST_CASE("theta gadget size and cover number")
{
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b)
            corpus::for_each_labeled_graph(a, [&](const Graph& g) {
                corpus::for_each_labeled_graph(b, [&](const Graph& h) {
                    Graph f = theta_gadget(g, h);
                    const std::size_t n = std::max(a, b);
                    CHECK(f.vertex_count() == 2 * (n + 1));
                    CHECK(f.edge_count() == g.edge_count() + h.edge_count() + (n + 1) * (n + 1));
                    CHECK(brute::beta(f) == n + 1 + std::min(brute::beta(g), brute::beta(h)));
                });
            });
    CHECK_THROWS_AS(theta_gadget(Graph(), make_clique(2)), Error);
}

TEST_CASE("vertex cover reduction arithmetic")
{
    CnfFormula psi(3, {{pos(0), neg(1), pos(2)}});
    auto vc = vc_reduction(psi);
    CHECK(vc.graph.vertex_count() == 9);
    CHECK(vc.k == 5);
    CHECK(brute::beta(vc.graph) == 5);
    auto t = vc.clause_triangle(0);
    CHECK(vc.clause_of(t) == 0);
    CHECK_THROWS_AS(vc.clause_of(Triangle{0, 1, 2}), Error);
}

TEST_CASE("vertex cover reduction against exhaustive search")
{
    corpus::Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = rng.between(3, 4), m = rng.between(1, 3);
        auto psi = corpus::random_e3cnf(rng, n, m);
        auto vc = vc_reduction(psi);
        CHECK((brute::beta(vc.graph) == vc.k) == brute::satisfiable(psi));
        for (std::size_t c = 0; c < m; ++c) {
            auto alpha = brute::find_model(without_clause(psi, c));
            REQUIRE(alpha);
            const auto t = vc.clause_triangle(c);
            auto cover = vc_triangle_opt(psi, t, *alpha);
            Graph rest = delete_triangle(vc.graph, t);
            CHECK(rest.vertex_count() == vc.graph.vertex_count() - 3);
            CHECK(brute::is_cover(rest, cover));
            CHECK(cover.size() == brute::beta(rest));
        }
    }
}

TEST_CASE("vertex cover witnesses through f")
{
    FReduction fr(two_clauses());
    auto vc = vc_reduction(fr.output());
    for (std::size_t c = 0; c < vc.m; c += 5) {
        const auto t = vc.clause_triangle(c);
        Graph rest = delete_triangle(vc.graph, t);
        auto cover = vc_triangle_opt(fr, t);
        CHECK(is_vertex_cover(rest, cover));
        CHECK(cover.size() == min_vertex_cover(rest).size());
    }
}
