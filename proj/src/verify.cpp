#include "neighborly/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "neighborly/cnf.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/criticality.hpp"
#include "neighborly/graph_io.hpp"
#include "neighborly/oracle.hpp"
#include "neighborly/reductions.hpp"
#include "neighborly/solvers.hpp"

namespace neighborly::verify {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string one_line(const CnfFormula& phi)
{
    return to_string(phi);
}

bool brute_satisfiable(const CnfFormula& phi)
{
    const std::size_t n = phi.variable_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Assignment a(n);
        for (Var v = 0; v < n; ++v) a.set(v, (mask >> v) & 1);
        if (evaluate(phi, a)) return true;
    }
    return false;
}

std::size_t chi(const Graph& g)
{
    return g.vertex_count() == 0 ? 0 : chromatic_number(g).chi;
}

std::size_t beta(const Graph& g)
{
    return min_vertex_cover(g).size();
}

std::vector<CnfFormula> formula_corpus(const Config& cfg)
{
    corpus::FormulaCorpusConfig fc;
    fc.seed = cfg.seed;
    fc.count = std::max(cfg.formulas, cfg.witness_formulas);
    fc.max_vars = std::max<std::size_t>(cfg.max_vars, 3);
    fc.max_clauses = std::max<std::size_t>(cfg.max_clauses, 2);
    return corpus::formula_corpus(fc);
}

// Runs body, turning an exception into a recorded failure.
void guarded(PropertyResult& p, const std::string& label, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        ++p.checked;
        p.fail(label + ": threw " + e.what());
    }
}

// Proper coloring of g with at most k colors, skipping vertex `skip` and edge
// `skip_edge`; colors of g - skip are indexed with ids above skip shifted down.
bool proper_except(const Graph& g, const std::vector<Edge>& edges, const Coloring& c, std::size_t k,
                   std::optional<Edge> skip_edge, std::optional<Vertex> skip)
{
    const std::size_t expected = g.vertex_count() - (skip ? 1 : 0);
    if (c.colors.size() != expected) return false;
    for (auto col : c.colors)
        if (col < 1 || col > k) return false;
    auto idx = [&](Vertex v) { return skip && v > *skip ? v - 1 : v; };
    for (const auto& e : edges) {
        if (skip_edge && e == *skip_edge) continue;
        if (skip && (e.u == *skip || e.v == *skip)) continue;
        if (c.colors[idx(e.u)] == c.colors[idx(e.v)]) return false;
    }
    return true;
}

bool proper_with_count(const Graph& g, const Coloring& c, std::size_t colors)
{
    return is_proper_coloring(g, c) && c.color_count() == colors;
}

bool optimal_cover(const Graph& g, const VertexCover& c, std::size_t b)
{
    return is_vertex_cover(g, c) && c.size() == b;
}

// Two vertex-disjoint triangles certify that deleting one edge or vertex
// leaves an odd cycle.
std::optional<std::pair<Triangle, Triangle>> disjoint_triangles(const Graph& g)
{
    auto ts = enumerate_triangles(g);
    if (ts.empty()) return std::nullopt;
    const auto& t1 = ts.front();
    for (const auto& t : ts) {
        if (t.a == t1.a || t.a == t1.b || t.a == t1.c || t.b == t1.a || t.b == t1.b || t.b == t1.c ||
            t.c == t1.a || t.c == t1.b || t.c == t1.c)
            continue;
        return std::make_pair(t1, t);
    }
    return std::nullopt;
}

bool touches(const Triangle& t, Vertex v)
{
    return t.a == v || t.b == v || t.c == v;
}

bool non_bipartite_without_edge(const Graph& g, const std::optional<std::pair<Triangle, Triangle>>& tri, Edge e)
{
    if (!tri) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        return !bipartition(h);
    }
    const auto& t = touches(tri->first, e.u) && touches(tri->first, e.v) ? tri->second : tri->first;
    return !(touches(t, e.u) && touches(t, e.v));
}

bool non_bipartite_without_vertex(const Graph& g, const std::optional<std::pair<Triangle, Triangle>>& tri, Vertex v)
{
    if (!tri) return !bipartition(apply_modification(g, DeleteVertex{v}));
    return !touches(tri->first, v) || !touches(tri->second, v);
}

std::string graph_label(const Graph& g)
{
    return "graph " + io::to_graph6(g);
}

// ---------------------------------------------------------------- suites

SuiteResult sat_witness_suite(const Config& cfg)
{
    auto formulas = formula_corpus(cfg);
    formulas.resize(cfg.formulas);
    PropertyResult e3{"f-output-is-e3cnf"}, eq{"sat-equivalence"}, wit{"clause-witnesses"};
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& phi = formulas[i];
        const std::string label = "formula #" + std::to_string(i) + " " + one_line(phi);
        guarded(eq, label, [&] {
            FReduction fr(phi);
            const auto& psi = fr.output();
            ++e3.checked;
            if (!is_e3cnf(psi)) e3.fail(label);
            ++eq.checked;
            if (brute_satisfiable(phi) != sat_solve(psi).has_value()) eq.fail(label);
            for (std::size_t c = 0; c < psi.clause_count(); ++c) {
                ++wit.checked;
                if (!evaluate(without_clause(psi, c), fr.sat_witness(c)))
                    wit.fail(label + " output clause " + std::to_string(c));
            }
        });
    }
    return {"sat-witness", {e3, eq, wit}};
}

SuiteResult coloring_witness_suite(const Config& cfg)
{
    auto formulas = formula_corpus(cfg);
    formulas.resize(cfg.witness_formulas);
    PropertyResult eq{"three-colorable-iff-sat"}, edges{"edge-witnesses"}, vertices{"vertex-witnesses"};
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& phi = formulas[i];
        const std::string label = "formula #" + std::to_string(i) + " " + one_line(phi);
        guarded(eq, label, [&] {
            GReduction gr(phi);
            const auto& g = gr.graph();
            ++eq.checked;
            auto col = k_colorable(g, 3);
            if (brute_satisfiable(phi) != col.has_value() || (col && !is_proper_coloring(g, *col))) eq.fail(label);
            const auto tri = disjoint_triangles(g);
            const auto all_edges = g.edges();
            for (const auto& e : all_edges) {
                ++edges.checked;
                const std::string where = label + " edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
                try {
                    auto c = gr.opt_edge(e.u, e.v);
                    if (!proper_except(g, all_edges, c, 3, e, std::nullopt) || !non_bipartite_without_edge(g, tri, e)) edges.fail(where);
                } catch (const std::exception& ex) {
                    edges.fail(where + ": threw " + ex.what());
                }
            }
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                ++vertices.checked;
                const std::string where = label + " vertex " + std::to_string(v);
                try {
                    auto c = gr.opt_vertex(v);
                    if (!proper_except(g, all_edges, c, 3, std::nullopt, v) || !non_bipartite_without_vertex(g, tri, v))
                        vertices.fail(where);
                } catch (const std::exception& ex) {
                    vertices.fail(where + ": threw " + ex.what());
                }
            }
        });
    }
    return {"coloring-witness", {eq, edges, vertices}};
}

SuiteResult vc_witness_suite(const Config& cfg)
{
    auto formulas = formula_corpus(cfg);
    formulas.resize(cfg.witness_formulas);
    PropertyResult eq{"cover-size-iff-sat"}, tri{"triangle-witnesses"};
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& phi = formulas[i];
        const std::string label = "formula #" + std::to_string(i) + " " + one_line(phi);
        guarded(eq, label, [&] {
            FReduction fr(phi);
            const auto& psi = fr.output();
            auto vc = vc_reduction(psi);
            ++eq.checked;
            const std::size_t target = psi.variable_count() + 2 * psi.clause_count();
            const bool small = min_vertex_cover(vc.graph).size() == target;
            if (vc.k != target || small != sat_solve(psi).has_value()) eq.fail(label);
            for (std::size_t c = 0; c < psi.clause_count(); ++c) {
                ++tri.checked;
                const auto t = vc.clause_triangle(c);
                auto cover = vc_triangle_opt(fr, t);
                auto rest = delete_triangle(vc.graph, t);
                if (!optimal_cover(rest, cover, min_vertex_cover(rest).size()))
                    tri.fail(label + " clause triangle " + std::to_string(c));
            }
        });
    }
    return {"vc-witness", {eq, tri}};
}

SuiteResult oracle_suite(const Config& cfg)
{
    PropertyResult col{"colorer"}, sub{"subcol"}, vdel{"vc-from-vertex-deletion"}, eadd{"vc-from-edge-addition"},
        iso{"added-isolated-vertex"}, chain{"one-query-chain"};
    std::size_t max_col = 0, max_vdel = 0, max_eadd = 0, max_iso = 0;
    const auto graphs = small_graph_corpus(cfg.max_vertices);
    for (const auto& g : graphs) {
        const std::string label = graph_label(g);
        const std::size_t x = chi(g);
        const std::size_t b = beta(g);
        const bool universal = is_universal_edged(g);

        guarded(col, label, [&] {
            NeighborOracle o(Problem::Coloring, ModificationKind::AddEdge, cfg.query_budget);
            auto c = colorer(g, o);
            ++col.checked;
            max_col = std::max(max_col, o.query_count());
            if (!proper_with_count(g, c, x) || o.query_count() > 2 || (universal && o.query_count() != 0)) col.fail(label);
        });

        if (universal) {
            guarded(sub, label, [&] {
                for (std::size_t k = 1; k <= 8; ++k) {
                    ++sub.checked;
                    auto s = subcol(g, k);
                    auto ref = k_colorable(g, k);
                    bool ok = s.has_value() == ref.has_value();
                    if (s) ok = ok && is_proper_coloring(g, *s) && std::all_of(s->colors.begin(), s->colors.end(), [k](std::size_t c) { return c <= k; });
                    if (!ok) sub.fail(label + " k=" + std::to_string(k));
                }
            });
        }

        guarded(vdel, label, [&] {
            NeighborOracle o(Problem::VertexCover, ModificationKind::DeleteVertex, cfg.query_budget);
            auto c = vc_from_vertex_deletion(g, o);
            ++vdel.checked;
            max_vdel = std::max(max_vdel, o.query_count());
            if (!optimal_cover(g, c, b) || o.query_count() > 2) vdel.fail(label);
        });

        guarded(eadd, label, [&] {
            NeighborOracle o(Problem::VertexCover, ModificationKind::AddEdge, cfg.query_budget);
            auto c = vc_from_edge_addition(g, o);
            ++eadd.checked;
            max_eadd = std::max(max_eadd, o.query_count());
            if (!optimal_cover(g, c, b) || o.query_count() > 2) eadd.fail(label);
        });

        guarded(iso, label, [&] {
            NeighborOracle oc(Problem::Coloring, ModificationKind::AddVertex, 1);
            auto c = std::get<Coloring>(solve_by_added_isolated_vertex(g, Problem::Coloring, oc));
            NeighborOracle ov(Problem::VertexCover, ModificationKind::AddVertex, 1);
            auto v = std::get<VertexCover>(solve_by_added_isolated_vertex(g, Problem::VertexCover, ov));
            iso.checked += 2;
            max_iso = std::max({max_iso, oc.query_count(), ov.query_count()});
            if (!proper_with_count(g, c, x) || oc.query_count() != 1) iso.fail(label + " coloring");
            if (!optimal_cover(g, v, b) || ov.query_count() != 1) iso.fail(label + " vertex cover");
        });

        if (g.vertex_count() <= cfg.chain_max_vertices) {
            guarded(chain, label, [&] {
                chain.checked += 3;
                auto c = coloring_add_edge_chain(g);
                if (!proper_with_count(g, std::get<Coloring>(c.solution), x)) chain.fail(label + " coloring/add-edge");
                auto d = cover_delete_vertex_chain(g);
                if (!optimal_cover(g, std::get<VertexCover>(d.solution), b)) chain.fail(label + " cover/delete-vertex");
                auto a = cover_add_edge_chain(g);
                if (!optimal_cover(g, std::get<VertexCover>(a.solution), b)) chain.fail(label + " cover/add-edge");
            });
        }
    }
    col.detail = "max queries " + std::to_string(max_col);
    vdel.detail = "max queries " + std::to_string(max_vdel);
    eadd.detail = "max queries " + std::to_string(max_eadd);
    iso.detail = "max queries " + std::to_string(max_iso);
    return {"oracle-budgets", {col, sub, vdel, eadd, iso, chain}};
}

bool all_four_recognizers(const Graph& h, bool expected, std::string& which)
{
    const bool r[4] = {is_minimally_k_uncolorable(h, 3, Mode::Edge).verdict,
                       is_minimally_k_uncolorable(h, 3, Mode::Vertex).verdict, is_chi_critical(h, Mode::Edge).verdict,
                       is_chi_critical(h, Mode::Vertex).verdict};
    const char* names[4] = {"edge-minimal-3-uncolorable", "vertex-minimal-3-uncolorable", "chi-critical",
                            "chi-vertex-critical"};
    for (int i = 0; i < 4; ++i)
        if (r[i] != expected) {
            which = names[i];
            return false;
        }
    return true;
}

SuiteResult criticality_suite(const Config& cfg)
{
    PropertyResult pipe{"minimality-pipeline"}, agree{"recognizers-agree"}, join{"join-lift"}, theta{"theta-gadget"},
        contain{"edge-minimal-within-vertex-minimal"}, drop{"drop-by-at-most-one"};

    const auto unsat = corpus::minimal_unsat_corpus(cfg.seed, cfg.minimal_unsat);
    for (std::size_t i = 0; i < unsat.size(); ++i) {
        const auto& phi = unsat[i];
        const std::string label = "formula #" + std::to_string(i) + " " + one_line(phi);
        guarded(pipe, label, [&] {
            ++pipe.checked;
            if (!is_minimal_unsat(phi).verdict) pipe.fail(label + ": corpus formula is not minimal-unsat");
            else if (!is_minimal_unsat(pw_transform(phi).formula).verdict) pipe.fail(label + ": pw output");
            std::string which;
            if (!all_four_recognizers(cai_meyer_graph(phi, false).graph, true, which)) pipe.fail(label + ": " + which);
        });
    }

    // Minimal, non-minimal and satisfiable inputs must all get the same
    // verdict from the formula and the four graph recognizers.
    std::vector<CnfFormula> mixed(unsat.begin(), unsat.end());
    corpus::Rng rng(cfg.seed + 1);
    for (const auto& phi : unsat) {
        // An extra clause over fresh variables keeps the formula unsat but
        // makes that clause redundant.
        CnfFormula bigger = phi;
        const Var a = bigger.add_variable(), b = bigger.add_variable(), c = bigger.add_variable();
        bigger.add_clause(make_clause({pos(a), neg(b), pos(c)}));
        mixed.push_back(bigger);
    }
    for (std::size_t i = 0; i < 5; ++i) mixed.push_back(corpus::random_e3cnf(rng, 3 + i % 2, 2 + i % 2));
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        const auto& phi = mixed[i];
        const std::string label = "formula " + one_line(phi);
        guarded(agree, label, [&] {
            ++agree.checked;
            std::string which;
            if (!all_four_recognizers(cai_meyer_graph(phi, false).graph, is_minimal_unsat(phi).verdict, which))
                agree.fail(label + ": " + which);
        });
    }

    for (const auto& g : small_graph_corpus(cfg.join_max_vertices)) {
        const std::string label = graph_label(g);
        guarded(join, label, [&] {
            ++join.checked;
            const bool base = is_minimally_k_uncolorable(g, 3, Mode::Edge).verdict;
            const bool lifted = is_minimally_k_uncolorable(join_lift(g, 4), 4, Mode::Edge).verdict;
            if (base != lifted) join.fail(label + ": edge-minimality differs after lifting");
            const std::size_t x = chi(g);
            for (std::size_t k : {4u, 5u})
                if (chi(join_lift(g, k)) != x + k - 3) join.fail(label + ": chi after lifting to k=" + std::to_string(k));
        });
    }

    corpus::Rng trng(cfg.seed + 2);
    for (std::size_t i = 0; i < cfg.theta_pairs; ++i) {
        Graph g = corpus::random_graph(trng, trng.between(1, cfg.theta_max_vertices));
        Graph h = corpus::random_graph(trng, trng.between(1, cfg.theta_max_vertices));
        const std::string label = "pair " + io::to_graph6(g) + " " + io::to_graph6(h);
        guarded(theta, label, [&] {
            ++theta.checked;
            Graph f = theta_gadget(g, h);
            const std::size_t n = std::max(g.vertex_count(), h.vertex_count());
            const std::size_t bg = beta(g), bh = beta(h);
            if (beta(f) != n + 1 + std::min(bg, bh)) theta.fail(label + ": beta formula");
            if (is_beta_critical(f, Mode::Vertex).verdict != (bg == bh)) theta.fail(label + ": vertex criticality");
        });
    }

    const auto graphs = small_graph_corpus(cfg.max_vertices);
    for (const auto& g : graphs) {
        const std::string label = graph_label(g);
        guarded(contain, label, [&] {
            ++contain.checked;
            if (is_minimally_k_uncolorable(g, 3, Mode::Edge).verdict && !is_minimally_k_uncolorable(g, 3, Mode::Vertex).verdict)
                contain.fail(label);
        });
    }

    for (std::size_t n = 0; n <= cfg.max_vertices; ++n) {
        for (const auto& g : corpus::nonisomorphic_graphs(n)) {
            const std::string label = graph_label(g);
            guarded(drop, label, [&] {
                const std::size_t x = chi(g), b = beta(g);
                for (const auto& e : g.edges()) {
                    ++drop.checked;
                    Graph h = g;
                    h.remove_edge(e.u, e.v);
                    const std::size_t xh = chi(h), bh = beta(h);
                    if (xh > x || xh + 1 < x || bh > b || bh + 1 < b)
                        drop.fail(label + " edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
                }
            });
        }
    }

    return {"criticality-crosschecks", {pipe, agree, join, theta, contain, drop}};
}

} // namespace

void PropertyResult::fail(std::string what)
{
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

bool SuiteResult::passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* SuiteResult::find(const std::string& name) const
{
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

std::string to_string(Suite s)
{
    switch (s) {
    case Suite::SatWitness: return "sat-witness";
    case Suite::ColoringWitness: return "coloring-witness";
    case Suite::VcWitness: return "vc-witness";
    case Suite::OracleBudgets: return "oracle-budgets";
    case Suite::CriticalityCrosschecks: return "criticality-crosschecks";
    case Suite::All: return "all";
    }
    return "unknown";
}

Suite parse_suite(const std::string& name)
{
    for (Suite s : {Suite::SatWitness, Suite::ColoringWitness, Suite::VcWitness, Suite::OracleBudgets,
                    Suite::CriticalityCrosschecks, Suite::All})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run(Suite suite, const Config& cfg)
{
    std::vector<SuiteResult> out;
    auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
    if (want(Suite::SatWitness)) out.push_back(sat_witness_suite(cfg));
    if (want(Suite::ColoringWitness)) out.push_back(coloring_witness_suite(cfg));
    if (want(Suite::VcWitness)) out.push_back(vc_witness_suite(cfg));
    if (want(Suite::OracleBudgets)) out.push_back(oracle_suite(cfg));
    if (want(Suite::CriticalityCrosschecks)) out.push_back(criticality_suite(cfg));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string render(const std::vector<SuiteResult>& results, const Config& cfg)
{
    std::ostringstream os;
    os << "neighborly verify (seed " << cfg.seed << ")\n";
    std::size_t total = 0, passed = 0;
    for (const auto& s : results) {
        os << "[" << s.suite << "]\n";
        for (const auto& p : s.properties) {
            ++total;
            if (p.passed()) ++passed;
            os << "  " << (p.passed() ? "PASS" : "FAIL") << " " << p.name << ": " << p.checked << " checked, "
               << p.failures << " failures";
            if (!p.detail.empty()) os << ", " << p.detail;
            os << "\n";
            for (const auto& c : p.counterexamples) os << "    counterexample: " << c << "\n";
        }
    }
    os << "summary: " << (passed == total ? "PASS" : "FAIL") << " " << passed << "/" << total << " properties\n";
    return os.str();
}

std::vector<Graph> small_graph_corpus(std::size_t max_vertices)
{
    if (max_vertices > 8) throw std::invalid_argument("graph corpus is limited to 8 vertices");
    std::vector<Graph> out;
    for (std::size_t n = 0; n <= max_vertices; ++n) {
        if (n <= 6) corpus::for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
        else {
            auto classes = corpus::nonisomorphic_graphs(n);
            out.insert(out.end(), classes.begin(), classes.end());
        }
    }
    return out;
}

} // namespace neighborly::verify
