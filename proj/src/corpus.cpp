#include "neighborly/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "neighborly/graph_io.hpp"
#include "neighborly/solvers.hpp"

namespace neighborly::corpus {

CnfFormula random_e3cnf(Rng& rng, std::size_t n, std::size_t m)
{
    if (n < 3) throw std::invalid_argument("random_e3cnf needs at least 3 variables");
    CnfFormula f(n);
    std::set<std::vector<Literal>> seen;
    std::size_t attempts = 0;
    while (f.clause_count() < m) {
        if (++attempts > 100000) throw std::runtime_error("random_e3cnf could not find enough distinct clauses");
        std::vector<Var> vars;
        while (vars.size() < 3) {
            Var v = rng.between(0, n - 1);
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
        Clause c;
        for (Var v : vars) c.push_back({v, rng.coin()});
        auto key = c;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        f.add_clause(c);
    }
    return f;
}

std::vector<CnfFormula> formula_corpus(const FormulaCorpusConfig& cfg)
{
    Rng rng(cfg.seed);
    std::vector<CnfFormula> out;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        std::size_t n = rng.between(cfg.min_vars, cfg.max_vars);
        std::size_t m = rng.between(cfg.min_clauses, cfg.max_clauses);
        out.push_back(random_e3cnf(rng, n, m));
    }
    return out;
}

CnfFormula minimal_unsat_core(const CnfFormula& f)
{
    CnfFormula core = f;
    std::size_t i = 0;
    while (i < core.clause_count()) {
        auto smaller = without_clause(core, i);
        if (!sat_solve(smaller)) core = std::move(smaller);
        else ++i;
    }
    return core;
}

std::vector<CnfFormula> minimal_unsat_corpus(std::uint64_t seed, std::size_t count)
{
    Rng rng(seed);
    std::vector<CnfFormula> out;
    while (out.size() < count) {
        std::size_t n = rng.between(3, 4);
        std::size_t max_clauses = n == 3 ? 8 : 32;
        CnfFormula f(n);
        std::set<std::vector<Literal>> seen;
        while (sat_solve(f) && f.clause_count() < max_clauses) {
            auto one = random_e3cnf(rng, n, 1).clause(0);
            auto key = one;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) f.add_clause(one);
        }
        if (sat_solve(f)) continue;
        out.push_back(minimal_unsat_core(f));
    }
    return out;
}

Graph random_graph(Rng& rng, std::size_t n)
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn)
{
    std::vector<Edge> pairs;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[b].u, pairs[b].v);
        fn(g);
    }
}

namespace {

// Bits in graph6 order, most significant first.
std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order)
{
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
    return code;
}

void search_orders(const Graph& g, std::vector<std::vector<Vertex>>& groups, std::size_t gi, std::vector<Vertex>& order,
                   std::uint64_t& best, std::vector<Vertex>& best_order)
{
    if (gi == groups.size()) {
        auto code = code_of(g, order);
        if (best_order.empty() || code < best) {
            best = code;
            best_order = order;
        }
        return;
    }
    auto& grp = groups[gi];
    std::sort(grp.begin(), grp.end());
    do {
        order.insert(order.end(), grp.begin(), grp.end());
        search_orders(g, groups, gi + 1, order, best, best_order);
        order.resize(order.size() - grp.size());
    } while (std::next_permutation(grp.begin(), grp.end()));
}

} // namespace

Graph canonical_form(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical_form is meant for graphs with at most 10 vertices");
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || g.degree(by_degree[i]) != g.degree(by_degree[i - 1])) groups.emplace_back();
        groups.back().push_back(by_degree[i]);
    }
    std::vector<Vertex> order, best_order;
    std::uint64_t best = 0;
    search_orders(g, groups, 0, order, best, best_order);
    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i) position[best_order[i]] = i;
    Graph out(n);
    for (const auto& e : g.edges()) out.add_edge(position[e.u], position[e.v]);
    return out;
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n)
{
    std::set<std::string> classes;
    if (n == 0) return {Graph(0)};
    std::vector<Graph> previous = nonisomorphic_graphs(n - 1);
    for (const auto& base : previous) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            Graph g = base;
            Vertex v = g.add_vertex();
            for (Vertex u = 0; u < n - 1; ++u)
                if ((mask >> u) & 1) g.add_edge(u, v);
            classes.insert(io::to_graph6(canonical_form(g)));
        }
    }
    std::vector<Graph> out;
    for (const auto& s : classes) out.push_back(io::from_graph6(s));
    return out;
}

} // namespace neighborly::corpus
