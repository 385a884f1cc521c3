#pragma once

// Exhaustive reference answers, written without sharing code with the
// library solvers.

#include <cstdint>
#include <optional>
#include <vector>

#include "neighborly/cnf.hpp"
#include "neighborly/graph.hpp"
#include "neighborly/solvers.hpp"

namespace brute {

using namespace neighborly;

inline bool satisfiable(const CnfFormula& phi)
{
    const std::size_t n = phi.variable_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool all = true;
        for (const auto& c : phi.clauses()) {
            bool any = false;
            for (const auto& l : c)
                if ((((mask >> l.var) & 1) != 0) != l.negated) any = true;
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

inline std::optional<Assignment> find_model(const CnfFormula& phi)
{
    const std::size_t n = phi.variable_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Assignment a(n);
        for (Var v = 0; v < n; ++v) a.set(v, (mask >> v) & 1);
        if (evaluate(phi, a)) return a;
    }
    return std::nullopt;
}

inline bool minimal_unsat(const CnfFormula& phi)
{
    if (satisfiable(phi)) return false;
    for (std::size_t i = 0; i < phi.clause_count(); ++i)
        if (!satisfiable(without_clause(phi, i))) return false;
    return true;
}

inline bool colorable(const Graph& g, std::size_t k, std::vector<std::size_t>& color, Vertex v)
{
    if (v == g.vertex_count()) return true;
    for (std::size_t c = 1; c <= k; ++c) {
        bool ok = true;
        for (Vertex u = 0; u < v; ++u)
            if (g.has_edge(u, v) && color[u] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, color, v + 1)) return true;
    }
    return false;
}

inline bool colorable(const Graph& g, std::size_t k)
{
    std::vector<std::size_t> color(g.vertex_count(), 0);
    return colorable(g, k, color, 0);
}

inline std::size_t chi(const Graph& g)
{
    std::size_t k = 0;
    while (!colorable(g, k)) ++k;
    return k;
}

inline bool covers(const Graph& g, std::uint64_t mask)
{
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) && !((mask >> u) & 1) && !((mask >> v) & 1)) return false;
    return true;
}

inline std::size_t beta(const Graph& g)
{
    std::size_t best = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask)
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) < best && covers(g, mask))
            best = __builtin_popcountll(mask);
    return best;
}

inline bool proper(const Graph& g, const Coloring& c)
{
    if (c.colors.size() != g.vertex_count()) return false;
    for (auto x : c.colors)
        if (x == 0) return false;
    for (const auto& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v]) return false;
    return true;
}

inline std::size_t colors_used(const Coloring& c)
{
    std::vector<bool> seen;
    std::size_t count = 0;
    for (auto x : c.colors) {
        if (x >= seen.size()) seen.resize(x + 1, false);
        if (!seen[x]) ++count;
        seen[x] = true;
    }
    return count;
}

inline bool is_cover(const Graph& g, const VertexCover& cover)
{
    std::uint64_t mask = 0;
    for (auto v : cover) {
        if (v >= g.vertex_count()) return false;
        mask |= std::uint64_t{1} << v;
    }
    return covers(g, mask);
}

inline Graph petersen()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace brute
