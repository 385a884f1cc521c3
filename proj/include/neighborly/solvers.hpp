#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "neighborly/cnf.hpp"
#include "neighborly/graph.hpp"

namespace neighborly {

/// Colors are 1-based; entry i is the color of vertex i.
struct Coloring {
    std::vector<std::size_t> colors;

    std::size_t color_count() const;
    bool operator==(const Coloring&) const = default;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);
/// Relabels colors in order of first appearance along the vertex order.
Coloring normalize(const Coloring& c);

/// Sorted ascending.
using VertexCover = std::vector<Vertex>;

bool is_vertex_cover(const Graph& g, const VertexCover& cover);

/// Wall-clock limit for a single solve; nullopt means unlimited.
using TimeBudget = std::optional<std::chrono::milliseconds>;

/// Budget applied when a call does not pass one explicitly.
void set_default_time_budget(TimeBudget budget);
TimeBudget default_time_budget();

/// Clause-learning search that branches on the lowest unassigned variable,
/// false first. Unconstrained variables come back false.
std::optional<Assignment> sat_solve(const CnfFormula& f, TimeBudget budget = default_time_budget());

/// DSATUR backtracking on small graphs, a CNF encoding on larger ones.
/// Result is normalized.
std::optional<Coloring> k_colorable(const Graph& g, std::size_t k, TimeBudget budget = default_time_budget());

struct ChromaticResult {
    std::size_t chi = 0;
    Coloring coloring;
};

/// Throws EmptyGraph on the null graph.
ChromaticResult chromatic_number(const Graph& g, TimeBudget budget = default_time_budget());

/// Branch and bound with degree-0/1 kernelization and a clique-partition
/// bound on small graphs; on larger ones, SAT over the slack left by a
/// greedy clique partition.
VertexCover min_vertex_cover(const Graph& g, TimeBudget budget = default_time_budget());

} // namespace neighborly
