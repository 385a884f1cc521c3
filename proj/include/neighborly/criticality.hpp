#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "neighborly/cnf.hpp"
#include "neighborly/graph.hpp"

namespace neighborly {

enum class Mode { Edge, Vertex };

std::string to_string(Mode mode);

struct NeighborValue {
    Modification deletion;
    std::size_t value = 0;
};

/// Outcome of an exhaustive neighbor check. `certificate` is the first
/// neighbor that breaks the notion; it is empty when the verdict is true or
/// when the base graph already fails. In edge mode it can also be the deletion
/// of an isolated vertex. `degenerate` marks graphs excluded by
/// the nontriviality rule (no edge in edge mode, too few vertices in vertex
/// mode).
struct CriticalityReport {
    std::string notion;
    Mode mode = Mode::Edge;
    std::size_t base = 0;
    std::vector<NeighborValue> neighbors;
    bool verdict = false;
    std::optional<Modification> certificate;
    bool degenerate = false;

    std::string to_json() const;
};

/// chi(g) > k and every one-edge- (or one-vertex-) deleted neighbor has
/// chi <= k. Values are chromatic numbers; the null graph counts as 0.
/// Neighbors are only evaluated when chi(g) > k. In edge mode a graph with an
/// isolated vertex is rejected with that vertex's deletion as certificate.
CriticalityReport is_minimally_k_uncolorable(const Graph& g, std::size_t k, Mode mode);

/// Every neighbor has a smaller chromatic number. Edgeless graphs are not
/// edge-critical and the null graph is not vertex-critical; isolated vertices
/// are rejected in edge mode as above.
CriticalityReport is_chi_critical(const Graph& g, Mode mode);

/// Every neighbor has a smaller vertex cover number. Edgeless graphs are not
/// edge-critical; graphs with fewer than two vertices are not vertex-critical.
CriticalityReport is_beta_critical(const Graph& g, Mode mode);

struct MinimalUnsatReport {
    bool unsat = false;
    /// satisfiable[i]: formula minus clause i is satisfiable.
    std::vector<bool> satisfiable;
    bool verdict = false;
    std::optional<std::size_t> certificate;

    std::string to_json() const;
};

MinimalUnsatReport is_minimal_unsat(const CnfFormula& phi);

/// At least one edge, and deleting any single edge keeps beta.
bool is_beta_stable(const Graph& g);

/// The beta-stable members of `graphs`, in input order.
std::vector<Graph> find_beta_stable_graphs(const std::vector<Graph>& graphs);
/// Same over one representative per isomorphism class on n <= 8 vertices.
std::vector<Graph> find_beta_stable_graphs(std::size_t n);

} // namespace neighborly
