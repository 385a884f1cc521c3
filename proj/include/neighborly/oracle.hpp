#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "neighborly/graph.hpp"
#include "neighborly/solvers.hpp"

namespace neighborly {

enum class Problem { Coloring, VertexCover };

std::string to_string(Problem p);

using Solution = std::variant<Coloring, VertexCover>;

/// Colors used by a coloring, or size of a cover.
std::size_t solution_size(const Solution& s);

struct QueryRecord {
    Modification modification;
    std::string digest; // FNV-1a of the queried instance's graph6, hex
    Solution answer;
    std::size_t answer_size = 0;
};

struct OracleTranscript {
    std::vector<QueryRecord> records;

    std::size_t size() const noexcept { return records.size(); }
    /// One JSON object per line, in query order.
    std::string to_json_lines() const;
};

/// Answers optimization queries on instances one allowed modification away
/// from a given instance. Answers come from the exact solvers and are
/// normalized, so transcripts are reproducible.
class NeighborOracle {
public:
    NeighborOracle(Problem problem, ModificationKind allowed, std::optional<std::size_t> query_budget = std::nullopt,
                   TimeBudget solver_budget = default_time_budget());

    Problem problem() const noexcept { return problem_; }
    ModificationKind allowed() const noexcept { return allowed_; }
    std::optional<std::size_t> query_budget() const noexcept { return query_budget_; }

    /// Optimal solution of apply_modification(instance, m). Throws
    /// InvalidModification for a kind other than allowed() and
    /// OracleBudgetExceeded once the budget is used up.
    Solution query(const Graph& instance, const Modification& m);
    Coloring query_coloring(const Graph& instance, const Modification& m);
    VertexCover query_cover(const Graph& instance, const Modification& m);

    const OracleTranscript& transcript() const noexcept { return transcript_; }
    std::size_t query_count() const noexcept { return transcript_.size(); }

private:
    Problem problem_;
    ModificationKind allowed_;
    std::optional<std::size_t> query_budget_;
    TimeBudget solver_budget_;
    OracleTranscript transcript_;
};

/// Digest used in transcripts.
std::string instance_digest(const Graph& g);

/// Optimal coloring from at most two one-edge-added queries; universal-edged
/// graphs are colored by subcol without queries.
Coloring colorer(const Graph& g, NeighborOracle& oracle);

/// k-coloring of a universal-edged graph or nullopt. Throws NotUniversalEdged.
std::optional<Coloring> subcol(const Graph& g, std::size_t k);

struct SubcolPartition {
    Vertex l = 0;
    Vertex r = 0;
    std::vector<Vertex> left;   // N(l) \ N[r]
    std::vector<Vertex> middle; // N(l) & N(r)
    std::vector<Vertex> right;  // N(r) \ N[l]
};

/// Partition around the edge {l, r}; throws NotAnEdge.
SubcolPartition subcol_partition(const Graph& g, Vertex l, Vertex r);

VertexCover vc_from_vertex_deletion(const Graph& g, NeighborOracle& oracle);
VertexCover vc_from_edge_addition(const Graph& g, NeighborOracle& oracle);

/// One AddVertex query with an isolated vertex; the answer is restricted to g.
Solution solve_by_added_isolated_vertex(const Graph& g, Problem problem, NeighborOracle& oracle);

// ---------------------------------------------------------------- chains

struct ChainStepper {
    /// Modification leading away from `instance`, nullopt if there is none.
    std::function<std::optional<Modification>(const Graph& instance)> choose;
    /// Optimal solution of `instance` from an optimal solution of the
    /// modified instance.
    std::function<Solution(const Graph& instance, const Modification& m, const Solution& answer)> lift;
};

/// Optimal solution if `instance` is in the trivially solvable set.
using TrivialSolver = std::function<std::optional<Solution>(const Graph& instance)>;

struct ChainResult {
    Solution solution;
    std::vector<Modification> steps;
};

/// Walks modifications until the trivial solver succeeds, then unwinds. Each
/// step is checked against `kind`; throws NoProgress if the stepper gets
/// stuck or the chain exceeds |V|^2 + |V| steps.
ChainResult one_query_chain(const Graph& g, Problem problem, ModificationKind kind, const ChainStepper& stepper,
                            const TrivialSolver& trivial);

/// Coloring under AddEdge: adds an edge between two vertices that an optimal
/// coloring separates; ends at a complete multipartite graph.
ChainResult coloring_add_edge_chain(const Graph& g);
/// Vertex cover under DeleteVertex: deletes a vertex of an optimal cover;
/// ends at an edgeless or null graph.
ChainResult cover_delete_vertex_chain(const Graph& g);
/// Vertex cover under AddEdge: adds an edge at a non-universal vertex of an
/// optimal cover; ends once every edge has a universal endpoint.
ChainResult cover_add_edge_chain(const Graph& g);

} // namespace neighborly
