#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "neighborly/cnf.hpp"
#include "neighborly/cnf_stages.hpp"
#include "neighborly/graph.hpp"
#include "neighborly/solvers.hpp"

namespace neighborly {

// ---------------------------------------------------------------- selector transform

enum class PwClauseKind { Main, Blocker, Pair };

/// Main(i): C_i v pi_i; Blocker(i, j): ~l_{i,j} v pi_i v ~y_i; Pair(i, j): ~y_i v ~y_j.
/// Indices are 0-based.
struct PwClause {
    PwClauseKind kind;
    std::size_t i;
    std::size_t j;
};

/// Input variables keep their ids, y_i is variable n + i. Clause order:
/// all Main, then Blocker (i-major), then Pair (lexicographic).
class PwStage : public WitnessedStage {
public:
    explicit PwStage(const CnfFormula& phi);

    const std::vector<Var>& selector_vars() const noexcept { return selectors_; }
    const std::vector<PwClause>& clause_kinds() const noexcept { return kinds_; }

    /// Satisfying assignment for output - deleted; variables left open are false.
    Assignment witness(std::size_t deleted) const;
    Assignment witness(std::size_t deleted, const UpstreamWitness&) const override { return witness(deleted); }

private:
    std::vector<Var> selectors_;
    std::vector<PwClause> kinds_;
};

struct PwOutput {
    CnfFormula formula;
    std::vector<Var> selector_vars;
    std::vector<PwClause> clause_kind;
};

PwOutput pw_transform(const CnfFormula& phi);
Assignment pw_witness(const CnfFormula& phi, std::size_t deleted);

// ---------------------------------------------------------------- f

/// pad o limit o split o pw o remove_tautologies, with composed witnesses.
class FReduction {
public:
    /// Requires E3CNF with at least two clauses.
    explicit FReduction(const CnfFormula& phi);

    const CnfFormula& input() const noexcept { return phi_; }
    const CnfFormula& output() const noexcept { return pad_->output(); }
    const PwStage& pw() const noexcept { return *pw_; }

    /// Satisfies output() minus clause c.
    Assignment sat_witness(std::size_t c) const;
    /// Output clause -> clause of phi, nullopt for clauses introduced by a stage.
    std::optional<std::size_t> trace(std::size_t c) const;

private:
    CnfFormula phi_;
    std::unique_ptr<PwStage> pw_;
    std::unique_ptr<AtMost3Stage> split_;
    std::unique_ptr<LimitOccurrencesStage> limit_;
    std::unique_ptr<PadToE3Stage> pad_;
};

CnfFormula f_transform(const CnfFormula& phi);
Assignment sat_witness(const CnfFormula& phi, std::size_t c);

/// Every literal over a variable that occurs at all appears in some clause.
bool every_literal_occurs(const CnfFormula& f);

// ---------------------------------------------------------------- gadget graph h

enum : std::size_t { kColorT = 1, kColorF = 2, kColorC = 3 };

/// Vertex layout: v_c = 0, v_s = 1, x_i = 2 + 2i, ~x_i = 3 + 2i, then per
/// clause k nine vertices a1 b1 a2 b2 a3 b3 t1 t2 t3.
struct CaiMeyerLayout {
    std::size_t n = 0;
    std::size_t m = 0;

    static constexpr Vertex vc() { return 0; }
    static constexpr Vertex vs() { return 1; }
    Vertex literal(const Literal& l) const { return 2 + 2 * l.var + (l.negated ? 1 : 0); }
    Vertex a(std::size_t k, std::size_t i) const { return 2 + 2 * n + 9 * k + 2 * i; }
    Vertex b(std::size_t k, std::size_t i) const { return 2 + 2 * n + 9 * k + 2 * i + 1; }
    Vertex t(std::size_t k, std::size_t i) const { return 2 + 2 * n + 9 * k + 6 + i; }
    std::size_t vertex_count() const { return 2 + 2 * n + 9 * m; }
    bool is_literal(Vertex v) const { return v >= 2 && v < 2 + 2 * n; }
    /// Clause owning a gadget vertex, nullopt for v_c, v_s, literals.
    std::optional<std::size_t> clause_of(Vertex v) const;
};

struct CaiMeyerGraph {
    Graph graph;
    CaiMeyerLayout layout;
};

/// h(psi); with_vc_vs = false gives h(psi) - {v_c, v_s}.
CaiMeyerGraph cai_meyer_graph(const CnfFormula& psi, bool with_vc_vs = true);

/// 3-coloring of h(psi) (or h(psi) - {v_c, v_s}) in colors T, F, C.
/// Throws NotSatisfying if a does not satisfy psi.
Coloring coloring_from_assignment(const CnfFormula& psi, const CaiMeyerGraph& h, const Assignment& a);

/// g(phi) = h(f(phi)) - {v_c, v_s} together with the optimal-solution maps
/// for its one-edge- and one-vertex-deleted subgraphs.
class GReduction {
public:
    explicit GReduction(const CnfFormula& phi);

    const FReduction& f() const noexcept { return f_; }
    const Graph& graph() const noexcept { return h_.graph; }
    const CaiMeyerLayout& layout() const noexcept { return h_.layout; }

    /// Proper 3-coloring of g - e (same vertex ids). Throws NotAnEdge.
    Coloring opt_edge(Vertex u, Vertex v) const;
    /// Proper 3-coloring of g - v (ids above v shift down).
    Coloring opt_vertex(Vertex v) const;

private:
    std::vector<std::size_t> base_coloring(std::size_t clause) const;
    bool complete_gadget(std::vector<std::size_t>& colors, std::size_t clause, const Graph& g) const;
    bool recolor_triangle(std::vector<std::size_t>& colors, std::size_t clause, const Graph& g) const;
    std::size_t first_clause_with(const Literal& l) const;

    FReduction f_;
    CaiMeyerGraph h_;
};

Graph g_transform(const CnfFormula& phi);
Coloring g_opt(const CnfFormula& phi, Vertex u, Vertex v);
Coloring g_opt_vertex(const CnfFormula& phi, Vertex v);

// ---------------------------------------------------------------- joins

/// g + K_{k-3}; throws KTooSmall for k < 4.
Graph join_lift(const Graph& g, std::size_t k);

/// Pads both graphs with isolated vertices to max(|V(G)|, |V(H)|) + 1
/// vertices and joins them. Throws EmptyInput on a null graph.
Graph theta_gadget(const Graph& g, const Graph& h);

// ---------------------------------------------------------------- vertex cover

/// Literal vertices 2i (x_i) and 2i + 1 (~x_i), then clause triangles
/// 2n + 3k + p. k = n + 2m.
struct VcInstance {
    Graph graph;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t m = 0;

    Triangle clause_triangle(std::size_t clause) const;
    /// Clause whose triangle is t; throws NotATriangle.
    std::size_t clause_of(const Triangle& t) const;
};

VcInstance vc_reduction(const CnfFormula& psi);

/// Optimal cover of graph - T built from an assignment satisfying psi minus
/// T's clause. Vertex ids refer to the re-indexed graph - T.
VertexCover vc_triangle_opt(const CnfFormula& psi, const Triangle& t, const Assignment& alpha);
/// Same, with the assignment taken from f's witness map (psi = f.output()).
VertexCover vc_triangle_opt(const FReduction& f, const Triangle& t);

/// Removes the three vertices of t.
Graph delete_triangle(const Graph& g, const Triangle& t);

} // namespace neighborly
