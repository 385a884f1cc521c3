#include "neighborly/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "neighborly/error.hpp"
#include "neighborly/graph_io.hpp"

namespace neighborly {

namespace {

VertexCover shift_up(const VertexCover& cover, Vertex removed)
{
    VertexCover out;
    for (Vertex w : cover) out.push_back(w >= removed ? w + 1 : w);
    return out;
}

VertexCover with_vertex(VertexCover cover, Vertex v)
{
    cover.push_back(v);
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::optional<Vertex> first_non_neighbor(const Graph& g, Vertex v)
{
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (w != v && !g.has_edge(v, w)) return w;
    return std::nullopt;
}

// Cover for graphs in which every edge has a universal endpoint.
std::optional<VertexCover> universal_endpoint_cover(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == 0) return VertexCover{};
    std::vector<bool> universal(n);
    for (Vertex v = 0; v < n; ++v) universal[v] = is_universal_vertex(g, v);
    for (const auto& e : g.edges())
        if (!universal[e.u] && !universal[e.v]) return std::nullopt;
    VertexCover cover;
    if (is_complete(g)) {
        for (Vertex v = 0; v + 1 < n; ++v) cover.push_back(v);
        return cover;
    }
    for (Vertex v = 0; v < n; ++v)
        if (universal[v]) cover.push_back(v);
    return cover;
}

Coloring optimal_coloring(const Graph& g, TimeBudget budget)
{
    if (g.vertex_count() == 0) return {};
    return chromatic_number(g, budget).coloring;
}

nlohmann::ordered_json answer_json(const Solution& s)
{
    if (const auto* c = std::get_if<Coloring>(&s)) return c->colors;
    return std::get<VertexCover>(s);
}

} // namespace

std::string to_string(Problem p)
{
    return p == Problem::Coloring ? "coloring" : "vertex-cover";
}

std::size_t solution_size(const Solution& s)
{
    if (const auto* c = std::get_if<Coloring>(&s)) return c->color_count();
    return std::get<VertexCover>(s).size();
}

std::string OracleTranscript::to_json_lines() const
{
    std::string out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        nlohmann::ordered_json j;
        j["query"] = i + 1;
        j["modification"] = to_string(r.modification);
        j["digest"] = r.digest;
        j["answer"] = answer_json(r.answer);
        j["size"] = r.answer_size;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string instance_digest(const Graph& g)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : io::to_graph6(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

NeighborOracle::NeighborOracle(Problem problem, ModificationKind allowed, std::optional<std::size_t> query_budget,
                               TimeBudget solver_budget)
    : problem_(problem), allowed_(allowed), query_budget_(query_budget), solver_budget_(solver_budget)
{
    if (allowed == ModificationKind::DeleteClause)
        throw Error(ErrorKind::InvalidModification, "graph oracles cannot delete clauses");
}

Solution NeighborOracle::query(const Graph& instance, const Modification& m)
{
    if (kind_of(m) != allowed_)
        throw Error(ErrorKind::InvalidModification,
                    "oracle allows " + to_string(allowed_) + ", got " + to_string(kind_of(m)));
    if (query_budget_ && transcript_.size() >= *query_budget_)
        throw Error(ErrorKind::OracleBudgetExceeded, "query budget of " + std::to_string(*query_budget_) + " used up");
    const Graph modified = apply_modification(instance, m);
    Solution answer;
    if (problem_ == Problem::Coloring) answer = optimal_coloring(modified, solver_budget_);
    else answer = min_vertex_cover(modified, solver_budget_);
    transcript_.records.push_back({m, instance_digest(modified), answer, solution_size(answer)});
    return answer;
}

Coloring NeighborOracle::query_coloring(const Graph& instance, const Modification& m)
{
    if (problem_ != Problem::Coloring) throw std::logic_error("query_coloring on a vertex cover oracle");
    return std::get<Coloring>(query(instance, m));
}

VertexCover NeighborOracle::query_cover(const Graph& instance, const Modification& m)
{
    if (problem_ != Problem::VertexCover) throw std::logic_error("query_cover on a coloring oracle");
    return std::get<VertexCover>(query(instance, m));
}

// ---------------------------------------------------------------- coloring

Coloring colorer(const Graph& g, NeighborOracle& oracle)
{
    if (auto w = find_non_universal(g)) {
        Coloring f1 = oracle.query_coloring(g, AddEdge{w->edge.u, w->x});
        Coloring f2 = oracle.query_coloring(g, AddEdge{w->edge.v, w->x});
        return f1.color_count() < f2.color_count() ? f1 : f2;
    }
    for (std::size_t k = 1;; ++k)
        if (auto c = subcol(g, k)) return *c;
}

SubcolPartition subcol_partition(const Graph& g, Vertex l, Vertex r)
{
    if (!g.has_edge(l, r)) throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(l) + "," + std::to_string(r) + "}");
    SubcolPartition p{l, r, {}, {}, {}};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (x == l || x == r) continue;
        const bool to_l = g.has_edge(x, l);
        const bool to_r = g.has_edge(x, r);
        if (to_l && to_r) p.middle.push_back(x);
        else if (to_l) p.left.push_back(x);
        else if (to_r) p.right.push_back(x);
        else throw Error(ErrorKind::NotUniversalEdged, "vertex " + std::to_string(x) + " misses both ends of the edge");
    }
    auto independent = [&](const std::vector<Vertex>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.has_edge(vs[i], vs[j])) return false;
        return true;
    };
    if (!independent(p.left) || !independent(p.right))
        throw std::logic_error("subcol partition sides are not independent");
    return p;
}

std::optional<Coloring> subcol(const Graph& g, std::size_t k)
{
    if (!is_universal_edged(g)) throw Error(ErrorKind::NotUniversalEdged, "subcol needs a universal-edged graph");
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == 0) {
        if (k == 0 && n > 0) return std::nullopt;
        return Coloring{std::vector<std::size_t>(n, 1)};
    }
    if (k <= 1) return std::nullopt;
    if (auto parts = bipartition(g)) {
        Coloring c{std::vector<std::size_t>(n, 0)};
        for (Vertex v : parts->a) c.colors[v] = 1;
        for (Vertex v : parts->b) c.colors[v] = 2;
        return c;
    }
    if (k == 2) return std::nullopt;
    const Edge e = g.edges().front();
    const auto p = subcol_partition(g, e.u, e.v);
    auto inner = subcol(induced_subgraph(g, p.middle), k - 2);
    if (!inner) return std::nullopt;
    Coloring c{std::vector<std::size_t>(n, 0)};
    for (std::size_t i = 0; i < p.middle.size(); ++i) c.colors[p.middle[i]] = inner->colors[i];
    for (Vertex v : p.left) c.colors[v] = k - 1;
    c.colors[p.r] = k - 1;
    for (Vertex v : p.right) c.colors[v] = k;
    c.colors[p.l] = k;
    return c;
}

// ---------------------------------------------------------------- vertex cover

VertexCover vc_from_vertex_deletion(const Graph& g, NeighborOracle& oracle)
{
    if (g.edge_count() == 0) return {};
    const Edge e = g.edges().front();
    VertexCover c1 = oracle.query_cover(g, DeleteVertex{e.u});
    VertexCover c2 = oracle.query_cover(g, DeleteVertex{e.v});
    if (c2.size() < c1.size()) return with_vertex(shift_up(c2, e.v), e.v);
    return with_vertex(shift_up(c1, e.u), e.u);
}

VertexCover vc_from_edge_addition(const Graph& g, NeighborOracle& oracle)
{
    for (const auto& e : g.edges()) {
        auto w1 = first_non_neighbor(g, e.u);
        auto w2 = first_non_neighbor(g, e.v);
        if (!w1 || !w2) continue;
        VertexCover c1 = oracle.query_cover(g, AddEdge{e.u, *w1});
        VertexCover c2 = oracle.query_cover(g, AddEdge{e.v, *w2});
        return c2.size() < c1.size() ? c2 : c1;
    }
    return *universal_endpoint_cover(g);
}

Solution solve_by_added_isolated_vertex(const Graph& g, Problem problem, NeighborOracle& oracle)
{
    if (problem != oracle.problem()) throw std::invalid_argument("oracle answers a different problem");
    const Vertex extra = g.vertex_count();
    Solution answer = oracle.query(g, AddVertex{});
    if (auto* c = std::get_if<Coloring>(&answer)) {
        c->colors.pop_back();
        return normalize(*c);
    }
    auto cover = std::get<VertexCover>(answer);
    cover.erase(std::remove(cover.begin(), cover.end(), extra), cover.end());
    return cover;
}

// ---------------------------------------------------------------- chains

ChainResult one_query_chain(const Graph& g, Problem problem, ModificationKind kind, const ChainStepper& stepper,
                            const TrivialSolver& trivial)
{
    const std::size_t limit = g.vertex_count() * g.vertex_count() + g.vertex_count();
    std::vector<Graph> instances{g};
    std::vector<Modification> steps;
    std::optional<Solution> solution;
    while (!(solution = trivial(instances.back()))) {
        if (steps.size() >= limit) throw Error(ErrorKind::NoProgress, "chain exceeded " + std::to_string(limit) + " steps");
        auto m = stepper.choose(instances.back());
        if (!m) throw Error(ErrorKind::NoProgress, "stepper found no modification");
        if (kind_of(*m) != kind)
            throw Error(ErrorKind::InvalidModification, "chain allows " + to_string(kind) + ", got " + to_string(kind_of(*m)));
        instances.push_back(apply_modification(instances.back(), *m));
        steps.push_back(std::move(*m));
    }
    for (std::size_t i = steps.size(); i-- > 0;) solution = stepper.lift(instances[i], steps[i], *solution);
    const bool is_coloring = std::holds_alternative<Coloring>(*solution);
    if (is_coloring != (problem == Problem::Coloring)) throw std::logic_error("chain produced the wrong kind of solution");
    return {std::move(*solution), std::move(steps)};
}

ChainResult coloring_add_edge_chain(const Graph& g)
{
    ChainStepper stepper;
    stepper.choose = [](const Graph& h) -> std::optional<Modification> {
        const auto f = optimal_coloring(h, default_time_budget());
        for (Vertex u = 0; u < h.vertex_count(); ++u)
            for (Vertex x = u + 1; x < h.vertex_count(); ++x)
                if (!h.has_edge(u, x) && f.colors[u] != f.colors[x]) return AddEdge{u, x};
        return std::nullopt;
    };
    stepper.lift = [](const Graph&, const Modification&, const Solution& answer) -> Solution {
        return normalize(std::get<Coloring>(answer));
    };
    TrivialSolver trivial = [](const Graph& h) -> std::optional<Solution> {
        if (h.vertex_count() == 0) return Coloring{};
        auto parts = complete_multipartite_parts(h);
        if (!parts) return std::nullopt;
        Coloring c{std::vector<std::size_t>(h.vertex_count(), 0)};
        for (std::size_t i = 0; i < parts->size(); ++i)
            for (Vertex v : (*parts)[i]) c.colors[v] = i + 1;
        return c;
    };
    return one_query_chain(g, Problem::Coloring, ModificationKind::AddEdge, stepper, trivial);
}

ChainResult cover_delete_vertex_chain(const Graph& g)
{
    ChainStepper stepper;
    stepper.choose = [](const Graph& h) -> std::optional<Modification> {
        const auto cover = min_vertex_cover(h);
        if (cover.empty()) return std::nullopt;
        return DeleteVertex{cover.front()};
    };
    stepper.lift = [](const Graph&, const Modification& m, const Solution& answer) -> Solution {
        const Vertex v = std::get<DeleteVertex>(m).v;
        return with_vertex(shift_up(std::get<VertexCover>(answer), v), v);
    };
    TrivialSolver trivial = [](const Graph& h) -> std::optional<Solution> {
        if (h.edge_count() == 0) return VertexCover{};
        return std::nullopt;
    };
    return one_query_chain(g, Problem::VertexCover, ModificationKind::DeleteVertex, stepper, trivial);
}

ChainResult cover_add_edge_chain(const Graph& g)
{
    ChainStepper stepper;
    stepper.choose = [](const Graph& h) -> std::optional<Modification> {
        for (Vertex v : min_vertex_cover(h))
            if (auto w = first_non_neighbor(h, v)) return AddEdge{v, *w};
        return std::nullopt;
    };
    stepper.lift = [](const Graph&, const Modification&, const Solution& answer) -> Solution { return answer; };
    TrivialSolver trivial = [](const Graph& h) -> std::optional<Solution> {
        if (auto c = universal_endpoint_cover(h)) return *c;
        return std::nullopt;
    };
    return one_query_chain(g, Problem::VertexCover, ModificationKind::AddEdge, stepper, trivial);
}

} // namespace neighborly
