#include "neighborly/criticality.hpp"

#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "neighborly/corpus.hpp"
#include "neighborly/solvers.hpp"

namespace neighborly {

namespace {

std::size_t chi(const Graph& g)
{
    return g.vertex_count() == 0 ? 0 : chromatic_number(g).chi;
}

std::size_t beta(const Graph& g)
{
    return min_vertex_cover(g).size();
}

std::vector<Modification> deletions(const Graph& g, Mode mode)
{
    std::vector<Modification> out;
    if (mode == Mode::Edge) {
        for (const auto& e : g.edges()) out.push_back(DeleteEdge{e.u, e.v});
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(DeleteVertex{v});
    }
    return out;
}

// Fills base, neighbors, verdict and certificate; `ok` decides a single
// neighbor value against the base.
CriticalityReport check_neighbors(std::string notion, const Graph& g, Mode mode, std::size_t base,
                                  const std::function<std::size_t(const Graph&)>& value,
                                  const std::function<bool(std::size_t)>& ok)
{
    CriticalityReport r;
    r.notion = std::move(notion);
    r.mode = mode;
    r.base = base;
    r.verdict = true;
    for (auto& m : deletions(g, mode)) {
        std::size_t v = value(apply_modification(g, m));
        if (!ok(v) && r.verdict) {
            r.verdict = false;
            r.certificate = m;
        }
        r.neighbors.push_back({std::move(m), v});
    }
    return r;
}

// Edge-mode coloring criticality also requires every vertex to matter.
void reject_isolated(CriticalityReport& r, const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) {
            r.verdict = false;
            r.certificate = DeleteVertex{v};
            return;
        }
}

} // namespace

std::string to_string(Mode mode)
{
    return mode == Mode::Edge ? "edge" : "vertex";
}

std::string CriticalityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["notion"] = notion;
    j["mode"] = to_string(mode);
    j["base"] = base;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& n : neighbors) {
        nlohmann::ordered_json e;
        e["deleted"] = to_string(n.deletion);
        e["value"] = n.value;
        arr.push_back(std::move(e));
    }
    j["neighbors"] = std::move(arr);
    j["verdict"] = verdict;
    j["certificate"] = certificate ? nlohmann::ordered_json(to_string(*certificate)) : nlohmann::ordered_json();
    j["degenerate"] = degenerate;
    return j.dump();
}

CriticalityReport is_minimally_k_uncolorable(const Graph& g, std::size_t k, Mode mode)
{
    if (k == 0) throw std::invalid_argument("k must be positive");
    const std::size_t base = chi(g);
    std::string notion = "minimally-" + std::to_string(k) + "-uncolorable";
    if (base <= k) {
        CriticalityReport r;
        r.notion = std::move(notion);
        r.mode = mode;
        r.base = base;
        return r;
    }
    auto r = check_neighbors(std::move(notion), g, mode, base, chi, [k](std::size_t v) { return v <= k; });
    if (mode == Mode::Edge && r.verdict) reject_isolated(r, g);
    return r;
}

CriticalityReport is_chi_critical(const Graph& g, Mode mode)
{
    const std::size_t base = chi(g);
    auto r = check_neighbors("chi-critical", g, mode, base, chi, [base](std::size_t v) { return v < base; });
    if ((mode == Mode::Edge && g.edge_count() == 0) || (mode == Mode::Vertex && g.vertex_count() == 0)) {
        r.degenerate = true;
        r.verdict = false;
        r.certificate.reset();
    } else if (mode == Mode::Edge && r.verdict) {
        reject_isolated(r, g);
    }
    return r;
}

CriticalityReport is_beta_critical(const Graph& g, Mode mode)
{
    const std::size_t base = beta(g);
    auto r = check_neighbors("beta-critical", g, mode, base, beta, [base](std::size_t v) { return v < base; });
    if ((mode == Mode::Edge && g.edge_count() == 0) || (mode == Mode::Vertex && g.vertex_count() < 2)) {
        r.degenerate = true;
        r.verdict = false;
        r.certificate.reset();
    }
    return r;
}

std::string MinimalUnsatReport::to_json() const
{
    nlohmann::ordered_json j;
    j["notion"] = "minimal-unsat";
    j["unsat"] = unsat;
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < satisfiable.size(); ++i) {
        nlohmann::ordered_json e;
        e["deleted"] = "delete-clause " + std::to_string(i);
        e["satisfiable"] = static_cast<bool>(satisfiable[i]);
        arr.push_back(std::move(e));
    }
    j["neighbors"] = std::move(arr);
    j["verdict"] = verdict;
    j["certificate"] = certificate ? nlohmann::ordered_json("delete-clause " + std::to_string(*certificate))
                                   : nlohmann::ordered_json();
    return j.dump();
}

MinimalUnsatReport is_minimal_unsat(const CnfFormula& phi)
{
    MinimalUnsatReport r;
    r.unsat = !sat_solve(phi);
    r.verdict = r.unsat;
    for (std::size_t i = 0; i < phi.clause_count(); ++i) {
        const bool sat = sat_solve(without_clause(phi, i)).has_value();
        r.satisfiable.push_back(sat);
        if (!sat && r.verdict) {
            r.verdict = false;
            r.certificate = i;
        }
    }
    if (!r.unsat) r.certificate.reset();
    return r;
}

bool is_beta_stable(const Graph& g)
{
    if (g.edge_count() == 0) return false;
    const std::size_t base = beta(g);
    for (const auto& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        if (beta(h) != base) return false;
    }
    return true;
}

std::vector<Graph> find_beta_stable_graphs(const std::vector<Graph>& graphs)
{
    std::vector<Graph> out;
    for (const auto& g : graphs)
        if (is_beta_stable(g)) out.push_back(g);
    return out;
}

std::vector<Graph> find_beta_stable_graphs(std::size_t n)
{
    if (n > 8) throw std::invalid_argument("beta-stable search is limited to 8 vertices");
    return find_beta_stable_graphs(corpus::nonisomorphic_graphs(n));
}

} // namespace neighborly
