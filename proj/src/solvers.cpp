#include "neighborly/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "cdcl.hpp"
#include "neighborly/error.hpp"

namespace neighborly {

namespace {

using Clock = std::chrono::steady_clock;

TimeBudget g_default_budget;

class Deadline {
public:
    explicit Deadline(TimeBudget budget)
    {
        if (budget) end_ = Clock::now() + *budget;
    }

    // Cheap enough to call per search node; the clock is read every 256 calls.
    void check(const char* what)
    {
        if (!end_ || (++ticks_ & 255) != 0) return;
        if (Clock::now() > *end_) throw Error(ErrorKind::Timeout, std::string(what) + " exceeded its time budget");
    }

private:
    std::optional<Clock::time_point> end_;
    std::uint32_t ticks_ = 0;
};

// ---------------------------------------------------------------- coloring

class Dsatur {
public:
    Dsatur(const Graph& g, std::size_t k, TimeBudget budget)
        : g_(g), n_(g.vertex_count()), k_(k), deadline_(budget)
    {
        color_.assign(n_, 0);
        count_.assign(n_ * (k_ + 1), 0);
        sat_.assign(n_, 0);
        udeg_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) udeg_[v] = g.degree(v);
    }

    std::optional<Coloring> run()
    {
        if (!search(0, 0)) return std::nullopt;
        return normalize(Coloring{color_});
    }

private:
    Vertex pick() const
    {
        Vertex best = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != 0) continue;
            if (best == n_ || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && udeg_[v] > udeg_[best])) best = v;
        }
        return best;
    }

    bool assign(Vertex v, std::size_t c)
    {
        color_[v] = c;
        bool ok = true;
        for (Vertex w : g_.neighbors(v)) {
            --udeg_[w];
            if (color_[w] != 0) continue;
            if (count_[w * (k_ + 1) + c]++ == 0 && ++sat_[w] == k_) ok = false;
        }
        return ok;
    }

    void unassign(Vertex v)
    {
        std::size_t c = color_[v];
        for (Vertex w : g_.neighbors(v)) {
            ++udeg_[w];
            if (color_[w] != 0) continue;
            if (--count_[w * (k_ + 1) + c] == 0) --sat_[w];
        }
        color_[v] = 0;
    }

    bool search(std::size_t colored, std::size_t used)
    {
        if (colored == n_) return true;
        deadline_.check("k_colorable");
        Vertex v = pick();
        std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 1; c <= limit; ++c) {
            if (count_[v * (k_ + 1) + c] != 0) continue;
            bool ok = assign(v, c);
            if (ok && search(colored + 1, std::max(used, c))) return true;
            unassign(v);
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t k_;
    Deadline deadline_;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> count_;
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> udeg_;
};

std::size_t greedy_clique_size(const Graph& g)
{
    std::size_t best = g.vertex_count() ? 1 : 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> clique{v};
        for (Vertex w : g.neighbors(v)) {
            if (w < v) continue;
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return u == v || g.has_edge(u, w); }))
                clique.push_back(w);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

// ---------------------------------------------------------------- vertex cover

class CoverSearch {
public:
    CoverSearch(const Graph& g, TimeBudget budget) : g_(g), n_(g.vertex_count()), deadline_(budget)
    {
        alive_.assign(n_, 1);
        deg_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) deg_[v] = g.degree(v);
        edges_ = g.edge_count();
        // Initial upper bound: every non-isolated vertex except one per component
        // is never worse than all non-isolated vertices.
        for (Vertex v = 0; v < n_; ++v)
            if (deg_[v] > 0) best_.push_back(v);
        mark_.assign(n_, 0);
    }

    VertexCover run()
    {
        search();
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void remove(Vertex v, bool into_cover)
    {
        alive_[v] = 0;
        for (Vertex w : g_.neighbors(v))
            if (alive_[w]) {
                --deg_[w];
                --edges_;
            }
        trail_.push_back(v);
        if (into_cover) cover_.push_back(v);
        in_cover_trail_.push_back(into_cover);
    }

    void undo_to(std::size_t size)
    {
        while (trail_.size() > size) {
            Vertex v = trail_.back();
            trail_.pop_back();
            bool in_cover = in_cover_trail_.back();
            in_cover_trail_.pop_back();
            if (in_cover) cover_.pop_back();
            alive_[v] = 1;
            for (Vertex w : g_.neighbors(v))
                if (alive_[w]) {
                    ++deg_[w];
                    ++edges_;
                }
        }
    }

    std::vector<Vertex> alive_neighbors(Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex w : g_.neighbors(v))
            if (alive_[w]) out.push_back(w);
        return out;
    }

    bool is_clique(const std::vector<Vertex>& vs) const
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g_.has_edge(vs[i], vs[j])) return false;
        return true;
    }

    // Degree-0 removal, degree-1 and small simplicial vertices force their
    // neighborhoods into the cover.
    void reduce()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < n_; ++v) {
                if (!alive_[v]) continue;
                if (deg_[v] == 0) {
                    remove(v, false);
                    changed = true;
                } else if (deg_[v] <= 3) {
                    auto nb = alive_neighbors(v);
                    if (deg_[v] == 1 || is_clique(nb)) {
                        for (Vertex w : nb) remove(w, true);
                        remove(v, false);
                        changed = true;
                    }
                }
            }
        }
    }

    std::size_t clique_partition_bound()
    {
        std::size_t bound = 0;
        ++stamp_;
        std::vector<Vertex> clique;
        for (Vertex v = 0; v < n_; ++v) {
            if (!alive_[v] || mark_[v] == stamp_) continue;
            mark_[v] = stamp_;
            clique.assign(1, v);
            for (Vertex w : g_.neighbors(v)) {
                if (!alive_[w] || mark_[w] == stamp_) continue;
                if (std::all_of(clique.begin() + 1, clique.end(), [&](Vertex u) { return g_.has_edge(u, w); })) {
                    clique.push_back(w);
                    mark_[w] = stamp_;
                }
            }
            bound += clique.size() - 1;
        }
        return bound;
    }

    void search()
    {
        deadline_.check("min_vertex_cover");
        std::size_t mark = trail_.size();
        reduce();
        if (edges_ == 0) {
            if (cover_.size() < best_.size()) best_ = cover_;
            undo_to(mark);
            return;
        }
        if (cover_.size() + clique_partition_bound() >= best_.size()) {
            undo_to(mark);
            return;
        }
        Vertex pivot = n_;
        for (Vertex v = 0; v < n_; ++v)
            if (alive_[v] && (pivot == n_ || deg_[v] > deg_[pivot])) pivot = v;
        std::size_t before = trail_.size();
        remove(pivot, true);
        search();
        undo_to(before);
        auto nb = alive_neighbors(pivot);
        if (cover_.size() + nb.size() < best_.size()) {
            for (Vertex w : nb) remove(w, true);
            remove(pivot, false);
            search();
            undo_to(before);
        }
        undo_to(mark);
    }

    const Graph& g_;
    std::size_t n_;
    Deadline deadline_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::size_t> deg_;
    std::size_t edges_ = 0;
    std::vector<Vertex> trail_;
    std::vector<bool> in_cover_trail_;
    std::vector<Vertex> cover_;
    std::vector<Vertex> best_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

} // namespace

std::size_t Coloring::color_count() const
{
    std::vector<std::size_t> seen(colors.begin(), colors.end());
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    if (c.colors.size() != g.vertex_count()) return false;
    for (auto col : c.colors)
        if (col == 0) return false;
    for (const auto& e : g.edges())
        if (c.colors[e.u] == c.colors[e.v]) return false;
    return true;
}

Coloring normalize(const Coloring& c)
{
    std::vector<std::size_t> relabel;
    std::vector<std::size_t> original;
    Coloring out;
    out.colors.reserve(c.colors.size());
    for (auto col : c.colors) {
        auto it = std::find(original.begin(), original.end(), col);
        if (it == original.end()) {
            original.push_back(col);
            out.colors.push_back(original.size());
        } else {
            out.colors.push_back(static_cast<std::size_t>(it - original.begin()) + 1);
        }
    }
    return out;
}

bool is_vertex_cover(const Graph& g, const VertexCover& cover)
{
    std::vector<std::uint8_t> in(g.vertex_count(), 0);
    for (auto v : cover) {
        if (v >= g.vertex_count()) return false;
        in[v] = 1;
    }
    for (const auto& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

void set_default_time_budget(TimeBudget budget)
{
    g_default_budget = budget;
}

TimeBudget default_time_budget()
{
    return g_default_budget;
}

namespace {

std::optional<Coloring> cdcl_coloring(const Graph& g, std::size_t k, TimeBudget budget)
{
    const std::size_t n = g.vertex_count();
    auto lit = [k](Vertex v, std::size_t c, bool negated) { return static_cast<int>(2 * (v * k + c) + (negated ? 1 : 0)); };
    detail::Cdcl solver(n * k, detail::Cdcl::Branching::Activity);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> some;
        for (std::size_t c = 0; c < k; ++c) some.push_back(lit(v, c, false));
        solver.add_clause(some);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) solver.add_clause({lit(v, a, true), lit(v, b, true)});
    }
    for (const auto& e : g.edges())
        for (std::size_t c = 0; c < k; ++c) solver.add_clause({lit(e.u, c, true), lit(e.v, c, true)});
    solver.add_clause({lit(0, 0, false)});
    std::optional<Clock::time_point> end;
    if (budget) end = Clock::now() + *budget;
    auto model = solver.solve(end);
    if (!model) return std::nullopt;
    Coloring out;
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t c = 0; c < k; ++c)
            if ((*model)[v * k + c]) {
                out.colors.push_back(c + 1);
                break;
            }
    return normalize(out);
}

constexpr std::size_t dsatur_limit = 64;
constexpr std::size_t cover_search_limit = 64;

std::vector<std::vector<Vertex>> greedy_clique_partition(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> used(n, 0);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        std::vector<Vertex> clique{v};
        for (Vertex w : g.neighbors(v)) {
            if (used[w]) continue;
            if (std::all_of(clique.begin() + 1, clique.end(), [&](Vertex u) { return g.has_edge(u, w); })) {
                clique.push_back(w);
                used[w] = 1;
            }
        }
        parts.push_back(std::move(clique));
    }
    return parts;
}

// A cover leaves at most one vertex of each clique out, so its size is
// sum(|C| - 1) plus the number of cliques it takes whole. Find the smallest
// such count d by SAT, with a sequential counter bounding the whole cliques.
std::optional<VertexCover> cover_with_slack(const Graph& g, const std::vector<std::vector<Vertex>>& parts, std::size_t d,
                                            std::optional<Clock::time_point> end)
{
    const std::size_t n = g.vertex_count();
    const std::size_t q = parts.size();
    auto x = [](std::size_t v, bool negated) { return static_cast<int>(2 * v + (negated ? 1 : 0)); };
    const std::size_t z0 = n;
    const std::size_t s0 = n + q;
    auto z = [&](std::size_t i, bool negated) { return x(z0 + i, negated); };
    auto s = [&](std::size_t i, std::size_t j, bool negated) { return x(s0 + i * d + j, negated); };
    detail::Cdcl solver(n + q + q * d, detail::Cdcl::Branching::Activity);
    for (const auto& e : g.edges()) solver.add_clause({x(e.u, false), x(e.v, false)});
    for (std::size_t i = 0; i < q; ++i) {
        std::vector<int> clause{z(i, false)};
        for (Vertex v : parts[i]) clause.push_back(x(v, true));
        solver.add_clause(clause);
    }
    if (d == 0) {
        for (std::size_t i = 0; i < q; ++i) solver.add_clause({z(i, true)});
    } else {
        for (std::size_t i = 0; i < q; ++i) {
            solver.add_clause({z(i, true), s(i, 0, false)});
            if (i == 0) {
                for (std::size_t j = 1; j < d; ++j) solver.add_clause({s(0, j, true)});
                continue;
            }
            solver.add_clause({s(i - 1, 0, true), s(i, 0, false)});
            for (std::size_t j = 1; j < d; ++j) {
                solver.add_clause({z(i, true), s(i - 1, j - 1, true), s(i, j, false)});
                solver.add_clause({s(i - 1, j, true), s(i, j, false)});
            }
            solver.add_clause({z(i, true), s(i - 1, d - 1, true)});
        }
    }
    auto model = solver.solve(end);
    if (!model) return std::nullopt;
    VertexCover cover;
    for (Vertex v = 0; v < n; ++v)
        if ((*model)[v]) cover.push_back(v);
    return cover;
}

VertexCover sat_vertex_cover(const Graph& g, TimeBudget budget)
{
    std::optional<Clock::time_point> end;
    if (budget) end = Clock::now() + *budget;
    const auto parts = greedy_clique_partition(g);
    for (std::size_t d = 0;; ++d) {
        if (auto cover = cover_with_slack(g, parts, d, end)) return *cover;
    }
}

} // namespace

std::optional<Assignment> sat_solve(const CnfFormula& f, TimeBudget budget)
{
    detail::Cdcl solver(f.variable_count(), detail::Cdcl::Branching::LowestIndex);
    for (const auto& c : f.clauses()) {
        std::vector<int> lits;
        for (const auto& l : c) lits.push_back(static_cast<int>(2 * l.var + (l.negated ? 1 : 0)));
        if (!solver.add_clause(lits)) return std::nullopt;
    }
    std::optional<Clock::time_point> end;
    if (budget) end = Clock::now() + *budget;
    auto model = solver.solve(end);
    if (!model) return std::nullopt;
    Assignment a(f.variable_count());
    for (Var v = 0; v < f.variable_count(); ++v) a.set(v, (*model)[v]);
    return a;
}

std::optional<Coloring> k_colorable(const Graph& g, std::size_t k, TimeBudget budget)
{
    if (k == 0) return g.vertex_count() == 0 ? std::optional<Coloring>(Coloring{}) : std::nullopt;
    if (k >= g.vertex_count()) {
        Coloring c;
        for (Vertex v = 0; v < g.vertex_count(); ++v) c.colors.push_back(v + 1);
        return normalize(c);
    }
    if (g.vertex_count() > dsatur_limit) return cdcl_coloring(g, k, budget);
    return Dsatur(g, k, budget).run();
}

ChromaticResult chromatic_number(const Graph& g, TimeBudget budget)
{
    if (g.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "chromatic number of the null graph");
    for (std::size_t k = greedy_clique_size(g);; ++k) {
        if (auto c = k_colorable(g, k, budget)) return {k, *c};
    }
}

VertexCover min_vertex_cover(const Graph& g, TimeBudget budget)
{
    if (g.vertex_count() > cover_search_limit) return sat_vertex_cover(g, budget);
    return CoverSearch(g, budget).run();
}

} // namespace neighborly
