#include "neighborly/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "neighborly/error.hpp"

namespace neighborly {

namespace {

// Fixed-order backtracking over `order`; vertices colored 0 elsewhere are
// ignored. Tries T, F, C for each vertex.
bool complete_vertices(const Graph& g, std::vector<std::size_t>& colors, const std::vector<Vertex>& order, std::size_t idx = 0)
{
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    for (std::size_t c : {kColorT, kColorF, kColorC}) {
        bool free = true;
        for (Vertex w : g.neighbors(v))
            if (colors[w] == c) {
                free = false;
                break;
            }
        if (!free) continue;
        colors[v] = c;
        if (complete_vertices(g, colors, order, idx + 1)) return true;
    }
    colors[v] = 0;
    return false;
}

std::vector<Vertex> gadget_order(const CaiMeyerLayout& lay, std::size_t k)
{
    return {lay.a(k, 0), lay.b(k, 0), lay.a(k, 1), lay.b(k, 1), lay.a(k, 2), lay.b(k, 2), lay.t(k, 0), lay.t(k, 1), lay.t(k, 2)};
}

void require_e3cnf(const CnfFormula& f, const char* who)
{
    if (!is_e3cnf(f)) throw Error(ErrorKind::NotE3Cnf, std::string(who) + " expects an E3CNF formula");
}

} // namespace

// ---------------------------------------------------------------- pw

PwStage::PwStage(const CnfFormula& phi)
{
    input_ = phi;
    if (phi.variable_count() < 2) throw Error(ErrorKind::TooFewVariables, "pw_transform needs at least two variables");
    if (phi.clause_count() == 0) throw Error(ErrorKind::NotE3Cnf, "pw_transform needs a nonempty formula");
    for (std::size_t i = 0; i < phi.clause_count(); ++i) {
        const auto& c = phi.clause(i);
        if (is_tautology(c)) throw Error(ErrorKind::Tautology, "clause " + std::to_string(i) + " contains a variable and its negation");
        if (c.size() != 3) throw Error(ErrorKind::NotE3Cnf, "clause " + std::to_string(i) + " does not have three literals");
    }
    const std::size_t n = phi.variable_count();
    const std::size_t m = phi.clause_count();
    output_ = CnfFormula(n);
    for (std::size_t i = 0; i < m; ++i) selectors_.push_back(output_.add_variable(VarRole::Selector));
    auto pi = [&](std::size_t i) {
        Clause c;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) c.push_back(pos(selectors_[j]));
        return c;
    };
    for (std::size_t i = 0; i < m; ++i) {
        Clause c = phi.clause(i);
        auto p = pi(i);
        c.insert(c.end(), p.begin(), p.end());
        output_.add_clause(c);
        trace_.emplace_back(i);
        kinds_.push_back({PwClauseKind::Main, i, 0});
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Clause c{phi.clause(i)[j].negate()};
            auto p = pi(i);
            c.insert(c.end(), p.begin(), p.end());
            c.push_back(neg(selectors_[i]));
            output_.add_clause(c);
            trace_.emplace_back(i);
            kinds_.push_back({PwClauseKind::Blocker, i, j});
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            output_.add_clause({neg(selectors_[i]), neg(selectors_[j])});
            trace_.emplace_back(std::nullopt);
            kinds_.push_back({PwClauseKind::Pair, i, j});
        }
    }
}

Assignment PwStage::witness(std::size_t deleted) const
{
    const auto& kind = kinds_.at(deleted);
    Assignment beta(output_.variable_count());
    const auto make = [&](const Literal& l, bool value) { beta.set(l.var, value != l.negated); };
    switch (kind.kind) {
    case PwClauseKind::Pair:
        beta.set(selectors_[kind.i], true);
        beta.set(selectors_[kind.j], true);
        break;
    case PwClauseKind::Main:
        beta.set(selectors_[kind.i], true);
        for (const auto& l : input_.clause(kind.i)) make(l, false);
        break;
    case PwClauseKind::Blocker:
        beta.set(selectors_[kind.i], true);
        for (std::size_t j = 0; j < 3; ++j) make(input_.clause(kind.i)[j], j == kind.j);
        break;
    }
    return beta;
}

PwOutput pw_transform(const CnfFormula& phi)
{
    PwStage stage(phi);
    return {stage.output(), stage.selector_vars(), stage.clause_kinds()};
}

Assignment pw_witness(const CnfFormula& phi, std::size_t deleted)
{
    return PwStage(phi).witness(deleted);
}

// ---------------------------------------------------------------- f

FReduction::FReduction(const CnfFormula& phi) : phi_(phi)
{
    require_e3cnf(phi, "f_transform");
    auto cleaned = remove_tautologies(phi);
    if (cleaned.clause_count() < 2)
        throw Error(ErrorKind::TooFewClauses, "f_transform needs at least two clauses; with one, y_1 never occurs positively");
    pw_ = std::make_unique<PwStage>(cleaned);
    split_ = std::make_unique<AtMost3Stage>(pw_->output());
    limit_ = std::make_unique<LimitOccurrencesStage>(split_->output());
    pad_ = std::make_unique<PadToE3Stage>(limit_->output());
    if (!is_e3cnf(output()) || !every_literal_occurs(output()))
        throw std::logic_error("f_transform postcondition violated");
}

Assignment FReduction::sat_witness(std::size_t c) const
{
    if (c >= output().clause_count()) throw Error(ErrorKind::InvalidModification, "clause index out of range");
    return pad_->witness(c, [&](std::size_t i) {
        return limit_->witness(i, [&](std::size_t j) {
            return split_->witness(j, [&](std::size_t k) { return pw_->witness(k); });
        });
    });
}

std::optional<std::size_t> FReduction::trace(std::size_t c) const
{
    std::optional<std::size_t> idx = pad_->clause_trace().at(c);
    for (const WitnessedStage* stage : {static_cast<const WitnessedStage*>(limit_.get()),
                                        static_cast<const WitnessedStage*>(split_.get()),
                                        static_cast<const WitnessedStage*>(pw_.get())}) {
        if (!idx) return std::nullopt;
        idx = stage->clause_trace().at(*idx);
    }
    return idx;
}

CnfFormula f_transform(const CnfFormula& phi)
{
    return FReduction(phi).output();
}

Assignment sat_witness(const CnfFormula& phi, std::size_t c)
{
    return FReduction(phi).sat_witness(c);
}

bool every_literal_occurs(const CnfFormula& f)
{
    std::vector<std::uint8_t> seen(2 * f.variable_count(), 0);
    for (const auto& c : f.clauses())
        for (const auto& l : c) seen[2 * l.var + (l.negated ? 1 : 0)] = 1;
    for (Var v = 0; v < f.variable_count(); ++v)
        if (seen[2 * v] != seen[2 * v + 1]) return false;
    return true;
}

// ---------------------------------------------------------------- gadget graph h

std::optional<std::size_t> CaiMeyerLayout::clause_of(Vertex v) const
{
    if (v < 2 + 2 * n || v >= vertex_count()) return std::nullopt;
    return (v - 2 - 2 * n) / 9;
}

CaiMeyerGraph cai_meyer_graph(const CnfFormula& psi, bool with_vc_vs)
{
    require_e3cnf(psi, "cai_meyer_graph");
    CaiMeyerLayout lay{psi.variable_count(), psi.clause_count()};
    Graph g(lay.vertex_count());
    g.set_role(lay.vc(), RoleTag::vc());
    g.set_role(lay.vs(), RoleTag::vs());
    if (with_vc_vs) g.add_edge(lay.vc(), lay.vs());
    for (Var x = 0; x < lay.n; ++x) {
        Vertex p = lay.literal(pos(x)), q = lay.literal(neg(x));
        g.set_role(p, RoleTag::literal(x, false));
        g.set_role(q, RoleTag::literal(x, true));
        g.add_edge(p, q);
        g.add_edge(lay.vc(), p);
        g.add_edge(lay.vc(), q);
    }
    for (std::size_t k = 0; k < lay.m; ++k) {
        for (std::size_t i = 0; i < 3; ++i) {
            g.set_role(lay.a(k, i), RoleTag::gadget(Role::A, k, i));
            g.set_role(lay.b(k, i), RoleTag::gadget(Role::B, k, i));
            g.set_role(lay.t(k, i), RoleTag::gadget(Role::T, k, i));
            g.add_edge(lay.t(k, i), lay.t(k, (i + 1) % 3));
            g.add_edge(lay.t(k, i), lay.b(k, i));
            g.add_edge(lay.a(k, i), lay.b(k, i));
            g.add_edge(lay.a(k, i), lay.vs());
            g.add_edge(lay.b(k, i), lay.vs());
            g.add_edge(lay.literal(psi.clause(k)[i]), lay.a(k, i));
        }
    }
    return {std::move(g), lay};
}

Coloring coloring_from_assignment(const CnfFormula& psi, const CaiMeyerGraph& h, const Assignment& a)
{
    if (!evaluate(psi, a)) throw Error(ErrorKind::NotSatisfying, "assignment does not satisfy the formula");
    const auto& lay = h.layout;
    std::vector<std::size_t> colors(lay.vertex_count(), 0);
    colors[lay.vc()] = kColorC;
    colors[lay.vs()] = kColorT;
    for (Var x = 0; x < lay.n; ++x) {
        colors[lay.literal(pos(x))] = a[x] ? kColorT : kColorF;
        colors[lay.literal(neg(x))] = a[x] ? kColorF : kColorT;
    }
    for (std::size_t k = 0; k < lay.m; ++k)
        if (!complete_vertices(h.graph, colors, gadget_order(lay, k)))
            throw std::logic_error("clause gadget admits no completion");
    return Coloring{colors};
}

GReduction::GReduction(const CnfFormula& phi) : f_(phi), h_(cai_meyer_graph(f_.output(), false)) {}

std::size_t GReduction::first_clause_with(const Literal& l) const
{
    const auto& psi = f_.output();
    for (std::size_t k = 0; k < psi.clause_count(); ++k)
        if (std::find(psi.clause(k).begin(), psi.clause(k).end(), l) != psi.clause(k).end()) return k;
    throw std::logic_error("literal does not occur in f(phi)");
}

std::vector<std::size_t> GReduction::base_coloring(std::size_t clause) const
{
    const auto alpha = f_.sat_witness(clause);
    const auto& lay = h_.layout;
    std::vector<std::size_t> colors(lay.vertex_count(), 0);
    colors[lay.vc()] = kColorC;
    colors[lay.vs()] = kColorT;
    for (Var x = 0; x < lay.n; ++x) {
        colors[lay.literal(pos(x))] = alpha[x] ? kColorT : kColorF;
        colors[lay.literal(neg(x))] = alpha[x] ? kColorF : kColorT;
    }
    for (std::size_t k = 0; k < lay.m; ++k)
        if (k != clause && !complete_gadget(colors, k, h_.graph))
            throw std::logic_error("witness leaves clause " + std::to_string(k) + " unsatisfied");
    return colors;
}

bool GReduction::complete_gadget(std::vector<std::size_t>& colors, std::size_t clause, const Graph& g) const
{
    auto order = gadget_order(h_.layout, clause);
    for (Vertex v : order) colors[v] = 0;
    return complete_vertices(g, colors, order);
}

bool GReduction::recolor_triangle(std::vector<std::size_t>& colors, std::size_t clause, const Graph& g) const
{
    const auto& lay = h_.layout;
    std::vector<Vertex> order{lay.t(clause, 0), lay.t(clause, 1), lay.t(clause, 2)};
    for (Vertex v : order) colors[v] = 0;
    return complete_vertices(g, colors, order);
}

Coloring GReduction::opt_edge(Vertex u, Vertex v) const
{
    const auto& g = h_.graph;
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
        throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of g(phi)");
    if (u > v) std::swap(u, v);
    const auto& lay = h_.layout;
    const auto& psi = f_.output();
    Graph ge = g;
    ge.remove_edge(u, v);

    auto literal_of = [&](Vertex x) { return Literal{(x - 2) / 2, (x - 2) % 2 == 1}; };
    std::vector<std::size_t> colors;
    bool ok = true;

    if (lay.is_literal(u) && lay.is_literal(v)) {
        // {x_i, ~x_i}
        const Literal x = literal_of(u);
        const std::size_t c = first_clause_with(x);
        colors = base_coloring(c);
        if (colors[u] == kColorF) colors[u] = kColorT;
        ok = complete_gadget(colors, c, ge);
    } else if (u == lay.vc()) {
        // {v_c, literal}
        const Literal l = literal_of(v);
        const std::size_t c = first_clause_with(l);
        colors = base_coloring(c);
        if (colors[v] == kColorF) {
            colors[v] = kColorC;
            std::vector<std::size_t> affected;
            for (Vertex a : g.neighbors(v)) {
                auto k = lay.clause_of(a);
                if (!k || *k == c) continue;
                if (colors[a] == kColorC) colors[a] = kColorF;
                if (colors[a + 1] == kColorF) colors[a + 1] = kColorC;
                affected.push_back(*k);
            }
            std::sort(affected.begin(), affected.end());
            affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
            for (std::size_t k : affected) {
                bool all_c = true;
                for (std::size_t i = 0; i < 3; ++i) all_c = all_c && colors[lay.b(k, i)] == kColorC;
                if (all_c) {
                    for (std::size_t i = 0; i < 3; ++i) {
                        if (colors[lay.literal(psi.clause(k)[i])] == kColorT) {
                            colors[lay.a(k, i)] = kColorC;
                            colors[lay.b(k, i)] = kColorF;
                            break;
                        }
                    }
                }
                ok = ok && recolor_triangle(colors, k, ge);
            }
        }
        ok = ok && complete_gadget(colors, c, ge);
    } else {
        // an edge touching the gadget of one clause
        const std::size_t c = *lay.clause_of(v);
        colors = base_coloring(c);
        bool satisfied = false;
        for (const auto& l : psi.clause(c)) satisfied = satisfied || colors[lay.literal(l)] == kColorT;
        if (satisfied) {
            ok = complete_gadget(colors, c, ge);
        } else {
            for (std::size_t i = 0; i < 3; ++i) {
                colors[lay.a(c, i)] = kColorC;
                colors[lay.b(c, i)] = kColorF;
            }
            const Vertex base = lay.a(c, 0);
            auto offset = [&](Vertex x) -> std::optional<std::size_t> {
                if (lay.clause_of(x) != c) return std::nullopt;
                return x - base;
            };
            const auto ou = offset(u), ov = offset(v);
            const bool u_tri = ou && *ou >= 6, v_tri = ov && *ov >= 6;
            if (u_tri && v_tri) {
                std::size_t i = *ou - 6, j = *ov - 6;
                colors[lay.t(c, i)] = kColorT;
                colors[lay.t(c, j)] = kColorT;
                colors[lay.t(c, 3 - i - j)] = kColorC;
            } else if (v_tri) {
                // b_i - t_i
                std::size_t i = *ov - 6;
                colors[lay.t(c, i)] = kColorF;
                bool first = true;
                for (std::size_t j = 0; j < 3; ++j) {
                    if (j == i) continue;
                    colors[lay.t(c, j)] = first ? kColorT : kColorC;
                    first = false;
                }
            } else {
                if (lay.is_literal(u)) {
                    colors[v] = kColorF; // a_i
                    colors[v + 1] = kColorC;
                } else if (u == lay.vs()) {
                    if (*ov % 2 == 0) {
                        colors[v] = kColorT;
                        colors[v + 1] = kColorC;
                    } else {
                        colors[v] = kColorT;
                    }
                } else {
                    colors[v] = kColorC; // a_i - b_i
                }
                ok = recolor_triangle(colors, c, ge);
            }
        }
    }
    Coloring out{colors};
    if (!ok || !is_proper_coloring(ge, out))
        throw std::logic_error("g_opt produced an improper coloring for edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return out;
}

Coloring GReduction::opt_vertex(Vertex v) const
{
    const auto& g = h_.graph;
    if (v >= g.vertex_count()) throw Error(ErrorKind::InvalidModification, "vertex out of range");
    if (g.degree(v) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
    auto c = opt_edge(v, g.neighbors(v).front());
    c.colors.erase(c.colors.begin() + static_cast<std::ptrdiff_t>(v));
    return c;
}

Graph g_transform(const CnfFormula& phi)
{
    return GReduction(phi).graph();
}

Coloring g_opt(const CnfFormula& phi, Vertex u, Vertex v)
{
    return GReduction(phi).opt_edge(u, v);
}

Coloring g_opt_vertex(const CnfFormula& phi, Vertex v)
{
    return GReduction(phi).opt_vertex(v);
}

// ---------------------------------------------------------------- joins

Graph join_lift(const Graph& g, std::size_t k)
{
    if (k < 4) throw Error(ErrorKind::KTooSmall, "join_lift needs k >= 4");
    return graph_join(g, make_clique(k - 3));
}

Graph theta_gadget(const Graph& g, const Graph& h)
{
    if (g.vertex_count() == 0 || h.vertex_count() == 0) throw Error(ErrorKind::EmptyInput, "theta_gadget needs nonempty graphs");
    const std::size_t n = std::max(g.vertex_count(), h.vertex_count());
    auto pad = [n](const Graph& x) { return disjoint_union(x, Graph(n + 1 - x.vertex_count())); };
    return graph_join(pad(g), pad(h));
}

// ---------------------------------------------------------------- vertex cover

Triangle VcInstance::clause_triangle(std::size_t clause) const
{
    if (clause >= m) throw Error(ErrorKind::NotATriangle, "no clause " + std::to_string(clause));
    Vertex base = 2 * n + 3 * clause;
    return {base, base + 1, base + 2};
}

std::size_t VcInstance::clause_of(const Triangle& t) const
{
    if (t.a < 2 * n || (t.a - 2 * n) % 3 != 0 || t.b != t.a + 1 || t.c != t.a + 2 || t.c >= 2 * n + 3 * m)
        throw Error(ErrorKind::NotATriangle, "not a clause triangle");
    return (t.a - 2 * n) / 3;
}

VcInstance vc_reduction(const CnfFormula& psi)
{
    require_e3cnf(psi, "vc_reduction");
    VcInstance out;
    out.n = psi.variable_count();
    out.m = psi.clause_count();
    out.k = out.n + 2 * out.m;
    Graph g(2 * out.n + 3 * out.m);
    for (Var x = 0; x < out.n; ++x) {
        g.set_role(2 * x, RoleTag::literal(x, false));
        g.set_role(2 * x + 1, RoleTag::literal(x, true));
        g.add_edge(2 * x, 2 * x + 1);
    }
    for (std::size_t k = 0; k < out.m; ++k) {
        auto t = out.clause_triangle(k);
        Vertex tv[3] = {t.a, t.b, t.c};
        for (std::size_t p = 0; p < 3; ++p) {
            g.set_role(tv[p], RoleTag::gadget(Role::T, k, p));
            g.add_edge(tv[p], tv[(p + 1) % 3]);
            const auto& l = psi.clause(k)[p];
            g.add_edge(tv[p], 2 * l.var + (l.negated ? 1 : 0));
        }
    }
    out.graph = std::move(g);
    return out;
}

VertexCover vc_triangle_opt(const CnfFormula& psi, const Triangle& t, const Assignment& alpha)
{
    require_e3cnf(psi, "vc_triangle_opt");
    VcInstance shape;
    shape.n = psi.variable_count();
    shape.m = psi.clause_count();
    const std::size_t deleted = shape.clause_of(t);
    if (!evaluate(without_clause(psi, deleted), alpha))
        throw Error(ErrorKind::NotSatisfying, "assignment does not satisfy the formula minus the triangle's clause");
    VertexCover cover;
    for (Var x = 0; x < shape.n; ++x) cover.push_back(2 * x + (alpha[x] ? 0 : 1));
    for (std::size_t k = 0; k < shape.m; ++k) {
        if (k == deleted) continue;
        std::size_t skip = 0;
        while (!alpha.satisfies(psi.clause(k)[skip])) ++skip;
        Vertex base = 2 * shape.n + 3 * k - (k > deleted ? 3 : 0);
        for (std::size_t p = 0; p < 3; ++p)
            if (p != skip) cover.push_back(base + p);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

VertexCover vc_triangle_opt(const FReduction& f, const Triangle& t)
{
    VcInstance shape;
    shape.n = f.output().variable_count();
    shape.m = f.output().clause_count();
    return vc_triangle_opt(f.output(), t, f.sat_witness(shape.clause_of(t)));
}

Graph delete_triangle(const Graph& g, const Triangle& t)
{
    return apply_modification(g, DeleteTriangle{t.a, t.b, t.c});
}

} // namespace neighborly
