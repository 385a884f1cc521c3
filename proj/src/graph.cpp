#include "neighborly/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "neighborly/error.hpp"

namespace neighborly {

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex v)
{
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<Vertex>& list, Vertex v)
{
    auto it = std::lower_bound(list.begin(), list.end(), v);
    list.erase(it);
}

bool is_plain(const RoleTag& t) { return t.role == Role::Plain; }

} // namespace

std::string to_string(const RoleTag& tag)
{
    switch (tag.role) {
    case Role::Plain: return "plain";
    case Role::VC: return "v_c";
    case Role::VS: return "v_s";
    case Role::PosLiteral: return "x" + std::to_string(tag.first);
    case Role::NegLiteral: return "~x" + std::to_string(tag.first);
    case Role::A: return "a" + std::to_string(tag.first) + "." + std::to_string(tag.second);
    case Role::B: return "b" + std::to_string(tag.first) + "." + std::to_string(tag.second);
    case Role::T: return "t" + std::to_string(tag.first) + "." + std::to_string(tag.second);
    }
    return "plain";
}

std::optional<RoleTag> parse_role_tag(const std::string& text)
{
    if (text == "plain") return RoleTag::plain();
    if (text == "v_c") return RoleTag::vc();
    if (text == "v_s") return RoleTag::vs();
    auto parse_num = [](std::string_view s) -> std::optional<std::size_t> {
        if (s.empty() || s.size() > 18) return std::nullopt;
        std::size_t value = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') return std::nullopt;
            value = value * 10 + static_cast<std::size_t>(ch - '0');
        }
        return value;
    };
    std::string_view s = text;
    if (s.starts_with("~x")) {
        if (auto v = parse_num(s.substr(2))) return RoleTag::literal(*v, true);
        return std::nullopt;
    }
    if (s.starts_with("x")) {
        if (auto v = parse_num(s.substr(1))) return RoleTag::literal(*v, false);
        return std::nullopt;
    }
    if (!s.empty() && (s[0] == 'a' || s[0] == 'b' || s[0] == 't')) {
        Role r = s[0] == 'a' ? Role::A : (s[0] == 'b' ? Role::B : Role::T);
        auto dot = s.find('.');
        if (dot == std::string_view::npos) return std::nullopt;
        auto c = parse_num(s.substr(1, dot - 1));
        auto p = parse_num(s.substr(dot + 1));
        if (!c || !p) return std::nullopt;
        return RoleTag::gadget(r, *c, *p);
    }
    return std::nullopt;
}

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges)
{
    Graph g(vertex_count);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v >= adjacency_.size())
        throw Error(ErrorKind::InvalidModification, "vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
    const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    Vertex other = &list == &adjacency_[u] ? v : u;
    return std::binary_search(list.begin(), list.end(), other);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex Graph::add_vertex(RoleTag tag)
{
    adjacency_.emplace_back();
    if (!is_plain(tag) || !roles_.empty()) {
        roles_.resize(adjacency_.size());
        roles_.back() = tag;
    }
    return adjacency_.size() - 1;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorKind::InvalidModification, "self-loop at " + std::to_string(u));
    if (has_edge(u, v))
        throw Error(ErrorKind::InvalidModification,
                    "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    if (!has_edge(u, v))
        throw Error(ErrorKind::InvalidModification,
                    "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    erase_sorted(adjacency_[u], v);
    erase_sorted(adjacency_[v], u);
    --edge_count_;
}

void Graph::remove_vertex(Vertex v)
{
    check_vertex(v);
    for (Vertex w : adjacency_[v]) erase_sorted(adjacency_[w], v);
    edge_count_ -= adjacency_[v].size();
    adjacency_.erase(adjacency_.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& list : adjacency_)
        for (auto& w : list)
            if (w > v) --w;
    if (!roles_.empty()) roles_.erase(roles_.begin() + static_cast<std::ptrdiff_t>(v));
}

const RoleTag& Graph::role(Vertex v) const
{
    static const RoleTag plain_tag{};
    if (v >= roles_.size()) return plain_tag;
    return roles_[v];
}

void Graph::set_role(Vertex v, RoleTag tag)
{
    check_vertex(v);
    if (roles_.empty() && is_plain(tag)) return;
    roles_.resize(adjacency_.size());
    roles_[v] = tag;
}

bool Graph::has_roles() const
{
    return std::any_of(roles_.begin(), roles_.end(), [](const RoleTag& t) { return !is_plain(t); });
}

bool Graph::operator==(const Graph& other) const
{
    if (adjacency_ != other.adjacency_) return false;
    for (Vertex v = 0; v < adjacency_.size(); ++v)
        if (!(role(v) == other.role(v))) return false;
    return true;
}

ModificationKind kind_of(const Modification& m)
{
    return static_cast<ModificationKind>(m.index());
}

std::string to_string(ModificationKind kind)
{
    switch (kind) {
    case ModificationKind::AddVertex: return "add-vertex";
    case ModificationKind::DeleteVertex: return "delete-vertex";
    case ModificationKind::AddEdge: return "add-edge";
    case ModificationKind::DeleteEdge: return "delete-edge";
    case ModificationKind::DeleteTriangle: return "delete-triangle";
    case ModificationKind::DeleteClause: return "delete-clause";
    }
    return "unknown";
}

std::string to_string(const Modification& m)
{
    std::ostringstream os;
    os << to_string(kind_of(m));
    std::visit(
        [&os](const auto& mod) {
            using T = std::decay_t<decltype(mod)>;
            if constexpr (std::is_same_v<T, AddVertex>) {
                os << " [";
                for (std::size_t i = 0; i < mod.neighbors.size(); ++i) os << (i ? "," : "") << mod.neighbors[i];
                os << "]";
            } else if constexpr (std::is_same_v<T, DeleteVertex>) {
                os << " " << mod.v;
            } else if constexpr (std::is_same_v<T, AddEdge> || std::is_same_v<T, DeleteEdge>) {
                os << " " << mod.u << " " << mod.v;
            } else if constexpr (std::is_same_v<T, DeleteTriangle>) {
                os << " " << mod.u << " " << mod.v << " " << mod.w;
            } else {
                os << " " << mod.index;
            }
        },
        m);
    return os.str();
}

Graph apply_modification(const Graph& g, const Modification& m)
{
    Graph out = g;
    std::visit(
        [&](const auto& mod) {
            using T = std::decay_t<decltype(mod)>;
            if constexpr (std::is_same_v<T, AddVertex>) {
                auto nbrs = mod.neighbors;
                std::sort(nbrs.begin(), nbrs.end());
                if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                    throw Error(ErrorKind::InvalidModification, "repeated neighbor in add-vertex");
                for (Vertex w : nbrs)
                    if (w >= g.vertex_count())
                        throw Error(ErrorKind::InvalidModification, "add-vertex neighbor out of range");
                Vertex v = out.add_vertex();
                for (Vertex w : nbrs) out.add_edge(v, w);
            } else if constexpr (std::is_same_v<T, DeleteVertex>) {
                out.remove_vertex(mod.v);
            } else if constexpr (std::is_same_v<T, AddEdge>) {
                out.add_edge(mod.u, mod.v);
            } else if constexpr (std::is_same_v<T, DeleteEdge>) {
                out.remove_edge(mod.u, mod.v);
            } else if constexpr (std::is_same_v<T, DeleteTriangle>) {
                if (!g.has_edge(mod.u, mod.v) || !g.has_edge(mod.v, mod.w) || !g.has_edge(mod.u, mod.w))
                    throw Error(ErrorKind::InvalidModification, "vertices do not form a triangle");
                std::vector<Vertex> vs{mod.u, mod.v, mod.w};
                std::sort(vs.begin(), vs.end(), std::greater<>());
                for (Vertex v : vs) out.remove_vertex(v);
            } else {
                throw Error(ErrorKind::InvalidModification, "delete-clause does not apply to graphs");
            }
        },
        m);
    return out;
}

Neighborhoods neighborhoods(const Graph& g, Vertex x)
{
    if (x >= g.vertex_count()) throw Error(ErrorKind::InvalidModification, "vertex out of range");
    Neighborhoods n;
    n.open = g.neighbors(x);
    n.closed = n.open;
    insert_sorted(n.closed, x);
    return n;
}

bool is_universal_edge(const Graph& g, Vertex u, Vertex v)
{
    if (!g.has_edge(u, v))
        throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "}");
    // |N(u) ∪ N(v)| must cover all n vertices (u and v are in each other's lists).
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < nu.size() && j < nv.size();) {
        if (nu[i] == nv[j]) { ++common; ++i; ++j; }
        else if (nu[i] < nv[j]) ++i;
        else ++j;
    }
    return nu.size() + nv.size() - common == g.vertex_count();
}

bool is_universal_edged(const Graph& g)
{
    for (const auto& e : g.edges())
        if (!is_universal_edge(g, e.u, e.v)) return false;
    return true;
}

std::optional<NonUniversalWitness> find_non_universal(const Graph& g)
{
    for (const auto& e : g.edges()) {
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            if (x == e.u || x == e.v) continue;
            if (!g.has_edge(x, e.u) && !g.has_edge(x, e.v)) return NonUniversalWitness{e, x};
        }
    }
    return std::nullopt;
}

bool is_universal_vertex(const Graph& g, Vertex v)
{
    return g.degree(v) + 1 == g.vertex_count();
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.a : parts.b).push_back(v);
    return parts;
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    Graph out = g1;
    const std::size_t offset = g1.vertex_count();
    for (Vertex v = 0; v < g2.vertex_count(); ++v) out.add_vertex(g2.role(v));
    for (const auto& e : g2.edges()) out.add_edge(e.u + offset, e.v + offset);
    return out;
}

Graph graph_join(const Graph& g1, const Graph& g2)
{
    Graph out = disjoint_union(g1, g2);
    const std::size_t offset = g1.vertex_count();
    for (Vertex a = 0; a < g1.vertex_count(); ++a)
        for (Vertex b = 0; b < g2.vertex_count(); ++b) out.add_edge(a, b + offset);
    return out;
}

Graph make_clique(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_cycle(std::size_t n)
{
    Graph g(n);
    if (n < 3) return make_path(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_path(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complement(const Graph& g)
{
    Graph out(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        out.set_role(u, g.role(u));
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep)
{
    std::vector<std::size_t> index(g.vertex_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    Graph out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.set_role(i, g.role(keep[i]));
        for (Vertex w : g.neighbors(keep[i])) {
            std::size_t j = index[w];
            if (j != static_cast<std::size_t>(-1) && i < j) out.add_edge(i, j);
        }
    }
    return out;
}

std::vector<Triangle> enumerate_triangles(const Graph& g)
{
    std::vector<Triangle> out;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        const auto& na = g.neighbors(a);
        for (auto ib = std::upper_bound(na.begin(), na.end(), a); ib != na.end(); ++ib) {
            for (auto ic = std::next(ib); ic != na.end(); ++ic)
                if (g.has_edge(*ib, *ic)) out.push_back({a, *ib, *ic});
        }
    }
    return out;
}

bool is_complete(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g)
{
    // Non-adjacency must be an equivalence relation.
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> part(n, static_cast<std::size_t>(-1));
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] != static_cast<std::size_t>(-1)) continue;
        part[v] = parts.size();
        parts.push_back({v});
        for (Vertex w = v + 1; w < n; ++w) {
            if (!g.has_edge(v, w)) {
                if (part[w] != static_cast<std::size_t>(-1)) return std::nullopt;
                part[w] = part[v];
                parts.back().push_back(w);
            }
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
            if ((part[u] == part[w]) == g.has_edge(u, w)) return std::nullopt;
    return parts;
}

} // namespace neighborly
