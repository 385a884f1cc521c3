#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace neighborly {

using Vertex = std::size_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

enum class Role : std::uint8_t { Plain, VC, VS, PosLiteral, NegLiteral, A, B, T };

/// Tag attached to vertices of constructed graphs. Literal roles use `first`
/// for the variable; gadget roles (A, B, T) use `first` for the clause and
/// `second` for the 0-based literal position inside it.
struct RoleTag {
    Role role = Role::Plain;
    std::size_t first = 0;
    std::size_t second = 0;

    static RoleTag plain() { return {}; }
    static RoleTag vc() { return {Role::VC, 0, 0}; }
    static RoleTag vs() { return {Role::VS, 0, 0}; }
    static RoleTag literal(std::size_t var, bool negated)
    {
        return {negated ? Role::NegLiteral : Role::PosLiteral, var, 0};
    }
    static RoleTag gadget(Role r, std::size_t clause, std::size_t pos) { return {r, clause, pos}; }

    bool operator==(const RoleTag&) const = default;
};

std::string to_string(const RoleTag& tag);
/// Inverse of to_string; returns nullopt on malformed text.
std::optional<RoleTag> parse_role_tag(const std::string& text);

/// Simple undirected graph on the dense vertex set [0, vertex_count).
///
/// Adjacency lists are kept sorted, so iteration order is deterministic and
/// equality is structural. Role tags are optional; a graph without any
/// non-plain tag compares equal to the same graph with all-plain tags.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    static Graph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    Vertex add_vertex(RoleTag tag = RoleTag::plain());
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    /// Removes v and its incident edges; ids above v shift down by one and
    /// role tags move with their vertices.
    void remove_vertex(Vertex v);

    const RoleTag& role(Vertex v) const;
    void set_role(Vertex v, RoleTag tag);
    bool has_roles() const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<RoleTag> roles_;
    std::size_t edge_count_ = 0;
};

// Local modifications of an instance. DeleteClause only applies to formulas
// and is rejected by apply_modification on graphs.
struct AddVertex {
    std::vector<Vertex> neighbors;

    bool operator==(const AddVertex&) const = default;
};
struct DeleteVertex {
    Vertex v;

    bool operator==(const DeleteVertex&) const = default;
};
struct AddEdge {
    Vertex u;
    Vertex v;

    bool operator==(const AddEdge&) const = default;
};
struct DeleteEdge {
    Vertex u;
    Vertex v;

    bool operator==(const DeleteEdge&) const = default;
};
/// Deletes the three vertices of a triangle (and thereby its edges).
struct DeleteTriangle {
    Vertex u;
    Vertex v;
    Vertex w;

    bool operator==(const DeleteTriangle&) const = default;
};
struct DeleteClause {
    std::size_t index;

    bool operator==(const DeleteClause&) const = default;
};

using Modification = std::variant<AddVertex, DeleteVertex, AddEdge, DeleteEdge, DeleteTriangle, DeleteClause>;

enum class ModificationKind { AddVertex, DeleteVertex, AddEdge, DeleteEdge, DeleteTriangle, DeleteClause };

ModificationKind kind_of(const Modification& m);
std::string to_string(ModificationKind kind);
std::string to_string(const Modification& m);

/// Applies m to g. Throws Error(InvalidModification) when m references
/// missing vertices/edges or would duplicate an edge.
Graph apply_modification(const Graph& g, const Modification& m);

struct Neighborhoods {
    std::vector<Vertex> open;
    std::vector<Vertex> closed;
};

Neighborhoods neighborhoods(const Graph& g, Vertex x);

/// True iff every vertex outside {u, v} is adjacent to u or to v.
/// Throws Error(NotAnEdge) if {u, v} is not an edge.
bool is_universal_edge(const Graph& g, Vertex u, Vertex v);
/// True iff all edges are universal; vacuously true for edgeless graphs.
bool is_universal_edged(const Graph& g);
/// First non-universal witness in lexicographic (edge, vertex) order.
struct NonUniversalWitness {
    Edge edge;
    Vertex x;
};
std::optional<NonUniversalWitness> find_non_universal(const Graph& g);

/// Vertex adjacent to all other vertices.
bool is_universal_vertex(const Graph& g, Vertex v);

struct Bipartition {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

/// Breadth-first 2-coloring; the smallest vertex of each component goes to
/// part a. Returns nullopt iff g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Disjoint union with g2 shifted by |V(g1)|, plus all cross edges.
Graph graph_join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph make_clique(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_path(std::size_t n);
Graph complement(const Graph& g);

/// Induced subgraph on `keep` (sorted, distinct); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

struct Triangle {
    Vertex a;
    Vertex b;
    Vertex c;
    auto operator<=>(const Triangle&) const = default;
};

/// All triangles with a < b < c, lexicographically ordered.
std::vector<Triangle> enumerate_triangles(const Graph& g);

bool is_complete(const Graph& g);
/// Complement is a disjoint union of cliques; returns the parts in order of
/// their smallest vertex, or nullopt.
std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g);

} // namespace neighborly
