#include "neighborly/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "neighborly/error.hpp"

namespace neighborly::io {

namespace {

constexpr int kBias = 63;

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_size(std::string_view tok, std::size_t line, std::size_t col)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected non-negative integer, got '" + std::string(tok) + "'", line, col);
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int value = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text)
{
    text = trim(text);
    auto byte_at = [&](std::size_t pos) -> int {
        if (pos >= text.size()) throw ParseError("graph6 string truncated", 1, pos + 1);
        int c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > 126) throw ParseError("invalid graph6 byte", 1, pos + 1);
        return c - kBias;
    };
    std::size_t pos = 0;
    std::size_t n = 0;
    if (text.empty()) throw ParseError("empty graph6 string", 1, 1);
    if (text[0] != '~') {
        n = static_cast<std::size_t>(byte_at(0));
        pos = 1;
    } else if (text.size() > 1 && text[1] != '~') {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(byte_at(i));
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(byte_at(i));
        pos = 8;
    }
    const std::size_t bit_count = n * (n == 0 ? 0 : n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() != pos + byte_count)
        throw ParseError("graph6 length mismatch for n=" + std::to_string(n), 1, std::min(text.size(), pos + byte_count) + 1);
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph> read_graph6_stream(std::string_view text)
{
    std::vector<Graph> out;
    std::size_t line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        line = trim(line);
        if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("graph6 stream", line_no, e.column());
        }
    }
    return out;
}

std::string to_dimacs_graph(const Graph& g)
{
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

Graph from_dimacs_graph(std::string_view text)
{
    std::optional<Graph> g;
    std::size_t declared_edges = 0;
    std::size_t line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (g) throw ParseError("duplicate problem line", line_no, 1);
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError("expected 'p edge n m'", line_no, 1);
            g.emplace(parse_size(tok[2], line_no, 1));
            declared_edges = parse_size(tok[3], line_no, 1);
        } else if (tok[0] == "e") {
            if (!g) throw ParseError("edge before problem line", line_no, 1);
            if (tok.size() != 3) throw ParseError("expected 'e u v'", line_no, 1);
            auto u = parse_size(tok[1], line_no, 3);
            auto v = parse_size(tok[2], line_no, 3);
            if (u == 0 || v == 0 || u > g->vertex_count() || v > g->vertex_count())
                throw ParseError("vertex out of range", line_no, 3);
            if (u == v || g->has_edge(u - 1, v - 1)) throw ParseError("self-loop or duplicate edge", line_no, 1);
            g->add_edge(u - 1, v - 1);
        } else {
            throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no, 1);
        }
    }
    if (!g) throw ParseError("missing problem line", line_no, 1);
    if (g->edge_count() != declared_edges)
        throw ParseError("edge count mismatch: declared " + std::to_string(declared_edges), line_no, 1);
    return *g;
}

std::string to_json(const Graph& g)
{
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    auto roles = nlohmann::ordered_json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.role(v).role != Role::Plain) roles[std::to_string(v)] = to_string(g.role(v));
    j["roles"] = std::move(roles);
    return j.dump();
}

Graph from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, col);
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            throw ParseError("expected object with 'n' and 'edges'", 1, 1);
        Graph g(j.at("n").get<std::size_t>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u, v]", 1, 1);
            auto u = e[0].get<std::size_t>();
            auto v = e[1].get<std::size_t>();
            if (u >= g.vertex_count() || v >= g.vertex_count() || u == v || g.has_edge(u, v))
                throw ParseError("invalid edge [" + std::to_string(u) + "," + std::to_string(v) + "]", 1, 1);
            g.add_edge(u, v);
        }
        if (j.contains("roles")) {
            for (const auto& [key, value] : j.at("roles").items()) {
                auto v = std::stoul(key);
                auto tag = parse_role_tag(value.get<std::string>());
                if (!tag || v >= g.vertex_count()) throw ParseError("invalid role entry '" + key + "'", 1, 1);
                g.set_role(v, *tag);
            }
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 1, 1);
    } catch (const std::logic_error& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

GraphFormat detect_graph_format(std::string_view text)
{
    auto t = trim(text);
    if (t.starts_with("{")) return GraphFormat::Json;
    if (t.starts_with("p ") || t.starts_with("c") || t.starts_with("e ")) return GraphFormat::Dimacs;
    return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    switch (format) {
    case GraphFormat::Graph6: return from_graph6(text);
    case GraphFormat::Dimacs: return from_dimacs_graph(text);
    case GraphFormat::Json: return from_json(text);
    }
    return from_graph6(text);
}

Graph parse_graph(std::string_view text)
{
    return parse_graph(text, detect_graph_format(text));
}

std::string emit_graph(const Graph& g, GraphFormat format)
{
    switch (format) {
    case GraphFormat::Graph6: return to_graph6(g) + "\n";
    case GraphFormat::Dimacs: return to_dimacs_graph(g);
    case GraphFormat::Json: return to_json(g) + "\n";
    }
    return to_graph6(g) + "\n";
}

} // namespace neighborly::io
