#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "neighborly/cnf.hpp"
#include "neighborly/corpus.hpp"
#include "neighborly/criticality.hpp"
#include "neighborly/error.hpp"
#include "neighborly/graph_io.hpp"
#include "neighborly/oracle.hpp"
#include "neighborly/reductions.hpp"
#include "neighborly/solvers.hpp"
#include "neighborly/verify.hpp"

using namespace neighborly;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kTimeout = 4 };

struct RunConfig {
    std::string kind;
    std::vector<std::string> inputs;
    std::string output;
    std::optional<std::uint64_t> seed;
    std::size_t max_vertices = 7;
    std::size_t max_clauses = 4;
    std::optional<std::size_t> vertices;
    std::optional<long> time_budget_ms;
    std::optional<std::size_t> query_budget;
    std::string format = "json";
    std::size_t k = 0;
    std::string mode = "edge";
};

std::uint64_t resolve_seed(const RunConfig& cfg)
{
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("NEIGHBORLY_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("NEIGHBORLY_SEED is not an unsigned integer", 1, 1);
        }
    }
    return 42;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::EmptyInput, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string only_input(const RunConfig& cfg)
{
    if (cfg.inputs.size() != 1) throw Error(ErrorKind::EmptyInput, "expected exactly one input");
    return read_input(cfg.inputs.front());
}

io::GraphFormat graph_format(const std::string& name)
{
    if (name == "graph6") return io::GraphFormat::Graph6;
    if (name == "dimacs") return io::GraphFormat::Dimacs;
    return io::GraphFormat::Json;
}

class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error(ErrorKind::EmptyInput, "cannot write '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Witness lines go next to the instance when it is written to a file, and
// after it on stdout otherwise.
void write_instance(const RunConfig& cfg, const std::string& instance, const std::vector<std::string>& witnesses)
{
    Sink sink(cfg.output);
    sink.out() << instance;
    if (!instance.empty() && instance.back() != '\n') sink.out() << '\n';
    if (witnesses.empty()) return;
    if (cfg.output.empty()) {
        for (const auto& w : witnesses) std::cout << w << '\n';
        return;
    }
    Sink wsink(cfg.output + ".witnesses.jsonl");
    for (const auto& w : witnesses) wsink.out() << w << '\n';
}

json colors_json(const Coloring& c)
{
    return json(c.colors);
}

json cover_json(const VertexCover& c)
{
    return json(c);
}

json solution_json(const Solution& s)
{
    return std::holds_alternative<Coloring>(s) ? colors_json(std::get<Coloring>(s))
                                               : cover_json(std::get<VertexCover>(s));
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const RunConfig& cfg)
{
    const auto fmt = graph_format(cfg.format);
    std::vector<std::string> witnesses;
    if (cfg.kind == "pw") {
        const auto phi = parse_dimacs_cnf(only_input(cfg));
        auto out = pw_transform(phi);
        for (std::size_t c = 0; c < out.formula.clause_count(); ++c)
            witnesses.push_back(witness_json(c, pw_witness(phi, c)));
        write_instance(cfg, to_dimacs_cnf(out.formula), witnesses);
    } else if (cfg.kind == "f") {
        FReduction fr(parse_dimacs_cnf(only_input(cfg)));
        for (std::size_t c = 0; c < fr.output().clause_count(); ++c)
            witnesses.push_back(witness_json(c, fr.sat_witness(c)));
        write_instance(cfg, to_dimacs_cnf(fr.output()), witnesses);
    } else if (cfg.kind == "cai-meyer") {
        auto h = cai_meyer_graph(parse_dimacs_cnf(only_input(cfg)), true);
        write_instance(cfg, io::emit_graph(h.graph, fmt), {});
    } else if (cfg.kind == "g") {
        GReduction gr(parse_dimacs_cnf(only_input(cfg)));
        for (const auto& e : gr.graph().edges()) {
            json w;
            w["deleted"] = to_string(Modification{DeleteEdge{e.u, e.v}});
            w["coloring"] = colors_json(gr.opt_edge(e.u, e.v));
            witnesses.push_back(w.dump());
        }
        write_instance(cfg, io::emit_graph(gr.graph(), fmt), witnesses);
    } else if (cfg.kind == "join-lift") {
        write_instance(cfg, io::emit_graph(join_lift(io::parse_graph(only_input(cfg)), cfg.k ? cfg.k : 4), fmt), {});
    } else if (cfg.kind == "vc") {
        FReduction fr(parse_dimacs_cnf(only_input(cfg)));
        auto vc = vc_reduction(fr.output());
        for (std::size_t c = 0; c < vc.m; ++c) {
            const auto t = vc.clause_triangle(c);
            json w;
            w["triangle"] = {t.a, t.b, t.c};
            w["cover"] = cover_json(vc_triangle_opt(fr, t));
            witnesses.push_back(w.dump());
        }
        std::string instance = io::emit_graph(vc.graph, fmt);
        if (fmt == io::GraphFormat::Json) {
            json j = json::parse(instance);
            j["k"] = vc.k;
            instance = j.dump();
        }
        write_instance(cfg, instance, witnesses);
    } else if (cfg.kind == "theta") {
        if (cfg.inputs.size() != 2) throw Error(ErrorKind::EmptyInput, "theta needs two graph inputs");
        Graph f = theta_gadget(io::parse_graph(read_input(cfg.inputs[0])), io::parse_graph(read_input(cfg.inputs[1])));
        write_instance(cfg, io::emit_graph(f, fmt), {});
    } else {
        throw Error(ErrorKind::InvalidModification, "unknown reduction '" + cfg.kind + "'");
    }
    return kOk;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const RunConfig& cfg)
{
    Sink sink(cfg.output);
    auto& os = sink.out();
    if (cfg.kind == "sat") {
        auto a = sat_solve(parse_dimacs_cnf(only_input(cfg)));
        if (!a) {
            os << "s UNSATISFIABLE\n";
            return kOk;
        }
        os << "s SATISFIABLE\nv";
        for (Var v = 0; v < a->size(); ++v) os << ' ' << ((*a)[v] ? "" : "-") << v + 1;
        os << " 0\n";
    } else if (cfg.kind == "chromatic") {
        Graph g = io::parse_graph(only_input(cfg));
        if (g.vertex_count() == 0) {
            os << "chi 0\ncoloring\n";
            return kOk;
        }
        auto r = chromatic_number(g);
        os << "chi " << r.chi << "\ncoloring";
        for (auto c : r.coloring.colors) os << ' ' << c;
        os << '\n';
    } else if (cfg.kind == "vc") {
        auto c = min_vertex_cover(io::parse_graph(only_input(cfg)));
        os << "beta " << c.size() << "\ncover";
        for (auto v : c) os << ' ' << v;
        os << '\n';
    } else {
        throw Error(ErrorKind::InvalidModification, "unknown problem '" + cfg.kind + "'");
    }
    return kOk;
}

// ---------------------------------------------------------------- oracle-run

int cmd_oracle_run(const RunConfig& cfg)
{
    const Graph g = io::parse_graph(only_input(cfg));
    Sink sink(cfg.output);
    auto& os = sink.out();
    auto report = [&](const Solution& s, const NeighborOracle* o) {
        os << "value " << solution_size(s) << "\nsolution " << solution_json(s).dump() << '\n';
        if (o) os << "queries " << o->query_count() << '\n' << o->transcript().to_json_lines();
    };
    auto chain_report = [&](const ChainResult& r) {
        os << "value " << solution_size(r.solution) << "\nsolution " << solution_json(r.solution).dump() << "\nsteps "
           << r.steps.size() << '\n';
        for (const auto& m : r.steps) os << to_string(m) << '\n';
    };
    const std::size_t budget = cfg.query_budget.value_or(2);
    const std::string& a = cfg.kind;
    if (a == "colorer") {
        NeighborOracle o(Problem::Coloring, ModificationKind::AddEdge, budget);
        report(colorer(g, o), &o);
    } else if (a == "subcol") {
        if (cfg.k == 0) throw Error(ErrorKind::KTooSmall, "subcol needs --k");
        auto c = subcol(g, cfg.k);
        if (!c) os << "not " << cfg.k << "-colorable\n";
        else report(*c, nullptr);
    } else if (a == "vc-vertex-del") {
        NeighborOracle o(Problem::VertexCover, ModificationKind::DeleteVertex, budget);
        report(vc_from_vertex_deletion(g, o), &o);
    } else if (a == "vc-edge-add") {
        NeighborOracle o(Problem::VertexCover, ModificationKind::AddEdge, budget);
        report(vc_from_edge_addition(g, o), &o);
    } else if (a == "isolated-coloring" || a == "isolated-vc") {
        const Problem p = a == "isolated-coloring" ? Problem::Coloring : Problem::VertexCover;
        NeighborOracle o(p, ModificationKind::AddVertex, cfg.query_budget.value_or(1));
        report(solve_by_added_isolated_vertex(g, p, o), &o);
    } else if (a == "chain-coloring-add-edge") {
        chain_report(coloring_add_edge_chain(g));
    } else if (a == "chain-vc-delete-vertex") {
        chain_report(cover_delete_vertex_chain(g));
    } else if (a == "chain-vc-add-edge") {
        chain_report(cover_add_edge_chain(g));
    } else {
        throw Error(ErrorKind::InvalidModification, "unknown algorithm '" + a + "'");
    }
    return kOk;
}

// ---------------------------------------------------------------- recognize / catalog

std::vector<Graph> graph_stream(const std::string& text)
{
    const auto fmt = io::detect_graph_format(text);
    if (fmt == io::GraphFormat::Graph6) return io::read_graph6_stream(text);
    return {io::parse_graph(text, fmt)};
}

int cmd_recognize(const RunConfig& cfg)
{
    Sink sink(cfg.output);
    auto& os = sink.out();
    const std::string text = only_input(cfg);
    if (cfg.kind == "minimal-unsat") {
        auto r = is_minimal_unsat(parse_dimacs_cnf(text));
        os << (r.verdict ? "true" : "false") << ' ' << r.to_json() << '\n';
        os << "summary: 1 formulas, " << (r.verdict ? 1 : 0) << " true\n";
        return kOk;
    }
    if (cfg.mode != "edge" && cfg.mode != "vertex") throw Error(ErrorKind::InvalidModification, "mode must be edge or vertex");
    const Mode mode = cfg.mode == "edge" ? Mode::Edge : Mode::Vertex;
    std::size_t count = 0, yes = 0;
    for (const auto& g : graph_stream(text)) {
        ++count;
        bool verdict = false;
        std::string detail;
        if (cfg.kind == "minimally-uncolorable") {
            auto r = is_minimally_k_uncolorable(g, cfg.k ? cfg.k : 3, mode);
            verdict = r.verdict;
            detail = r.to_json();
        } else if (cfg.kind == "chi-critical") {
            auto r = is_chi_critical(g, mode);
            verdict = r.verdict;
            detail = r.to_json();
        } else if (cfg.kind == "beta-critical") {
            auto r = is_beta_critical(g, mode);
            verdict = r.verdict;
            detail = r.to_json();
        } else if (cfg.kind == "beta-stable") {
            verdict = is_beta_stable(g);
        } else {
            throw Error(ErrorKind::InvalidModification, "unknown notion '" + cfg.kind + "'");
        }
        if (verdict) ++yes;
        os << io::to_graph6(g) << ' ' << (verdict ? "true" : "false");
        if (!detail.empty()) os << ' ' << detail;
        os << '\n';
    }
    os << "summary: " << count << " graphs, " << yes << " true, " << count - yes << " false\n";
    return kOk;
}

int cmd_catalog(const RunConfig& cfg)
{
    if (cfg.kind != "beta-stable") throw Error(ErrorKind::InvalidModification, "unknown catalog '" + cfg.kind + "'");
    std::vector<Graph> graphs;
    if (!cfg.inputs.empty()) {
        graphs = graph_stream(only_input(cfg));
    } else {
        const std::size_t lo = cfg.vertices.value_or(0), hi = cfg.vertices.value_or(cfg.max_vertices);
        if (hi > 8) throw Error(ErrorKind::InvalidModification, "catalog enumerates at most 8 vertices");
        for (std::size_t n = lo; n <= hi; ++n) {
            auto classes = corpus::nonisomorphic_graphs(n);
            graphs.insert(graphs.end(), classes.begin(), classes.end());
        }
    }
    const auto stable = find_beta_stable_graphs(graphs);
    Sink sink(cfg.output);
    for (const auto& g : stable) sink.out() << io::to_graph6(g) << '\n';
    sink.out() << "summary: " << graphs.size() << " graphs, " << stable.size() << " beta-stable\n";
    return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg)
{
    verify::Config vc;
    vc.seed = resolve_seed(cfg);
    vc.max_vertices = cfg.max_vertices;
    vc.max_clauses = cfg.max_clauses;
    vc.chain_max_vertices = std::min(vc.chain_max_vertices, cfg.max_vertices);
    vc.join_max_vertices = std::min(vc.join_max_vertices, cfg.max_vertices);
    vc.theta_max_vertices = std::min(vc.theta_max_vertices, std::max<std::size_t>(cfg.max_vertices, 1));
    if (cfg.query_budget) vc.query_budget = *cfg.query_budget;
    auto results = verify::run(verify::parse_suite(cfg.kind), vc);
    Sink sink(cfg.output);
    sink.out() << verify::render(results, vc);
    return verify::all_passed(results) ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Neighbor-oracle reductions, solvers and recognizers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "corpus seed (default: NEIGHBORLY_SEED, then 42)");
        sub->add_option("--max-vertices", cfg.max_vertices, "largest corpus graph")->capture_default_str();
        sub->add_option("--max-clauses", cfg.max_clauses, "largest corpus formula")->capture_default_str();
        sub->add_option("--time-budget-ms", cfg.time_budget_ms, "per-solve wall-clock limit");
        sub->add_option("--query-budget", cfg.query_budget, "oracle query limit");
        sub->add_option("--format", cfg.format, "graph output format")
            ->check(CLI::IsMember({"graph6", "dimacs", "json"}))
            ->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "output path (default: stdout)");
    };

    auto* reduce = app.add_subcommand("reduce", "build a reduction instance and its witnesses");
    reduce->add_option("kind", cfg.kind)->required()->check(
        CLI::IsMember({"pw", "f", "cai-meyer", "g", "join-lift", "vc", "theta"}));
    reduce->add_option("inputs", cfg.inputs, "CNF (DIMACS) or graph (graph6/DIMACS/JSON); '-' for stdin")->required();
    reduce->add_option("--k", cfg.k, "target color count for join-lift (default 4)");
    common(reduce);

    auto* solve = app.add_subcommand("solve", "exact solvers");
    solve->add_option("problem", cfg.kind)->required()->check(CLI::IsMember({"chromatic", "vc", "sat"}));
    solve->add_option("inputs", cfg.inputs)->required();
    common(solve);

    auto* oracle = app.add_subcommand("oracle-run", "run an oracle algorithm and print its transcript");
    oracle->add_option("algorithm", cfg.kind)->required()->check(CLI::IsMember(
        {"colorer", "subcol", "vc-vertex-del", "vc-edge-add", "isolated-coloring", "isolated-vc",
         "chain-coloring-add-edge", "chain-vc-delete-vertex", "chain-vc-add-edge"}));
    oracle->add_option("inputs", cfg.inputs)->required();
    oracle->add_option("--k", cfg.k, "color bound for subcol");
    common(oracle);

    auto* recognize = app.add_subcommand("recognize", "minimality and criticality verdicts");
    recognize->add_option("notion", cfg.kind)->required()->check(CLI::IsMember(
        {"minimal-unsat", "minimally-uncolorable", "chi-critical", "beta-critical", "beta-stable"}));
    recognize->add_option("inputs", cfg.inputs, "DIMACS CNF, a graph, or a graph6 stream")->required();
    recognize->add_option("--k", cfg.k, "k for minimally-uncolorable (default 3)");
    recognize->add_option("--mode", cfg.mode, "edge or vertex deletion")->capture_default_str();
    common(recognize);

    auto* catalog = app.add_subcommand("catalog", "list graphs with a property");
    catalog->add_option("notion", cfg.kind)->required()->check(CLI::IsMember({"beta-stable"}));
    catalog->add_option("inputs", cfg.inputs, "graph6 stream (default: all graphs up to --max-vertices)");
    catalog->add_option("--vertices", cfg.vertices, "enumerate exactly this many vertices");
    common(catalog);

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("suite", cfg.kind)->required()->check(CLI::IsMember(
        {"sat-witness", "coloring-witness", "vc-witness", "oracle-budgets", "criticality-crosschecks", "all"}));
    common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (cfg.time_budget_ms) set_default_time_budget(std::chrono::milliseconds(*cfg.time_budget_ms));
        if (reduce->parsed()) return cmd_reduce(cfg);
        if (solve->parsed()) return cmd_solve(cfg);
        if (oracle->parsed()) return cmd_oracle_run(cfg);
        if (recognize->parsed()) return cmd_recognize(cfg);
        if (catalog->parsed()) return cmd_catalog(cfg);
        return cmd_verify(cfg);
    } catch (const ParseError& e) {
        std::cerr << "neighborly: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        std::cerr << "neighborly: " << e.what() << '\n';
        if (e.kind() == ErrorKind::Timeout) return kTimeout;
        if (e.kind() == ErrorKind::OracleBudgetExceeded) return kFailure;
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "neighborly: " << e.what() << '\n';
        return kPrecondition;
    }
}
