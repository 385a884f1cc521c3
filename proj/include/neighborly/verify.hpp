#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neighborly/graph.hpp"

namespace neighborly::verify {

enum class Suite { SatWitness, ColoringWitness, VcWitness, OracleBudgets, CriticalityCrosschecks, All };

std::string to_string(Suite s);
/// Accepts the CLI names; throws std::invalid_argument otherwise.
Suite parse_suite(const std::string& name);

struct Config {
    std::uint64_t seed = 42;
    std::size_t formulas = 50;          // sat-witness corpus size
    std::size_t witness_formulas = 20;  // coloring- and vc-witness prefix of the corpus
    std::size_t max_vars = 6;
    std::size_t max_clauses = 4;
    std::size_t max_vertices = 7;       // oracle and criticality graph corpus
    std::size_t chain_max_vertices = 6;
    std::size_t join_max_vertices = 6;
    std::size_t minimal_unsat = 5;
    std::size_t theta_pairs = 50;
    std::size_t theta_max_vertices = 5;
    std::size_t query_budget = 2;
};

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples; // first few failures
    std::string detail;

    PropertyResult(std::string n = {}) : name(std::move(n)) {}

    bool passed() const { return failures == 0 && checked > 0; }
    void fail(std::string what);
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
    const PropertyResult* find(const std::string& name) const;
};

std::vector<SuiteResult> run(Suite suite, const Config& cfg);

/// Plain-text report: one line per property, counterexamples indented below,
/// and a final summary line. Contains nothing run-dependent besides results.
std::string render(const std::vector<SuiteResult>& results, const Config& cfg);

bool all_passed(const std::vector<SuiteResult>& results);

/// Labeled graphs for n <= 6, one per isomorphism class above that.
std::vector<Graph> small_graph_corpus(std::size_t max_vertices);

} // namespace neighborly::verify
