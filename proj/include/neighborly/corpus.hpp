#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "neighborly/cnf.hpp"
#include "neighborly/graph.hpp"

namespace neighborly::corpus {

/// mt19937_64 with a fixed integer mapping, so streams are identical across
/// standard libraries (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(next() % (hi - lo + 1)); }
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// E3CNF over n variables with m distinct, tautology-free clauses whose
/// literals sit on three distinct variables. Requires n >= 3.
CnfFormula random_e3cnf(Rng& rng, std::size_t n, std::size_t m);

struct FormulaCorpusConfig {
    std::uint64_t seed = 42;
    std::size_t count = 50;
    std::size_t min_vars = 3;
    std::size_t max_vars = 6;
    std::size_t min_clauses = 2;
    std::size_t max_clauses = 4;
};

std::vector<CnfFormula> formula_corpus(const FormulaCorpusConfig& cfg);

/// Deletes clauses front to back while the rest stays unsatisfiable.
CnfFormula minimal_unsat_core(const CnfFormula& f);

/// Minimal-unsatisfiable E3CNF formulas: random E3CNF over 3 or 4 variables
/// grown until unsatisfiable, then shrunk to a core.
std::vector<CnfFormula> minimal_unsat_corpus(std::uint64_t seed, std::size_t count);

Graph random_graph(Rng& rng, std::size_t n);

/// Every labeled graph on n vertices, in order of the edge bitmask.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn);

/// Smallest-code relabeling over all vertex orders sorted by degree.
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class, sorted by graph6.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

} // namespace neighborly::corpus
