#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "neighborly/cnf.hpp"

namespace neighborly {

/// Satisfying assignment for the stage input with input clause i deleted.
using UpstreamWitness = std::function<Assignment(std::size_t)>;

/// A formula transformation built from a concrete input, able to translate
/// satisfying assignments of one-clause-deleted inputs into satisfying
/// assignments of one-clause-deleted outputs.
class WitnessedStage {
public:
    virtual ~WitnessedStage() = default;

    const CnfFormula& input() const noexcept { return input_; }
    const CnfFormula& output() const noexcept { return output_; }
    /// Output clause -> originating input clause, nullopt for fresh clauses.
    const std::vector<std::optional<std::size_t>>& clause_trace() const noexcept { return trace_; }

    /// Assignment over the output variables satisfying output - deleted.
    virtual Assignment witness(std::size_t deleted, const UpstreamWitness& upstream) const = 0;

protected:
    CnfFormula input_;
    CnfFormula output_;
    std::vector<std::optional<std::size_t>> trace_;
};

/// Chain-splits clauses wider than three.
class AtMost3Stage : public WitnessedStage {
public:
    explicit AtMost3Stage(const CnfFormula& input);
    Assignment witness(std::size_t deleted, const UpstreamWitness& upstream) const override;

private:
    struct Chain {
        std::size_t input_clause;
        std::size_t first_output;
        std::vector<Var> z; // z[0] is z_{i,1}
    };
    std::vector<std::optional<std::size_t>> chain_of_input_;
    std::vector<Chain> chains_;
    std::vector<std::size_t> position_; // 0-based position of an output clause in its chain
};

/// Gives every occurrence its own copy, tied together by implication chains.
class LimitOccurrencesStage : public WitnessedStage {
public:
    explicit LimitOccurrencesStage(const CnfFormula& input);
    Assignment witness(std::size_t deleted, const UpstreamWitness& upstream) const override;

private:
    struct Copy {
        Var copy;
        std::size_t clause;
    };
    struct Family {
        Var original;
        std::size_t positives = 0;
        std::vector<Copy> copies;
    };
    struct Link {
        std::size_t family;
        std::size_t j; // chain clause (not x_j v x_{j+1}), j 0-based
    };
    std::vector<Family> families_;
    std::vector<std::optional<Link>> link_of_output_;
};

/// Pads clauses of width 1 and 2 to width 3 with fresh variables.
class PadToE3Stage : public WitnessedStage {
public:
    explicit PadToE3Stage(const CnfFormula& input);
    Assignment witness(std::size_t deleted, const UpstreamWitness& upstream) const override;

private:
    struct Group {
        std::size_t first_output;
        std::size_t size;
        std::vector<Var> fresh;
    };
    std::vector<Group> groups_; // per input clause
};

} // namespace neighborly
