#include "neighborly/cnf_stages.hpp"

#include <algorithm>

#include "neighborly/error.hpp"

namespace neighborly {

namespace {

Assignment extend(const Assignment& a, std::size_t input_vars, std::size_t output_vars)
{
    Assignment out(output_vars);
    for (Var v = 0; v < input_vars && v < a.size(); ++v) out.set(v, a[v]);
    return out;
}

CnfFormula with_roles_of(const CnfFormula& f)
{
    CnfFormula out(f.variable_count());
    for (Var v = 0; v < f.variable_count(); ++v)
        if (f.var_role(v) != VarRole::Original) out.set_var_role(v, f.var_role(v));
    return out;
}

} // namespace

// ---------------------------------------------------------------- at most 3

AtMost3Stage::AtMost3Stage(const CnfFormula& input)
{
    input_ = input;
    output_ = with_roles_of(input);
    chain_of_input_.assign(input.clause_count(), std::nullopt);
    for (std::size_t i = 0; i < input.clause_count(); ++i) {
        const auto& c = input.clause(i);
        if (c.empty()) throw Error(ErrorKind::EmptyClause, "clause " + std::to_string(i));
        if (c.size() <= 3) {
            output_.add_clause(c);
            trace_.emplace_back(i);
            position_.push_back(0);
            continue;
        }
        Chain chain{i, output_.clause_count(), {}};
        for (std::size_t j = 0; j < c.size(); ++j) chain.z.push_back(output_.add_variable(VarRole::Splitter));
        const std::size_t w = c.size();
        for (std::size_t j = 0; j < w; ++j) {
            Clause out;
            if (j > 0) out.push_back(neg(chain.z[j - 1]));
            out.push_back(c[j]);
            if (j + 1 < w) out.push_back(pos(chain.z[j]));
            output_.add_clause(out);
            trace_.emplace_back(i);
            position_.push_back(j);
        }
        chain_of_input_[i] = chains_.size();
        chains_.push_back(std::move(chain));
    }
}

Assignment AtMost3Stage::witness(std::size_t deleted, const UpstreamWitness& upstream) const
{
    const std::size_t i = *trace_.at(deleted);
    const Assignment alpha = upstream(i);
    Assignment beta = extend(alpha, input_.variable_count(), output_.variable_count());
    for (const auto& chain : chains_) {
        std::size_t prefix = 0;
        if (chain.input_clause == i) {
            prefix = position_[deleted];
        } else {
            const auto& c = input_.clause(chain.input_clause);
            while (prefix < c.size() && !alpha.satisfies(c[prefix])) ++prefix;
            if (prefix == c.size()) prefix = 0;
        }
        for (std::size_t j = 0; j < chain.z.size(); ++j) beta.set(chain.z[j], j < prefix);
    }
    return beta;
}

// ---------------------------------------------------------------- occurrences

LimitOccurrencesStage::LimitOccurrencesStage(const CnfFormula& input)
{
    input_ = input;
    for (std::size_t i = 0; i < input.clause_count(); ++i) {
        const auto& c = input.clause(i);
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (c[a].var == c[b].var)
                    throw Error(ErrorKind::NotE3Cnf, "variable repeated inside clause " + std::to_string(i));
    }
    // copy_at[i][p]: output variable replacing the literal at position p of clause i
    std::vector<std::vector<Var>> copy_at(input.clause_count());
    for (std::size_t i = 0; i < input.clause_count(); ++i) copy_at[i].resize(input.clause(i).size());
    Var next = 0;
    for (Var v = 0; v < input.variable_count(); ++v) {
        Family fam{v, 0, {}};
        for (int polarity = 0; polarity < 2; ++polarity) {
            for (std::size_t i = 0; i < input.clause_count(); ++i) {
                const auto& c = input.clause(i);
                for (std::size_t p = 0; p < c.size(); ++p) {
                    if (c[p].var != v || c[p].negated != (polarity == 1)) continue;
                    copy_at[i][p] = next;
                    fam.copies.push_back({next++, i});
                }
            }
            if (polarity == 0) fam.positives = fam.copies.size();
        }
        if (!fam.copies.empty()) families_.push_back(std::move(fam));
    }
    output_ = CnfFormula(0);
    for (Var v = 0; v < next; ++v) output_.add_variable(VarRole::OccurrenceCopy);
    for (std::size_t i = 0; i < input.clause_count(); ++i) {
        Clause out;
        const auto& c = input.clause(i);
        for (std::size_t p = 0; p < c.size(); ++p) out.push_back({copy_at[i][p], c[p].negated});
        output_.add_clause(out);
        trace_.emplace_back(i);
        link_of_output_.emplace_back(std::nullopt);
    }
    for (std::size_t f = 0; f < families_.size(); ++f) {
        const auto& copies = families_[f].copies;
        for (std::size_t j = 0; j + 1 < copies.size(); ++j) {
            output_.add_clause({neg(copies[j].copy), pos(copies[j + 1].copy)});
            trace_.emplace_back(std::nullopt);
            link_of_output_.emplace_back(Link{f, j});
        }
    }
}

Assignment LimitOccurrencesStage::witness(std::size_t deleted, const UpstreamWitness& upstream) const
{
    const auto& link = link_of_output_.at(deleted);
    Assignment alpha;
    if (!link) {
        alpha = upstream(*trace_[deleted]);
    } else {
        const auto& fam = families_[link->family];
        const bool left_positive = link->j < fam.positives;
        alpha = upstream(fam.copies[left_positive ? link->j : link->j + 1].clause);
    }
    Assignment beta(output_.variable_count());
    for (const auto& fam : families_)
        for (const auto& c : fam.copies) beta.set(c.copy, alpha[fam.original]);
    if (link) {
        const auto& fam = families_[link->family];
        const bool value = alpha[fam.original];
        if (link->j < fam.positives) {
            // beta_0' when the variable is false, beta_1 otherwise
            if (!value) beta.set(fam.copies[link->j].copy, true);
        } else {
            // beta_1' when the variable is true, beta_0 otherwise
            if (value) beta.set(fam.copies[link->j + 1].copy, false);
        }
    }
    return beta;
}

// ---------------------------------------------------------------- padding

PadToE3Stage::PadToE3Stage(const CnfFormula& input)
{
    input_ = input;
    output_ = with_roles_of(input);
    for (std::size_t i = 0; i < input.clause_count(); ++i) {
        const auto& c = input.clause(i);
        if (c.empty()) throw Error(ErrorKind::EmptyClause, "clause " + std::to_string(i));
        if (c.size() > 3) throw Error(ErrorKind::ClauseTooWide, "clause " + std::to_string(i) + " has width " + std::to_string(c.size()));
        Group group{output_.clause_count(), 0, {}};
        if (c.size() == 3) {
            output_.add_clause(c);
        } else if (c.size() == 2) {
            Var y = output_.add_variable(VarRole::Padding);
            group.fresh = {y};
            output_.add_clause({c[0], c[1], pos(y)});
            output_.add_clause({c[0], c[1], neg(y)});
        } else {
            Var y = output_.add_variable(VarRole::Padding);
            Var z = output_.add_variable(VarRole::Padding);
            group.fresh = {y, z};
            output_.add_clause({c[0], pos(y), pos(z)});
            output_.add_clause({c[0], neg(y), pos(z)});
            output_.add_clause({c[0], pos(y), neg(z)});
            output_.add_clause({c[0], neg(y), neg(z)});
        }
        group.size = output_.clause_count() - group.first_output;
        for (std::size_t k = 0; k < group.size; ++k) trace_.emplace_back(i);
        groups_.push_back(std::move(group));
    }
}

Assignment PadToE3Stage::witness(std::size_t deleted, const UpstreamWitness& upstream) const
{
    const std::size_t i = *trace_.at(deleted);
    Assignment beta = extend(upstream(i), input_.variable_count(), output_.variable_count());
    // Falsify the fresh literals of the deleted sibling; every other sibling
    // then contains a true fresh literal.
    for (const auto& l : output_.clause(deleted)) {
        const auto& fresh = groups_[i].fresh;
        if (std::find(fresh.begin(), fresh.end(), l.var) != fresh.end()) beta.set(l.var, l.negated);
    }
    return beta;
}

} // namespace neighborly
