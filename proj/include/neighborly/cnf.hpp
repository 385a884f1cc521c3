#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace neighborly {

using Var = std::size_t;

struct Literal {
    Var var = 0;
    bool negated = false;

    Literal negate() const { return {var, !negated}; }
    auto operator<=>(const Literal&) const = default;
};

inline Literal pos(Var v) { return {v, false}; }
inline Literal neg(Var v) { return {v, true}; }

/// Clause as an ordered literal list. Construction through make_clause drops
/// repeated literals (keeping the first occurrence) and rejects empty input.
using Clause = std::vector<Literal>;

Clause make_clause(std::vector<Literal> literals);
bool is_tautology(const Clause& c);

enum class VarRole : std::uint8_t { Original, Selector, Splitter, OccurrenceCopy, Padding };

std::string to_string(VarRole role);

class CnfFormula {
public:
    CnfFormula() = default;
    explicit CnfFormula(std::size_t variable_count) : variable_count_(variable_count) {}
    CnfFormula(std::size_t variable_count, std::vector<Clause> clauses);

    std::size_t variable_count() const noexcept { return variable_count_; }
    std::size_t clause_count() const noexcept { return clauses_.size(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    const Clause& clause(std::size_t i) const { return clauses_.at(i); }

    Var add_variable(VarRole role = VarRole::Original);
    void add_clause(Clause c);

    VarRole var_role(Var v) const;
    void set_var_role(Var v, VarRole role);

    bool operator==(const CnfFormula& other) const
    {
        return variable_count_ == other.variable_count_ && clauses_ == other.clauses_;
    }

private:
    std::size_t variable_count_ = 0;
    std::vector<Clause> clauses_;
    std::vector<VarRole> roles_;
};

/// Total assignment over [0, size).
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t size, bool value = false) : values_(size, value ? 1 : 0) {}
    explicit Assignment(std::vector<bool> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool operator[](Var v) const { return values_.at(v) != 0; }
    void set(Var v, bool value) { values_.at(v) = value ? 1 : 0; }
    bool satisfies(const Literal& l) const { return (*this)[l.var] != l.negated; }
    void resize(std::size_t n, bool value = false) { values_.resize(n, value ? 1 : 0); }

    bool operator==(const Assignment&) const = default;

private:
    std::vector<std::uint8_t> values_;
};

/// Throws IncompleteAssignment when a is shorter than the variable count.
bool evaluate(const CnfFormula& f, const Assignment& a);
bool clause_satisfied(const Clause& c, const Assignment& a);

/// Exactly three literals over three distinct variables, nonempty formula.
bool is_e3cnf(const CnfFormula& f);
CnfFormula remove_tautologies(const CnfFormula& f);
CnfFormula without_clause(const CnfFormula& f, std::size_t index);

/// DIMACS CNF, 1-indexed signed literals, zero-terminated clauses.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string to_dimacs_cnf(const CnfFormula& f);

std::string to_string(const Clause& c);
std::string to_string(const CnfFormula& f);

/// {"deleted_clause": i, "assignment": {"1": true, ...}} with 1-indexed variables.
std::string witness_json(std::size_t deleted_clause, const Assignment& a);

} // namespace neighborly
