#include "neighborly/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "neighborly/error.hpp"

namespace neighborly {

Clause make_clause(std::vector<Literal> literals)
{
    if (literals.empty()) throw Error(ErrorKind::EmptyClause, "clause has no literals");
    Clause out;
    out.reserve(literals.size());
    for (const auto& l : literals)
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
}

bool is_tautology(const Clause& c)
{
    for (const auto& l : c)
        if (std::find(c.begin(), c.end(), l.negate()) != c.end()) return true;
    return false;
}

std::string to_string(VarRole role)
{
    switch (role) {
    case VarRole::Original: return "original";
    case VarRole::Selector: return "selector";
    case VarRole::Splitter: return "splitter";
    case VarRole::OccurrenceCopy: return "occurrence-copy";
    case VarRole::Padding: return "padding";
    }
    return "original";
}

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count)
{
    for (auto& c : clauses) add_clause(std::move(c));
}

Var CnfFormula::add_variable(VarRole role)
{
    if (role != VarRole::Original || !roles_.empty()) {
        roles_.resize(variable_count_, VarRole::Original);
        roles_.push_back(role);
    }
    return variable_count_++;
}

void CnfFormula::add_clause(Clause c)
{
    c = make_clause(std::move(c));
    for (const auto& l : c)
        if (l.var >= variable_count_)
            throw Error(ErrorKind::InvalidModification, "literal over unknown variable " + std::to_string(l.var));
    clauses_.push_back(std::move(c));
}

VarRole CnfFormula::var_role(Var v) const
{
    return v < roles_.size() ? roles_[v] : VarRole::Original;
}

void CnfFormula::set_var_role(Var v, VarRole role)
{
    if (v >= variable_count_) throw Error(ErrorKind::InvalidModification, "unknown variable");
    roles_.resize(variable_count_, VarRole::Original);
    roles_[v] = role;
}

Assignment::Assignment(std::vector<bool> values)
{
    values_.reserve(values.size());
    for (bool b : values) values_.push_back(b ? 1 : 0);
}

bool clause_satisfied(const Clause& c, const Assignment& a)
{
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a.satisfies(l); });
}

bool evaluate(const CnfFormula& f, const Assignment& a)
{
    if (a.size() < f.variable_count())
        throw Error(ErrorKind::IncompleteAssignment,
                    "assignment covers " + std::to_string(a.size()) + " of " + std::to_string(f.variable_count()) + " variables");
    return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) { return clause_satisfied(c, a); });
}

bool is_e3cnf(const CnfFormula& f)
{
    if (f.clause_count() == 0) return false;
    for (const auto& c : f.clauses()) {
        if (c.size() != 3) return false;
        if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) return false;
    }
    return true;
}

CnfFormula remove_tautologies(const CnfFormula& f)
{
    CnfFormula out(f.variable_count());
    for (Var v = 0; v < f.variable_count(); ++v)
        if (f.var_role(v) != VarRole::Original) out.set_var_role(v, f.var_role(v));
    for (const auto& c : f.clauses())
        if (!is_tautology(c)) out.add_clause(c);
    return out;
}

CnfFormula without_clause(const CnfFormula& f, std::size_t index)
{
    if (index >= f.clause_count())
        throw Error(ErrorKind::InvalidModification, "clause index " + std::to_string(index) + " out of range");
    CnfFormula out(f.variable_count());
    for (std::size_t i = 0; i < f.clause_count(); ++i)
        if (i != index) out.add_clause(f.clause(i));
    return out;
}

CnfFormula parse_dimacs_cnf(std::string_view text)
{
    std::optional<std::size_t> vars;
    std::size_t declared = 0;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool done = false;
    while (start <= text.size() && !done) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == 'c') continue;
        if (line[i] == '%') break;
        if (line[i] == 'p') {
            if (vars) throw ParseError("duplicate problem line", line_no, i + 1);
            std::istringstream is{std::string(line.substr(i + 1))};
            std::string fmt;
            long long n = -1, m = -1;
            if (!(is >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw ParseError("expected 'p cnf n m'", line_no, i + 1);
            vars = static_cast<std::size_t>(n);
            declared = static_cast<std::size_t>(m);
            continue;
        }
        if (!vars) throw ParseError("clause before problem line", line_no, i + 1);
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size()) break;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc() || ptr != line.data() + j)
                throw ParseError("expected integer literal", line_no, i + 1);
            if (value == 0) {
                if (current.empty()) throw Error(ErrorKind::EmptyClause, "empty clause at line " + std::to_string(line_no));
                clauses.push_back(current);
                current.clear();
            } else {
                auto var = static_cast<std::size_t>(value < 0 ? -value : value);
                if (var > *vars) throw ParseError("variable " + std::to_string(var) + " exceeds declared count", line_no, i + 1);
                Literal l{var - 1, value < 0};
                if (std::find(current.begin(), current.end(), l) != current.end())
                    throw ParseError("duplicate literal in clause", line_no, i + 1);
                current.push_back(l);
            }
            i = j;
        }
    }
    if (!vars) throw ParseError("missing problem line", line_no, 1);
    if (!current.empty()) throw ParseError("unterminated clause", line_no, 1);
    if (clauses.size() != declared)
        throw ParseError("clause count mismatch: declared " + std::to_string(declared) + ", found " + std::to_string(clauses.size()),
                         line_no, 1);
    return CnfFormula(*vars, std::move(clauses));
}

std::string to_dimacs_cnf(const CnfFormula& f)
{
    std::ostringstream os;
    os << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
    for (const auto& c : f.clauses()) {
        for (const auto& l : c) os << (l.negated ? "-" : "") << l.var + 1 << ' ';
        os << "0\n";
    }
    return os.str();
}

std::string to_string(const Clause& c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " v ";
        if (c[i].negated) out += "~";
        out += "x" + std::to_string(c[i].var + 1);
    }
    return out + ")";
}

std::string to_string(const CnfFormula& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
        if (i) out += " & ";
        out += to_string(f.clause(i));
    }
    return out.empty() ? "T" : out;
}

std::string witness_json(std::size_t deleted_clause, const Assignment& a)
{
    nlohmann::ordered_json j;
    j["deleted_clause"] = deleted_clause;
    auto values = nlohmann::ordered_json::object();
    for (Var v = 0; v < a.size(); ++v) values[std::to_string(v + 1)] = a[v];
    j["assignment"] = std::move(values);
    return j.dump();
}

} // namespace neighborly
