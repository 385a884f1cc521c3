#pragma once

// Internal conflict-driven clause-learning core shared by the exact solvers.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace neighborly::detail {

class Cdcl {
public:
    enum class Branching {
        LowestIndex, // lowest unassigned variable, false first, no restarts
        Activity,    // VSIDS with phase saving and Luby restarts
    };

    explicit Cdcl(std::size_t vars, Branching branching = Branching::LowestIndex);

    /// Literals are 2 * var + (negated ? 1 : 0). Returns false if the
    /// formula became trivially unsatisfiable.
    bool add_clause(std::vector<int> lits);

    /// nullopt = unsatisfiable. Throws Error(Timeout) past the deadline.
    std::optional<std::vector<bool>> solve(std::optional<std::chrono::steady_clock::time_point> deadline);

private:
    int value(int lit) const
    {
        auto v = assigns_[static_cast<std::size_t>(lit >> 1)];
        return v < 0 ? -1 : (v ^ (lit & 1));
    }
    void enqueue(int lit, int reason);
    int propagate();
    void analyze(int conflict, std::vector<int>& learnt, int& backjump);
    void cancel_until(int level);
    int pick_branch();
    void bump(int var);
    void decay();
    void heap_insert(int var);
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    int heap_pop();

    std::size_t n_;
    Branching branching_;
    bool ok_ = true;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::int8_t> assigns_;
    std::vector<std::int8_t> phase_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<int> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<std::uint8_t> seen_;
    std::size_t next_var_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<int> heap_;
    std::vector<int> heap_index_;
};

} // namespace neighborly::detail
