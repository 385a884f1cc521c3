#include "cdcl.hpp"

#include <algorithm>

#include "neighborly/error.hpp"

namespace neighborly::detail {

namespace {

std::uint64_t luby(std::uint64_t i)
{
    // i is 1-based
    std::uint64_t k = 1;
    while ((std::uint64_t{1} << k) - 1 < i) ++k;
    while (true) {
        if (i == (std::uint64_t{1} << k) - 1) return std::uint64_t{1} << (k - 1);
        i -= (std::uint64_t{1} << (k - 1)) - 1;
        k = 1;
        while ((std::uint64_t{1} << k) - 1 < i) ++k;
    }
}

} // namespace

Cdcl::Cdcl(std::size_t vars, Branching branching) : n_(vars), branching_(branching)
{
    watches_.resize(2 * n_);
    assigns_.assign(n_, -1);
    phase_.assign(n_, 0);
    level_.assign(n_, 0);
    reason_.assign(n_, -1);
    seen_.assign(n_, 0);
    activity_.assign(n_, 0.0);
    heap_index_.assign(n_, -1);
    if (branching_ == Branching::Activity)
        for (std::size_t v = 0; v < n_; ++v) heap_insert(static_cast<int>(v));
}

bool Cdcl::add_clause(std::vector<int> lits)
{
    if (!ok_) return false;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1]) return true; // tautology
        int v = value(lits[i]);
        if (v == 1) return true;
        if (v == -1) kept.push_back(lits[i]);
    }
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) ok_ = false;
        return ok_;
    }
    int id = static_cast<int>(clauses_.size());
    watches_[static_cast<std::size_t>(kept[0])].push_back(id);
    watches_[static_cast<std::size_t>(kept[1])].push_back(id);
    clauses_.push_back(std::move(kept));
    return true;
}

void Cdcl::enqueue(int lit, int reason)
{
    auto v = static_cast<std::size_t>(lit >> 1);
    assigns_[v] = static_cast<std::int8_t>((lit & 1) ? 0 : 1);
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(lit);
}

int Cdcl::propagate()
{
    while (qhead_ < trail_.size()) {
        const int falsified = trail_[qhead_++] ^ 1;
        auto& ws = watches_[static_cast<std::size_t>(falsified)];
        std::size_t keep = 0;
        int conflict = -1;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const int id = ws[i];
            if (conflict >= 0) {
                ws[keep++] = id;
                continue;
            }
            auto& c = clauses_[static_cast<std::size_t>(id)];
            if (c[0] == falsified) std::swap(c[0], c[1]);
            if (value(c[0]) == 1) {
                ws[keep++] = id;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[static_cast<std::size_t>(c[1])].push_back(id);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[keep++] = id;
            if (value(c[0]) == 0) conflict = id;
            else enqueue(c[0], id);
        }
        ws.resize(keep);
        if (conflict >= 0) return conflict;
    }
    return -1;
}

void Cdcl::analyze(int conflict, std::vector<int>& learnt, int& backjump)
{
    learnt.assign(1, -1);
    int path = 0;
    int p = -1;
    std::size_t idx = trail_.size();
    const int current = static_cast<int>(trail_lim_.size());
    do {
        const auto& c = clauses_[static_cast<std::size_t>(conflict)];
        for (std::size_t j = (p == -1 ? 0 : 1); j < c.size(); ++j) {
            const int q = c[j];
            const auto v = static_cast<std::size_t>(q >> 1);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump(static_cast<int>(v));
            if (level_[v] >= current) ++path;
            else learnt.push_back(q);
        }
        do {
            --idx;
        } while (!seen_[static_cast<std::size_t>(trail_[idx] >> 1)]);
        p = trail_[idx];
        conflict = reason_[static_cast<std::size_t>(p >> 1)];
        seen_[static_cast<std::size_t>(p >> 1)] = 0;
        --path;
    } while (path > 0);
    learnt[0] = p ^ 1;

    backjump = 0;
    std::size_t max_i = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        int lv = level_[static_cast<std::size_t>(learnt[i] >> 1)];
        if (lv > backjump) {
            backjump = lv;
            max_i = i;
        }
    }
    if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
    for (int q : learnt) seen_[static_cast<std::size_t>(q >> 1)] = 0;
}

void Cdcl::cancel_until(int level)
{
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    const std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
    while (trail_.size() > stop) {
        const int lit = trail_.back();
        trail_.pop_back();
        const auto v = static_cast<std::size_t>(lit >> 1);
        phase_[v] = assigns_[v];
        assigns_[v] = -1;
        reason_[v] = -1;
        if (branching_ == Branching::Activity) {
            if (heap_index_[v] < 0) heap_insert(static_cast<int>(v));
        } else {
            next_var_ = std::min(next_var_, v);
        }
    }
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
}

int Cdcl::pick_branch()
{
    if (branching_ == Branching::LowestIndex) {
        while (next_var_ < n_ && assigns_[next_var_] >= 0) ++next_var_;
        if (next_var_ == n_) return -1;
        return static_cast<int>(2 * next_var_ + 1);
    }
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assigns_[static_cast<std::size_t>(v)] < 0) return 2 * v + (phase_[static_cast<std::size_t>(v)] == 1 ? 0 : 1);
    }
    return -1;
}

void Cdcl::bump(int var)
{
    if (branching_ != Branching::Activity) return;
    auto v = static_cast<std::size_t>(var);
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(static_cast<std::size_t>(heap_index_[v]));
}

void Cdcl::decay()
{
    var_inc_ /= 0.95;
}

void Cdcl::heap_insert(int var)
{
    heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_up(heap_.size() - 1);
}

namespace {
inline bool before(const std::vector<double>& act, int a, int b)
{
    auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
    return act[ia] > act[ib] || (act[ia] == act[ib] && a < b);
}
} // namespace

void Cdcl::heap_up(std::size_t i)
{
    int var = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!before(activity_, var, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        i = parent;
    }
    heap_[i] = var;
    heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(i);
}

void Cdcl::heap_down(std::size_t i)
{
    int var = heap_[i];
    while (true) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && before(activity_, heap_[child + 1], heap_[child])) ++child;
        if (!before(activity_, heap_[child], var)) break;
        heap_[i] = heap_[child];
        heap_index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
        i = child;
    }
    heap_[i] = var;
    heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(i);
}

int Cdcl::heap_pop()
{
    int top = heap_.front();
    heap_index_[static_cast<std::size_t>(top)] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_index_[static_cast<std::size_t>(heap_.front())] = 0;
        heap_down(0);
    }
    return top;
}

std::optional<std::vector<bool>> Cdcl::solve(std::optional<std::chrono::steady_clock::time_point> deadline)
{
    if (!ok_) return std::nullopt;
    if (propagate() >= 0) return std::nullopt;
    std::uint64_t conflicts = 0;
    std::uint64_t restart_round = 1;
    std::uint64_t restart_limit = 100 * luby(restart_round);
    std::uint64_t since_restart = 0;
    std::uint64_t ticks = 0;
    std::vector<int> learnt;
    while (true) {
        if (deadline && (++ticks & 255) == 0 && std::chrono::steady_clock::now() > *deadline)
            throw Error(ErrorKind::Timeout, "solver exceeded its time budget");
        int conflict = propagate();
        if (conflict >= 0) {
            ++conflicts;
            ++since_restart;
            if (trail_lim_.empty()) return std::nullopt;
            int backjump = 0;
            analyze(conflict, learnt, backjump);
            cancel_until(backjump);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                int id = static_cast<int>(clauses_.size());
                watches_[static_cast<std::size_t>(learnt[0])].push_back(id);
                watches_[static_cast<std::size_t>(learnt[1])].push_back(id);
                clauses_.push_back(learnt);
                enqueue(learnt[0], id);
            }
            decay();
            continue;
        }
        if (branching_ == Branching::Activity && since_restart >= restart_limit) {
            since_restart = 0;
            restart_limit = 100 * luby(++restart_round);
            cancel_until(0);
            continue;
        }
        int decision = pick_branch();
        if (decision < 0) break;
        trail_lim_.push_back(trail_.size());
        enqueue(decision, -1);
    }
    std::vector<bool> model(n_);
    for (std::size_t v = 0; v < n_; ++v) model[v] = assigns_[v] == 1;
    return model;
}

} // namespace neighborly::detail
