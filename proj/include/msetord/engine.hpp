#ifndef MSETORD_ENGINE_HPP
#define MSETORD_ENGINE_HPP

// Minimal DFS solver: constraint-level FIFO propagation queue driven to
// fixpoint, chronological backtracking over the trailed store, static
// variable order with min-value binary branching. No heuristics, so node
// and solution counts are reproducible across symmetry-breaking schemes.

#include <chrono>
#include <memory>
#include <optional>
#include <vector>

#include "msetord/constraint.hpp"
#include "msetord/domain.hpp"

namespace msetord {

struct SearchStats {
    long long nodes = 0;        // branching decisions taken
    long long failures = 0;     // Failure outcomes of fixpoint propagation
    long long solutions = 0;
    long long propagations = 0; // propagator invocations
    std::chrono::nanoseconds elapsed{0};

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }
};

struct SolveResult {
    std::vector<std::vector<int>> solutions; // value per VarId, search order
    SearchStats stats;
};

class Model {
public:
    Model() = default;
    explicit Model(ValueRange global) : store_(global) {}

    DomainStore& store() { return store_; }
    const DomainStore& store() const { return store_; }

    VarId new_var(std::span<const int> values) { return store_.new_var(values); }
    VarId new_var(std::initializer_list<int> values) { return store_.new_var(values); }
    VarId new_var_range(int lo, int hi) { return store_.new_var_range(lo, hi); }

    Constraint& add(std::unique_ptr<Constraint> c) {
        for (VarId v : c->scope())
            if (!store_.valid(v)) throw ModelError("constraint scopes an invalid VarId");
        constraints_.push_back(std::move(c));
        return *constraints_.back();
    }

    template <class C, class... Args>
    C& emplace(Args&&... args) {
        auto c = std::make_unique<C>(store_, std::forward<Args>(args)...);
        C& ref = *c;
        add(std::move(c));
        return ref;
    }

    size_t num_constraints() const { return constraints_.size(); }

    /// Runs every propagator to mutual fixpoint from the current state.
    /// Never returns Entailed: entailed propagators are deactivated for the
    /// current subtree instead.
    PropagationOutcome propagate_to_fixpoint() {
        prepare();
        enqueue_all();
        SearchStats scratch;
        return fixpoint(scratch);
    }

    SolveResult solve_all(std::optional<long long> limit = std::nullopt) {
        auto t0 = std::chrono::steady_clock::now();
        prepare();
        SolveResult result;
        limit_ = limit;
        stopped_ = limit_.has_value() && *limit_ <= 0;
        if (!stopped_) {
            MarkToken root = store_.mark();
            size_t deact = deact_trail_.size();
            enqueue_all();
            if (fixpoint(result.stats) == PropagationOutcome::Failure) {
                result.stats.failures++;
            } else {
                search(result);
            }
            undo_to(root, deact);
        }
        result.stats.elapsed = std::chrono::steady_clock::now() - t0;
        return result;
    }

    SolveResult solve_first() { return solve_all(1); }

private:
    void prepare() {
        watchers_.assign(store_.num_vars(), {});
        for (size_t ci = 0; ci < constraints_.size(); ++ci)
            for (VarId v : constraints_[ci]->scope())
                watchers_[static_cast<size_t>(v.index)].push_back(static_cast<int32_t>(ci));
        active_.assign(constraints_.size(), 1);
        queued_.assign(constraints_.size(), 0);
        queue_.clear();
        queue_head_ = 0;
        deact_trail_.clear();
        store_.changed().clear();
    }

    void enqueue_all() {
        for (size_t ci = 0; ci < constraints_.size(); ++ci) enqueue(static_cast<int32_t>(ci));
    }

    void enqueue(int32_t ci) {
        if (active_[static_cast<size_t>(ci)] && !queued_[static_cast<size_t>(ci)]) {
            queued_[static_cast<size_t>(ci)] = 1;
            queue_.push_back(ci);
        }
    }

    void drain_changes() {
        for (VarId v : store_.changed())
            for (int32_t ci : watchers_[static_cast<size_t>(v.index)]) enqueue(ci);
        store_.changed().clear();
    }

    PropagationOutcome fixpoint(SearchStats& stats) {
        drain_changes();
        while (queue_head_ < queue_.size()) {
            int32_t ci = queue_[queue_head_++];
            queued_[static_cast<size_t>(ci)] = 0;
            if (!active_[static_cast<size_t>(ci)]) continue;
            stats.propagations++;
            PropagationOutcome out = constraints_[static_cast<size_t>(ci)]->propagate(store_);
            if (out == PropagationOutcome::Failure) {
                clear_queue();
                store_.changed().clear();
                return PropagationOutcome::Failure;
            }
            if (out == PropagationOutcome::Entailed) {
                active_[static_cast<size_t>(ci)] = 0;
                deact_trail_.push_back(ci);
            }
            drain_changes();
        }
        clear_queue();
        return PropagationOutcome::Fixpoint;
    }

    void clear_queue() {
        for (size_t i = queue_head_; i < queue_.size(); ++i)
            queued_[static_cast<size_t>(queue_[i])] = 0;
        queue_.clear();
        queue_head_ = 0;
    }

    void undo_to(MarkToken token, size_t deact_pos) {
        while (deact_trail_.size() > deact_pos) {
            active_[static_cast<size_t>(deact_trail_.back())] = 1;
            deact_trail_.pop_back();
        }
        store_.undo_to(token);
    }

    VarId first_unbound() const {
        for (size_t i = 0; i < store_.num_vars(); ++i) {
            VarId v{static_cast<int32_t>(i)};
            if (!store_.is_bound(v)) return v;
        }
        return VarId{-1};
    }

    void record_solution(SolveResult& result) {
        std::vector<int> sol(store_.num_vars());
        for (size_t i = 0; i < store_.num_vars(); ++i)
            sol[i] = store_.min_of(VarId{static_cast<int32_t>(i)});
        result.solutions.push_back(std::move(sol));
        result.stats.solutions++;
        if (limit_ && result.stats.solutions >= *limit_) stopped_ = true;
    }

    // Called at fixpoint; branches x = v, then x != v, with v = min(D(x)).
    void search(SolveResult& result) {
        VarId x = first_unbound();
        if (x.index < 0) {
            record_solution(result);
            return;
        }
        int v = store_.min_of(x);

        MarkToken m = store_.mark();
        size_t deact = deact_trail_.size();
        result.stats.nodes++;
        store_.assign(x, v);
        if (fixpoint(result.stats) == PropagationOutcome::Fixpoint)
            search(result);
        else
            result.stats.failures++;
        undo_to(m, deact);
        if (stopped_) return;

        m = store_.mark();
        deact = deact_trail_.size();
        result.stats.nodes++;
        store_.remove_value(x, v);
        if (fixpoint(result.stats) == PropagationOutcome::Fixpoint)
            search(result);
        else
            result.stats.failures++;
        undo_to(m, deact);
    }

    DomainStore store_;
    std::vector<std::unique_ptr<Constraint>> constraints_;
    std::vector<std::vector<int32_t>> watchers_;
    std::vector<char> active_, queued_;
    std::vector<int32_t> queue_;
    size_t queue_head_ = 0;
    std::vector<int32_t> deact_trail_;
    std::optional<long long> limit_;
    bool stopped_ = false;
};

} // namespace msetord

#endif
