#ifndef MSETORD_CONSTRAINT_HPP
#define MSETORD_CONSTRAINT_HPP

// Propagators. The centerpiece is the generalised-arc-consistent multiset
// ordering propagator over two vectors of variables; sum and lex propagators
// support the benchmark models.
//
// Support characterization for {x1..xn} <=m {y1..ym} (monotone support
// lemma): a value v in D(xi) has a support iff replacing floor(xi) by v in
// the multiset of x-floors keeps it <=m the multiset of y-ceilings, because
// lowering any other x or raising any y only helps. The supported values of
// each xi are downward-closed, so GAC pruning is a single prune_above per
// xi (and symmetrically a prune_below per yj).

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "msetord/domain.hpp"
#include "msetord/errors.hpp"
#include "msetord/mset.hpp"

namespace msetord {

enum class PropagationOutcome { Fixpoint, Failure, Entailed };

class Constraint {
public:
    virtual ~Constraint() = default;
    virtual PropagationOutcome propagate(DomainStore& store) = 0;
    virtual std::span<const VarId> scope() const = 0;
};

/// Multiset of domain minima over `range`.
inline OccurrenceVector floors(const DomainStore& store, std::span<const VarId> vars,
                               ValueRange range) {
    OccurrenceVector out(range);
    for (VarId v : vars) out.add(store.min_of(v));
    return out;
}

/// Multiset of domain maxima over `range`.
inline OccurrenceVector ceilings(const DomainStore& store, std::span<const VarId> vars,
                                 ValueRange range) {
    OccurrenceVector out(range);
    for (VarId v : vars) out.add(store.max_of(v));
    return out;
}

class MsetOrderingConstraint final : public Constraint {
public:
    MsetOrderingConstraint(const DomainStore& store, std::vector<VarId> xs,
                           std::vector<VarId> ys, bool strict)
        : xs_(std::move(xs)), ys_(std::move(ys)), strict_(strict) {
        std::unordered_set<int32_t> seen;
        for (VarId v : xs_) {
            if (!store.valid(v)) throw ModelError("msetord: invalid VarId in xs");
            seen.insert(v.index);
        }
        for (VarId v : ys_) {
            if (!store.valid(v)) throw ModelError("msetord: invalid VarId in ys");
            if (seen.count(v.index))
                throw ModelError("msetord: xs and ys must be disjoint variable sets");
        }
        scope_ = xs_;
        scope_.insert(scope_.end(), ys_.begin(), ys_.end());
        if (!scope_.empty()) {
            int lo = store.min_of(scope_[0]), hi = store.max_of(scope_[0]);
            for (VarId v : scope_) {
                lo = std::min(lo, store.min_of(v));
                hi = std::max(hi, store.max_of(v));
            }
            range_ = ValueRange(lo, hi);
        }
        floor_occ_.resize(static_cast<size_t>(range_.width()));
        ceil_occ_.resize(static_cast<size_t>(range_.width()));
        most_diff_.resize(static_cast<size_t>(range_.width()));
    }

    std::span<const VarId> scope() const override { return scope_; }
    const std::vector<VarId>& xs() const { return xs_; }
    const std::vector<VarId>& ys() const { return ys_; }
    bool strict() const { return strict_; }
    ValueRange common_range() const { return range_; }

    PropagationOutcome propagate(DomainStore& store) override {
        const int w = range_.width();
        const int lo = range_.lo;
        int* f = floor_occ_.data();
        int* c = ceil_occ_.data();
        std::fill_n(f, w, 0);
        std::fill_n(c, w, 0);
        for (VarId v : xs_) ++f[store.min_of(v) - lo];
        for (VarId v : ys_) ++c[store.max_of(v) - lo];

        // most_diff_[i]: largest position <= i where f and c differ, or -1.
        int run = -1;
        for (int i = 0; i < w; ++i) {
            if (f[i] != c[i]) run = i;
            most_diff_[static_cast<size_t>(i)] = run;
        }
        const int alpha = run;

        if (alpha >= 0 && f[alpha] > c[alpha]) return PropagationOutcome::Failure;
        if (alpha < 0) {
            // Floors of xs and ceilings of ys form equal multisets: the only
            // satisfying assignments pin every x at its floor and every y at
            // its ceiling.
            if (strict_) return PropagationOutcome::Failure;
            for (VarId v : xs_) store.prune_above(v, store.min_of(v));
            for (VarId v : ys_) store.prune_below(v, store.max_of(v));
            return PropagationOutcome::Entailed;
        }

        // f <m c with alpha the most significant difference.
        for (VarId v : xs_) {
            const int a = store.min_of(v) - lo;
            int ub;
            if (a >= alpha) {
                ub = a;
            } else if (f[alpha] + 1 < c[alpha]) {
                ub = alpha;
            } else {
                ub = x_tail_allows_alpha(a, alpha) ? alpha : alpha - 1;
            }
            store.prune_above(v, lo + ub);
        }
        for (VarId v : ys_) {
            const int b = store.max_of(v) - lo;
            if (b < alpha) continue;
            if (b > alpha) {
                store.prune_below(v, lo + b);
                continue;
            }
            if (c[alpha] - 1 > f[alpha]) continue;
            const int nd = most_diff(alpha - 1);
            if (nd < 0 || f[nd] < c[nd]) continue;
            store.prune_below(v, lo + (y_supported_at(nd) ? nd : nd + 1));
        }

        // Entailment: multiset of x-ceilings against multiset of y-floors.
        std::fill_n(f, w, 0);
        std::fill_n(c, w, 0);
        for (VarId v : xs_) ++f[store.max_of(v) - lo];
        for (VarId v : ys_) ++c[store.min_of(v) - lo];
        for (int i = w - 1; i >= 0; --i) {
            if (f[i] != c[i])
                return f[i] < c[i] ? PropagationOutcome::Entailed
                                   : PropagationOutcome::Fixpoint;
        }
        return strict_ ? PropagationOutcome::Fixpoint : PropagationOutcome::Entailed;
    }

private:
    int most_diff(int i) const { return i < 0 ? -1 : most_diff_[static_cast<size_t>(i)]; }

    // Whether raising an x with floor `a` (< alpha) all the way to alpha is
    // supported when that closes the count gap at alpha exactly. The tie is
    // decided below alpha by comparing f-with-one-a-removed against c.
    bool x_tail_allows_alpha(int a, int alpha) const {
        const int* f = floor_occ_.data();
        const int* c = ceil_occ_.data();
        int cmp; // <0 less, 0 equal, >0 greater
        const int nd = most_diff(alpha - 1);
        if (nd < 0 || nd < a) {
            cmp = -1; // first difference is the removal at a: f[a]-1 < c[a]
        } else if (nd > a) {
            cmp = f[nd] - c[nd];
        } else { // nd == a
            if (f[a] - 1 != c[a]) {
                cmp = (f[a] - 1) - c[a];
            } else {
                const int nd2 = most_diff(a - 1);
                cmp = nd2 < 0 ? 0 : f[nd2] - c[nd2];
            }
        }
        return cmp < 0 || (!strict_ && cmp == 0);
    }

    // Whether lowering a y with ceiling alpha down to `nd` is supported,
    // given the tie at alpha and f[nd] > c[nd]. Adding the new element at nd
    // compares f against c-plus-one-nd below alpha.
    bool y_supported_at(int nd) const {
        const int* f = floor_occ_.data();
        const int* c = ceil_occ_.data();
        int cmp;
        if (f[nd] == c[nd] + 1) {
            const int nd2 = most_diff(nd - 1);
            cmp = nd2 < 0 ? 0 : f[nd2] - c[nd2];
        } else {
            cmp = 1; // f[nd] > c[nd] + 1
        }
        return cmp < 0 || (!strict_ && cmp == 0);
    }

    std::vector<VarId> xs_, ys_, scope_;
    bool strict_;
    ValueRange range_{0, 0};
    std::vector<int> floor_occ_, ceil_occ_;
    std::vector<int> most_diff_;
};

/// True iff no assignment from current domains satisfies the constraint:
/// even the least multiset the xs can take exceeds the greatest the ys can.
inline bool check_disentailed(const DomainStore& store, const MsetOrderingConstraint& c) {
    ValueRange r = c.common_range();
    MsetOrdering o = mset_compare(floors(store, c.xs(), r), ceilings(store, c.ys(), r));
    return c.strict() ? o != MsetOrdering::Less : o == MsetOrdering::Greater;
}

/// True iff every assignment from current domains satisfies the constraint.
inline bool check_entailed(const DomainStore& store, const MsetOrderingConstraint& c) {
    ValueRange r = c.common_range();
    MsetOrdering o = mset_compare(ceilings(store, c.xs(), r), floors(store, c.ys(), r));
    return c.strict() ? o == MsetOrdering::Less : o != MsetOrdering::Greater;
}

/// Bounds-consistent sum(vars) = total.
class SumEqConstraint final : public Constraint {
public:
    SumEqConstraint(const DomainStore& store, std::vector<VarId> vars, long long total)
        : vars_(std::move(vars)), total_(total) {
        for (VarId v : vars_)
            if (!store.valid(v)) throw ModelError("sum_eq: invalid VarId");
    }

    std::span<const VarId> scope() const override { return vars_; }

    PropagationOutcome propagate(DomainStore& store) override {
        long long lo_sum = 0, hi_sum = 0;
        for (;;) {
            lo_sum = hi_sum = 0;
            for (VarId v : vars_) {
                lo_sum += store.min_of(v);
                hi_sum += store.max_of(v);
            }
            if (total_ < lo_sum || total_ > hi_sum) return PropagationOutcome::Failure;
            bool changed = false;
            for (VarId v : vars_) {
                long long ub = total_ - (lo_sum - store.min_of(v));
                long long lb = total_ - (hi_sum - store.max_of(v));
                if (ub < store.max_of(v) &&
                    store.prune_above(v, static_cast<int>(ub)) == PruneResult::Changed)
                    changed = true;
                if (lb > store.min_of(v) &&
                    store.prune_below(v, static_cast<int>(lb)) == PruneResult::Changed)
                    changed = true;
            }
            if (!changed) break;
        }
        return lo_sum == hi_sum ? PropagationOutcome::Entailed : PropagationOutcome::Fixpoint;
    }

private:
    std::vector<VarId> vars_;
    long long total_;
};

/// Bounds-consistent sum(weights[i] * vars[i]) >= bound, non-negative weights.
class SumGeqConstraint final : public Constraint {
public:
    SumGeqConstraint(const DomainStore& store, std::vector<long long> weights,
                     std::vector<VarId> vars, long long bound)
        : weights_(std::move(weights)), vars_(std::move(vars)), bound_(bound) {
        if (weights_.size() != vars_.size())
            throw ModelError("sum_geq: weights and vars lengths differ");
        for (long long w : weights_)
            if (w < 0) throw ModelError("sum_geq: weights must be non-negative");
        for (VarId v : vars_)
            if (!store.valid(v)) throw ModelError("sum_geq: invalid VarId");
    }

    std::span<const VarId> scope() const override { return vars_; }

    PropagationOutcome propagate(DomainStore& store) override {
        long long hi_sum = 0, lo_sum = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            hi_sum += weights_[i] * store.max_of(vars_[i]);
            lo_sum += weights_[i] * store.min_of(vars_[i]);
        }
        if (hi_sum < bound_) return PropagationOutcome::Failure;
        if (lo_sum >= bound_) return PropagationOutcome::Entailed;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (weights_[i] == 0) continue;
            long long rest = hi_sum - weights_[i] * store.max_of(vars_[i]);
            long long lb = ceil_div(bound_ - rest, weights_[i]);
            if (lb > store.min_of(vars_[i]))
                store.prune_below(vars_[i], static_cast<int>(lb));
        }
        lo_sum = 0;
        for (size_t i = 0; i < vars_.size(); ++i)
            lo_sum += weights_[i] * store.min_of(vars_[i]);
        return lo_sum >= bound_ ? PropagationOutcome::Entailed : PropagationOutcome::Fixpoint;
    }

private:
    static long long ceil_div(long long a, long long b) {
        long long q = a / b;
        if (a % b > 0) ++q;
        return q;
    }

    std::vector<long long> weights_;
    std::vector<VarId> vars_;
    long long bound_;
};

/// GAC lexicographic xs <=lex ys over equal-length disjoint vectors.
/// Positions before the first floor/ceiling difference are forced equal;
/// the position at the difference is bounded, later positions are free.
class LexLeqConstraint final : public Constraint {
public:
    LexLeqConstraint(const DomainStore& store, std::vector<VarId> xs, std::vector<VarId> ys)
        : xs_(std::move(xs)), ys_(std::move(ys)) {
        if (xs_.size() != ys_.size())
            throw ModelError("lex_leq: vectors must have equal length");
        std::unordered_set<int32_t> seen;
        for (VarId v : xs_) {
            if (!store.valid(v)) throw ModelError("lex_leq: invalid VarId in xs");
            seen.insert(v.index);
        }
        for (VarId v : ys_) {
            if (!store.valid(v)) throw ModelError("lex_leq: invalid VarId in ys");
            if (seen.count(v.index))
                throw ModelError("lex_leq: xs and ys must be disjoint variable sets");
        }
        scope_ = xs_;
        scope_.insert(scope_.end(), ys_.begin(), ys_.end());
    }

    std::span<const VarId> scope() const override { return scope_; }

    PropagationOutcome propagate(DomainStore& store) override {
        const size_t n = xs_.size();
        size_t k = 0;
        while (k < n && store.min_of(xs_[k]) == store.max_of(ys_[k])) ++k;
        if (k < n && store.min_of(xs_[k]) > store.max_of(ys_[k]))
            return PropagationOutcome::Failure;
        for (size_t i = 0; i < k && i < n; ++i) {
            store.prune_above(xs_[i], store.min_of(xs_[i]));
            store.prune_below(ys_[i], store.max_of(ys_[i]));
        }
        if (k == n) return PropagationOutcome::Entailed; // all pairs pinned equal
        // floors(xs) <lex ceilings(ys) at k; does the suffix admit equality at k?
        bool suffix_ok = true;
        for (size_t j = k + 1; j < n; ++j) {
            int fx = store.min_of(xs_[j]), cy = store.max_of(ys_[j]);
            if (fx < cy) break;
            if (fx > cy) {
                suffix_ok = false;
                break;
            }
        }
        store.prune_above(xs_[k], store.max_of(ys_[k]) - (suffix_ok ? 0 : 1));
        store.prune_below(ys_[k], store.min_of(xs_[k]) + (suffix_ok ? 0 : 1));
        // Entailed iff even x at ceilings and y at floors satisfies.
        for (size_t i = 0; i < n; ++i) {
            int cx = store.max_of(xs_[i]), fy = store.min_of(ys_[i]);
            if (cx < fy) return PropagationOutcome::Entailed;
            if (cx > fy) return PropagationOutcome::Fixpoint;
        }
        return PropagationOutcome::Entailed;
    }

private:
    std::vector<VarId> xs_, ys_, scope_;
};

} // namespace msetord

#endif
