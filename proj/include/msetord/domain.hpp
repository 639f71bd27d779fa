#ifndef MSETORD_DOMAIN_HPP
#define MSETORD_DOMAIN_HPP

// Trailed finite-domain variable store. Domains are bitsets over each
// variable's initial range, pooled in one word array. The trail records
// individual removed values, so backtracking costs what the forward work
// cost. An empty domain is reported as Failure and never stored.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msetord/errors.hpp"
#include "msetord/mset.hpp"

namespace msetord {

struct VarId {
    int32_t index = -1;
    bool operator==(const VarId&) const = default;
};

enum class PruneResult { Unchanged, Changed, Failure };

struct MarkToken {
    size_t trail_pos = 0;
    size_t mark_index = 0;
};

class DomainStore {
public:
    explicit DomainStore(ValueRange global = ValueRange(-1000000000, 1000000000))
        : global_(global) {}

    VarId new_var(std::span<const int> values) {
        if (values.empty())
            throw ModelError("new_var: empty initial domain");
        int lo = values[0], hi = values[0];
        for (int v : values) {
            if (!global_.contains(v))
                throw ModelError("new_var: value " + std::to_string(v) +
                                 " outside the store's global range");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        VarSlot s;
        s.base = lo;
        s.word_off = static_cast<int32_t>(words_.size());
        s.num_words = (hi - lo) / 64 + 1;
        words_.resize(words_.size() + static_cast<size_t>(s.num_words), 0);
        int size = 0;
        for (int v : values) {
            uint64_t& w = words_[static_cast<size_t>(s.word_off) + static_cast<size_t>(v - lo) / 64];
            uint64_t bit = uint64_t{1} << ((v - lo) % 64);
            if (!(w & bit)) {
                w |= bit;
                ++size;
            }
        }
        s.min = lo;
        s.max = hi;
        s.size = size;
        slots_.push_back(s);
        return VarId{static_cast<int32_t>(slots_.size() - 1)};
    }

    VarId new_var(std::initializer_list<int> values) {
        return new_var(std::span<const int>(values.begin(), values.size()));
    }

    /// Contiguous initial domain [lo, hi].
    VarId new_var_range(int lo, int hi) {
        if (lo > hi) throw ModelError("new_var_range: empty interval");
        if (!global_.contains(lo) || !global_.contains(hi))
            throw ModelError("new_var_range: interval outside the store's global range");
        VarSlot s;
        s.base = lo;
        s.word_off = static_cast<int32_t>(words_.size());
        s.num_words = (hi - lo) / 64 + 1;
        words_.resize(words_.size() + static_cast<size_t>(s.num_words), 0);
        for (int v = lo; v <= hi; ++v)
            words_[static_cast<size_t>(s.word_off) + static_cast<size_t>(v - lo) / 64] |=
                uint64_t{1} << ((v - lo) % 64);
        s.min = lo;
        s.max = hi;
        s.size = hi - lo + 1;
        slots_.push_back(s);
        return VarId{static_cast<int32_t>(slots_.size() - 1)};
    }

    size_t num_vars() const { return slots_.size(); }

    bool valid(VarId v) const {
        return v.index >= 0 && static_cast<size_t>(v.index) < slots_.size();
    }

    int min_of(VarId v) const { return slot(v).min; }
    int max_of(VarId v) const { return slot(v).max; }
    int size_of(VarId v) const { return slot(v).size; }
    bool is_bound(VarId v) const { return slot(v).size == 1; }

    bool contains(VarId v, int value) const {
        const VarSlot& s = slot(v);
        if (value < s.min || value > s.max) return false;
        return (word_for(s, value) >> bit_for(s, value)) & 1u;
    }

    /// Current domain, ascending. For reporting and tests.
    std::vector<int> values_of(VarId v) const {
        const VarSlot& s = slot(v);
        std::vector<int> out;
        out.reserve(static_cast<size_t>(s.size));
        for (int w = 0; w < s.num_words; ++w) {
            uint64_t bits = words_[static_cast<size_t>(s.word_off + w)];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                out.push_back(s.base + w * 64 + b);
            }
        }
        return out;
    }

    /// Remove every value strictly above `bound`.
    PruneResult prune_above(VarId v, int bound) {
        VarSlot& s = slot(v);
        if (bound >= s.max) return PruneResult::Unchanged;
        if (bound < s.min) return PruneResult::Failure;
        remove_bits(v, s, bound + 1, s.max);
        s.max = highest_at_most(s, bound);
        touch(v);
        return PruneResult::Changed;
    }

    /// Remove every value strictly below `bound`.
    PruneResult prune_below(VarId v, int bound) {
        VarSlot& s = slot(v);
        if (bound <= s.min) return PruneResult::Unchanged;
        if (bound > s.max) return PruneResult::Failure;
        remove_bits(v, s, s.min, bound - 1);
        s.min = lowest_at_least(s, bound);
        touch(v);
        return PruneResult::Changed;
    }

    PruneResult remove_value(VarId v, int value) {
        VarSlot& s = slot(v);
        if (!contains(v, value)) return PruneResult::Unchanged;
        if (s.size == 1) return PruneResult::Failure;
        words_[static_cast<size_t>(s.word_off) + static_cast<size_t>(value - s.base) / 64] &=
            ~(uint64_t{1} << ((value - s.base) % 64));
        --s.size;
        trail_.push_back({v.index, value});
        if (value == s.min) s.min = lowest_at_least(s, value + 1);
        if (value == s.max) s.max = highest_at_most(s, value - 1);
        touch(v);
        return PruneResult::Changed;
    }

    PruneResult assign(VarId v, int value) {
        if (!contains(v, value)) return PruneResult::Failure;
        PruneResult a = prune_above(v, value);
        PruneResult b = prune_below(v, value);
        return (a == PruneResult::Changed || b == PruneResult::Changed)
                   ? PruneResult::Changed
                   : PruneResult::Unchanged;
    }

    MarkToken mark() {
        marks_.push_back(trail_.size());
        return MarkToken{trail_.size(), marks_.size() - 1};
    }

    /// Restores every domain to its exact state at `t`. Tokens must be
    /// undone innermost-first.
    void undo_to(MarkToken t) {
        if (marks_.empty() || t.mark_index != marks_.size() - 1 ||
            marks_.back() != t.trail_pos)
            throw UsageError("undo_to: marks must be undone in LIFO order");
        while (trail_.size() > t.trail_pos) {
            const TrailEntry e = trail_.back();
            trail_.pop_back();
            VarSlot& s = slots_[static_cast<size_t>(e.var)];
            words_[static_cast<size_t>(s.word_off) + static_cast<size_t>(e.value - s.base) / 64] |=
                uint64_t{1} << ((e.value - s.base) % 64);
            ++s.size;
            if (e.value < s.min) s.min = e.value;
            if (e.value > s.max) s.max = e.value;
        }
        marks_.pop_back();
        changed_.clear();
    }

    size_t trail_size() const { return trail_.size(); }
    size_t num_marks() const { return marks_.size(); }

    /// Variables whose domains changed since the last drain. May contain
    /// duplicates.
    std::vector<VarId>& changed() { return changed_; }

    /// Drop all variables and trail state, keeping allocated capacity.
    void reset() {
        slots_.clear();
        words_.clear();
        trail_.clear();
        marks_.clear();
        changed_.clear();
    }

private:
    struct VarSlot {
        int32_t word_off = 0;
        int32_t num_words = 0;
        int32_t base = 0;
        int32_t min = 0;
        int32_t max = 0;
        int32_t size = 0;
    };

    struct TrailEntry {
        int32_t var;
        int32_t value;
    };

    const VarSlot& slot(VarId v) const {
        if (!valid(v)) throw ModelError("invalid VarId");
        return slots_[static_cast<size_t>(v.index)];
    }
    VarSlot& slot(VarId v) {
        if (!valid(v)) throw ModelError("invalid VarId");
        return slots_[static_cast<size_t>(v.index)];
    }

    uint64_t word_for(const VarSlot& s, int value) const {
        return words_[static_cast<size_t>(s.word_off) + static_cast<size_t>(value - s.base) / 64];
    }
    static int bit_for(const VarSlot& s, int value) { return (value - s.base) % 64; }

    // Clears all set bits with values in [from, to], trailing each removal.
    void remove_bits(VarId v, VarSlot& s, int from, int to) {
        int lo_bit = from - s.base, hi_bit = to - s.base;
        for (int w = hi_bit / 64; w >= lo_bit / 64; --w) {
            uint64_t mask = ~uint64_t{0};
            if (w == hi_bit / 64 && hi_bit % 64 != 63)
                mask &= (uint64_t{1} << (hi_bit % 64 + 1)) - 1;
            if (w == lo_bit / 64) mask &= ~uint64_t{0} << (lo_bit % 64);
            uint64_t& word = words_[static_cast<size_t>(s.word_off + w)];
            uint64_t doomed = word & mask;
            word &= ~mask;
            s.size -= std::popcount(doomed);
            while (doomed) {
                int b = std::countr_zero(doomed);
                doomed &= doomed - 1;
                trail_.push_back({v.index, s.base + w * 64 + b});
            }
        }
    }

    // Highest member <= value; caller guarantees one exists.
    int highest_at_most(const VarSlot& s, int value) const {
        int bit = value - s.base;
        for (int w = bit / 64; w >= 0; --w) {
            uint64_t word = words_[static_cast<size_t>(s.word_off + w)];
            if (w == bit / 64 && bit % 64 != 63) word &= (uint64_t{1} << (bit % 64 + 1)) - 1;
            if (word) return s.base + w * 64 + 63 - std::countl_zero(word);
        }
        return s.base - 1; // unreachable under the contract
    }

    // Lowest member >= value; caller guarantees one exists.
    int lowest_at_least(const VarSlot& s, int value) const {
        int bit = value - s.base;
        for (int w = bit / 64; w < s.num_words; ++w) {
            uint64_t word = words_[static_cast<size_t>(s.word_off + w)];
            if (w == bit / 64) word &= ~uint64_t{0} << (bit % 64);
            if (word) return s.base + w * 64 + std::countr_zero(word);
        }
        return s.base - 1; // unreachable under the contract
    }

    void touch(VarId v) { changed_.push_back(v); }

    ValueRange global_;
    std::vector<VarSlot> slots_;
    std::vector<uint64_t> words_;
    std::vector<TrailEntry> trail_;
    std::vector<size_t> marks_;
    std::vector<VarId> changed_;
};

} // namespace msetord

#endif
