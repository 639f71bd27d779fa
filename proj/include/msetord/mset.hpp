#ifndef MSETORD_MSET_HPP
#define MSETORD_MSET_HPP

// Multisets over a bounded integer range, represented as dense occurrence
// vectors, and the total multiset ordering: compare the largest elements
// first; equivalently, sort both multisets in descending order and compare
// lexicographically, a proper prefix being smaller.

#include <span>
#include <string>
#include <vector>

#include "msetord/errors.hpp"

namespace msetord {

struct ValueRange {
    int lo = 0;
    int hi = 0;

    ValueRange() = default;
    ValueRange(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (lo > hi)
            throw RangeViolation("ValueRange: lo " + std::to_string(lo) +
                                 " exceeds hi " + std::to_string(hi));
    }

    int width() const { return hi - lo + 1; }
    bool contains(int v) const { return v >= lo && v <= hi; }
    bool operator==(const ValueRange&) const = default;
};

enum class MsetOrdering { Less, Equal, Greater };

inline const char* to_string(MsetOrdering o) {
    switch (o) {
        case MsetOrdering::Less: return "LESS";
        case MsetOrdering::Equal: return "EQUAL";
        case MsetOrdering::Greater: return "GREATER";
    }
    return "?";
}

class OccurrenceVector {
public:
    explicit OccurrenceVector(ValueRange range)
        : range_(range), counts_(static_cast<size_t>(range.width()), 0) {}

    ValueRange range() const { return range_; }
    int cardinality() const { return cardinality_; }

    /// Occurrences of `value`; zero outside the range (unrepresentable).
    int count(int value) const {
        if (!range_.contains(value)) return 0;
        return counts_[static_cast<size_t>(value - range_.lo)];
    }

    void add(int value) {
        check_in_range(value);
        ++counts_[static_cast<size_t>(value - range_.lo)];
        ++cardinality_;
    }

    void remove(int value) {
        check_in_range(value);
        int& c = counts_[static_cast<size_t>(value - range_.lo)];
        if (c == 0)
            throw PreconditionError("OccurrenceVector: removing absent value " +
                                    std::to_string(value));
        --c;
        --cardinality_;
    }

    bool operator==(const OccurrenceVector&) const = default;

private:
    void check_in_range(int value) const {
        if (!range_.contains(value))
            throw RangeViolation("value " + std::to_string(value) +
                                 " outside range [" + std::to_string(range_.lo) +
                                 ", " + std::to_string(range_.hi) + "]");
    }

    ValueRange range_;
    std::vector<int> counts_;
    int cardinality_ = 0;
};

inline OccurrenceVector mset_from_values(std::span<const int> values, ValueRange range) {
    OccurrenceVector out(range);
    for (int v : values) out.add(v);
    return out;
}

inline OccurrenceVector mset_from_values(std::initializer_list<int> values, ValueRange range) {
    return mset_from_values(std::span<const int>(values.begin(), values.size()), range);
}

/// Total multiset order. Scans the common range top-down; at the first
/// value where the occurrence counts differ, the multiset with the larger
/// count is the greater one.
inline MsetOrdering mset_compare(const OccurrenceVector& a, const OccurrenceVector& b) {
    if (a.range() != b.range())
        throw RangeViolation("mset_compare: operands use different ranges");
    for (int v = a.range().hi; v >= a.range().lo; --v) {
        int ca = a.count(v), cb = b.count(v);
        if (ca != cb) return ca < cb ? MsetOrdering::Less : MsetOrdering::Greater;
    }
    return MsetOrdering::Equal;
}

inline bool mset_leq(const OccurrenceVector& a, const OccurrenceVector& b) {
    return mset_compare(a, b) != MsetOrdering::Greater;
}

inline bool mset_less(const OccurrenceVector& a, const OccurrenceVector& b) {
    return mset_compare(a, b) == MsetOrdering::Less;
}

/// One element replaced: a copy of `a` with one occurrence of `out_value`
/// exchanged for `in_value`. Cardinality is preserved.
inline OccurrenceVector mset_replace(const OccurrenceVector& a, int out_value, int in_value) {
    OccurrenceVector out = a;
    out.remove(out_value);
    out.add(in_value);
    return out;
}

} // namespace msetord

#endif
