#ifndef MSETORD_ORACLE_HPP
#define MSETORD_ORACLE_HPP

// Brute-force reference implementations used for differential testing.
// These deliberately share no machinery with the occurrence-vector code or
// the propagators: comparison works on descending-sorted sequences, and
// consistency is computed by enumerating the full cartesian product.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "msetord/errors.hpp"
#include "msetord/mset.hpp" // MsetOrdering vocabulary only

namespace msetord::oracle {

/// Multiset comparison by sorting descending and comparing lexicographically,
/// a proper prefix ordered smaller.
inline MsetOrdering oracle_compare(std::span<const int> a, std::span<const int> b) {
    std::vector<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.rbegin(), sa.rend());
    std::sort(sb.rbegin(), sb.rend());
    size_t k = std::min(sa.size(), sb.size());
    for (size_t i = 0; i < k; ++i) {
        if (sa[i] != sb[i]) return sa[i] < sb[i] ? MsetOrdering::Less : MsetOrdering::Greater;
    }
    if (sa.size() == sb.size()) return MsetOrdering::Equal;
    return sa.size() < sb.size() ? MsetOrdering::Less : MsetOrdering::Greater;
}

inline MsetOrdering oracle_compare(std::initializer_list<int> a, std::initializer_list<int> b) {
    return oracle_compare(std::span<const int>(a.begin(), a.size()),
                          std::span<const int>(b.begin(), b.size()));
}

struct OracleInstance {
    std::vector<std::vector<int>> xs; // explicit domain value lists
    std::vector<std::vector<int>> ys;
    bool strict = false;
};

struct OracleGacResult {
    bool failed = false;                  // zero satisfying tuples
    std::vector<std::vector<int>> xs, ys; // pruned domains, ascending
};

namespace detail {

inline long long guarded_product(const OracleInstance& inst, long long guard) {
    long long product = 1;
    for (const auto& d : inst.xs) {
        if (d.empty()) throw OracleScopeError("oracle: empty domain");
        product *= static_cast<long long>(d.size());
        if (product > guard) throw OracleScopeError("oracle: assignment count exceeds guard");
    }
    for (const auto& d : inst.ys) {
        if (d.empty()) throw OracleScopeError("oracle: empty domain");
        product *= static_cast<long long>(d.size());
        if (product > guard) throw OracleScopeError("oracle: assignment count exceeds guard");
    }
    return product;
}

// Descending insertion sort; vectors here are tiny.
inline void sort_desc(std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        int key = v[i];
        size_t j = i;
        while (j > 0 && v[j - 1] < key) {
            v[j] = v[j - 1];
            --j;
        }
        v[j] = key;
    }
}

inline bool tuple_satisfies(std::vector<int>& sx, std::vector<int>& sy, bool strict) {
    sort_desc(sx);
    sort_desc(sy);
    size_t k = std::min(sx.size(), sy.size());
    for (size_t i = 0; i < k; ++i) {
        if (sx[i] != sy[i]) return sx[i] < sy[i];
    }
    if (sx.size() < sy.size()) return true;
    if (sx.size() > sy.size()) return false;
    return !strict;
}

template <class OnSat>
inline void enumerate(const OracleInstance& inst, OnSat&& on_sat) {
    const size_t n = inst.xs.size(), m = inst.ys.size();
    std::vector<const std::vector<int>*> doms;
    doms.reserve(n + m);
    for (const auto& d : inst.xs) doms.push_back(&d);
    for (const auto& d : inst.ys) doms.push_back(&d);

    std::vector<size_t> idx(n + m, 0);
    std::vector<int> sx(n), sy(m);
    for (;;) {
        for (size_t i = 0; i < n; ++i) sx[i] = (*doms[i])[idx[i]];
        for (size_t j = 0; j < m; ++j) sy[j] = (*doms[n + j])[idx[n + j]];
        if (tuple_satisfies(sx, sy, inst.strict)) {
            if (on_sat(idx)) return;
        }
        size_t p = 0;
        while (p < idx.size() && ++idx[p] == doms[p]->size()) idx[p++] = 0;
        if (p == idx.size()) return;
    }
}

} // namespace detail

constexpr long long kOracleGuard = 10000000; // 10^7 assignments

/// Definitional GAC: a value stays iff some full assignment through it
/// satisfies the ordering. Exact, by exhaustive enumeration.
inline OracleGacResult oracle_gac(const OracleInstance& inst) {
    detail::guarded_product(inst, kOracleGuard);
    const size_t n = inst.xs.size(), m = inst.ys.size();
    std::vector<std::vector<char>> sup(n + m);
    for (size_t i = 0; i < n; ++i) sup[i].assign(inst.xs[i].size(), 0);
    for (size_t j = 0; j < m; ++j) sup[n + j].assign(inst.ys[j].size(), 0);

    bool any = false;
    detail::enumerate(inst, [&](const std::vector<size_t>& idx) {
        any = true;
        for (size_t p = 0; p < idx.size(); ++p) sup[p][idx[p]] = 1;
        return false;
    });

    OracleGacResult out;
    if (!any) {
        out.failed = true;
        return out;
    }
    out.xs.resize(n);
    out.ys.resize(m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < inst.xs[i].size(); ++k)
            if (sup[i][k]) out.xs[i].push_back(inst.xs[i][k]);
        std::sort(out.xs[i].begin(), out.xs[i].end());
        out.xs[i].erase(std::unique(out.xs[i].begin(), out.xs[i].end()), out.xs[i].end());
    }
    for (size_t j = 0; j < m; ++j) {
        for (size_t k = 0; k < inst.ys[j].size(); ++k)
            if (sup[n + j][k]) out.ys[j].push_back(inst.ys[j][k]);
        std::sort(out.ys[j].begin(), out.ys[j].end());
        out.ys[j].erase(std::unique(out.ys[j].begin(), out.ys[j].end()), out.ys[j].end());
    }
    return out;
}

inline bool oracle_satisfiable(const OracleInstance& inst) {
    detail::guarded_product(inst, kOracleGuard);
    bool any = false;
    detail::enumerate(inst, [&](const std::vector<size_t>&) {
        any = true;
        return true;
    });
    return any;
}

} // namespace msetord::oracle

#endif
