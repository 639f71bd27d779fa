#ifndef MSETORD_PERF_HPP
#define MSETORD_PERF_HPP

// Timing harness for the propagation budget: one call on an unbound random
// instance of n variables per side over a width-d range. Each variable gets
// a small random interval, so per-call cost is dominated by the n-length
// scans and the d-length occurrence arrays, never by domain width.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

#include "msetord/constraint.hpp"
#include "msetord/domain.hpp"

namespace msetord {

struct PerfPoint {
    long long n = 0;
    long long d = 0;
    double nanos_per_call = 0;
};

/// Median wall time of one propagation call, in nanoseconds. The store is
/// marked before and restored after every call, so each call repeats the
/// same work.
inline double time_msetord_call(long long n, long long d, uint64_t seed, int calls = 11,
                                bool strict = false) {
    std::mt19937_64 rng(seed);
    DomainStore store;
    std::uniform_int_distribution<long long> base_dist(0, std::max<long long>(0, d - 2));
    std::uniform_int_distribution<int> width_dist(2, 64);

    auto make_side = [&] {
        std::vector<VarId> side;
        side.reserve(static_cast<size_t>(n));
        for (long long i = 0; i < n; ++i) {
            long long lo = base_dist(rng);
            long long hi = std::min<long long>(d - 1, lo + width_dist(rng) - 1);
            side.push_back(store.new_var_range(static_cast<int>(lo), static_cast<int>(hi)));
        }
        return side;
    };
    std::vector<VarId> xs = make_side(), ys = make_side();
    MsetOrderingConstraint c(store, xs, ys, strict);

    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(calls));
    {
        MarkToken warm = store.mark(); // touch everything once before timing
        c.propagate(store);
        store.undo_to(warm);
    }
    for (int i = 0; i < calls; ++i) {
        MarkToken m = store.mark();
        auto t0 = std::chrono::steady_clock::now();
        c.propagate(store);
        auto t1 = std::chrono::steady_clock::now();
        store.undo_to(m);
        samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    return samples[samples.size() / 2];
}

inline std::vector<PerfPoint> run_perf(const std::vector<long long>& n_list,
                                       const std::vector<long long>& d_list, uint64_t seed,
                                       int calls = 11) {
    std::vector<PerfPoint> out;
    for (long long n : n_list)
        for (long long d : d_list)
            out.push_back({n, d, time_msetord_call(n, d, seed, calls)});
    return out;
}

} // namespace msetord

#endif
