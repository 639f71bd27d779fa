#ifndef MSETORD_DIFFCHECK_HPP
#define MSETORD_DIFFCHECK_HPP

// Randomized differential harness: random instances are propagated by the
// GAC propagator and independently solved by the enumeration oracle; any
// disagreement is reported with a reproducer dump.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msetord/constraint.hpp"
#include "msetord/domain.hpp"
#include "msetord/oracle.hpp"

namespace msetord {

struct DiffConfig {
    uint64_t seed = 42;
    long long trials = 10000;
    int max_n = 4;     // per-side vector length 0..max_n
    int max_width = 5; // range width 1..max_width
    long long product_cap = 20000; // per-instance assignment budget
    bool inject_bug = false;       // harness self-test: pretend y pruning was skipped
};

struct DiffReport {
    long long trials = 0;
    long long mismatches = 0;
    std::string first_counterexample;
};

namespace detail {

inline std::string dump_domains(const std::vector<std::vector<int>>& doms) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < doms.size(); ++i) {
        if (i) os << ' ';
        os << '{';
        for (size_t k = 0; k < doms[i].size(); ++k) {
            if (k) os << ',';
            os << doms[i][k];
        }
        os << '}';
    }
    os << ']';
    return os.str();
}

} // namespace detail

inline DiffReport run_differential_check(const DiffConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    DiffReport report;
    DomainStore store;

    for (long long trial = 0; trial < cfg.trials; ++trial) {
        report.trials++;
        std::uniform_int_distribution<int> len_dist(0, cfg.max_n);
        std::uniform_int_distribution<int> width_dist(1, cfg.max_width);
        std::uniform_int_distribution<int> lo_dist(-3, 3);
        int n = len_dist(rng), m = len_dist(rng);
        int w = width_dist(rng), lo = lo_dist(rng);
        bool strict = (rng() & 1) != 0;

        oracle::OracleInstance inst;
        inst.strict = strict;
        for (;;) {
            inst.xs.clear();
            inst.ys.clear();
            long long product = 1;
            std::uniform_int_distribution<uint64_t> mask_dist(1, (uint64_t{1} << w) - 1);
            for (int i = 0; i < n + m; ++i) {
                uint64_t mask = mask_dist(rng);
                std::vector<int> vals;
                for (int b = 0; b < w; ++b)
                    if (mask & (uint64_t{1} << b)) vals.push_back(lo + b);
                product *= static_cast<long long>(vals.size());
                (i < n ? inst.xs : inst.ys).push_back(std::move(vals));
            }
            if (product <= cfg.product_cap) break;
        }

        store.reset();
        std::vector<VarId> xs, ys;
        for (const auto& d : inst.xs) xs.push_back(store.new_var(d));
        for (const auto& d : inst.ys) ys.push_back(store.new_var(d));
        MsetOrderingConstraint c(store, xs, ys, strict);
        PropagationOutcome out = c.propagate(store);

        std::vector<std::vector<int>> got_xs, got_ys;
        for (VarId v : xs) got_xs.push_back(store.values_of(v));
        for (VarId v : ys) got_ys.push_back(store.values_of(v));
        if (cfg.inject_bug && out != PropagationOutcome::Failure) got_ys = inst.ys;

        auto expect = oracle::oracle_gac(inst);
        bool ok;
        if (expect.failed) {
            ok = out == PropagationOutcome::Failure;
        } else {
            ok = out != PropagationOutcome::Failure && got_xs == expect.xs && got_ys == expect.ys;
        }
        if (!ok) {
            report.mismatches++;
            if (report.first_counterexample.empty()) {
                std::ostringstream os;
                os << "seed=" << cfg.seed << " trial=" << trial << " rel=" << (strict ? "lt" : "leq")
                   << " range=[" << lo << "," << lo + w - 1 << "]\n"
                   << "  xs=" << detail::dump_domains(inst.xs)
                   << " ys=" << detail::dump_domains(inst.ys) << "\n";
                if (expect.failed) {
                    os << "  oracle: FAILURE, propagator outcome differs\n";
                } else {
                    os << "  oracle xs=" << detail::dump_domains(expect.xs)
                       << " ys=" << detail::dump_domains(expect.ys) << "\n"
                       << "  got    xs=" << detail::dump_domains(got_xs)
                       << " ys=" << detail::dump_domains(got_ys)
                       << (out == PropagationOutcome::Failure ? " (spurious FAILURE)\n" : "\n");
                }
                report.first_counterexample = os.str();
            }
        }
    }
    return report;
}

} // namespace msetord

#endif
