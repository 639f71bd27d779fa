#ifndef MSETORD_FUZZY_HPP
#define MSETORD_FUZZY_HPP

// Fuzzy / soft-CSP demonstration: every complete assignment gets a multiset
// of constraint violation costs, and assignments minimal under the multiset
// ordering win. Minimizing the cost multiset reduces the worst violations
// first.

#include <vector>

#include "msetord/errors.hpp"
#include "msetord/mset.hpp"
#include "msetord/parse.hpp"

namespace msetord {

struct FuzzyRanking {
    std::vector<int> minimal_profile;                 // costs, descending
    std::vector<std::vector<int>> minimal_assignments; // value per variable
};

constexpr long long kFuzzyGuard = 100000; // total assignments

inline FuzzyRanking rank_fuzzy(const FuzzyProblem& p) {
    long long total = 1;
    for (const auto& v : p.vars) {
        total *= static_cast<long long>(v.domain.size());
        if (total > kFuzzyGuard)
            throw UsageError("fuzzy problem exceeds the assignment guard");
    }

    const ValueRange cost_range(0, 4);
    FuzzyRanking best;
    OccurrenceVector best_profile(cost_range);
    bool have_best = false;

    std::vector<size_t> idx(p.vars.size(), 0);
    std::vector<int> assignment(p.vars.size());
    std::vector<int> scope_vals;
    for (;;) {
        for (size_t i = 0; i < p.vars.size(); ++i)
            assignment[i] = p.vars[i].domain[idx[i]];

        OccurrenceVector profile(cost_range);
        for (const auto& soft : p.softs) {
            scope_vals.clear();
            for (size_t vi : soft.scope) scope_vals.push_back(assignment[vi]);
            auto it = soft.costs.find(scope_vals);
            profile.add(it == soft.costs.end() ? 0 : it->second);
        }

        if (!have_best) {
            have_best = true;
            best_profile = profile;
            best.minimal_assignments.assign(1, assignment);
        } else {
            switch (mset_compare(profile, best_profile)) {
                case MsetOrdering::Less:
                    best_profile = profile;
                    best.minimal_assignments.assign(1, assignment);
                    break;
                case MsetOrdering::Equal:
                    best.minimal_assignments.push_back(assignment);
                    break;
                case MsetOrdering::Greater:
                    break;
            }
        }

        // last variable cycles fastest: assignments arrive in lexicographic
        // order of the declaration sequence
        size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == p.vars[pos - 1].domain.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }

    for (int v = cost_range.hi; v >= cost_range.lo; --v)
        for (int k = 0; k < best_profile.count(v); ++k) best.minimal_profile.push_back(v);
    return best;
}

} // namespace msetord

#endif
