#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "msetord/domain.hpp"

using namespace msetord;

TEST_CASE("new_var sets up caches") {
    DomainStore store;
    VarId a = store.new_var({1, 2, 3});
    CHECK(store.min_of(a) == 1);
    CHECK(store.max_of(a) == 3);
    CHECK(store.size_of(a) == 3);

    VarId b = store.new_var({5});
    CHECK(store.is_bound(b));
    CHECK(store.min_of(b) == 5);
    CHECK(store.max_of(b) == 5);

    VarId c = store.new_var({0, 2});
    CHECK(store.min_of(c) == 0);
    CHECK(store.max_of(c) == 2);
    CHECK(store.size_of(c) == 2);
    CHECK_FALSE(store.contains(c, 1));

    CHECK_THROWS_AS(store.new_var(std::initializer_list<int>{}), ModelError);
}

TEST_CASE("new_var respects the store's global range") {
    DomainStore store(ValueRange(0, 10));
    CHECK_THROWS_AS(store.new_var({-1, 2}), ModelError);
    CHECK_THROWS_AS(store.new_var_range(5, 11), ModelError);
    CHECK_NOTHROW(store.new_var_range(0, 10));
}

TEST_CASE("prune_above") {
    DomainStore store;
    VarId v = store.new_var({1, 2, 3});
    CHECK(store.prune_above(v, 2) == PruneResult::Changed);
    CHECK(store.values_of(v) == std::vector<int>{1, 2});

    VarId w = store.new_var({1, 2});
    CHECK(store.prune_above(w, 5) == PruneResult::Unchanged);

    VarId z = store.new_var({3});
    CHECK(store.prune_above(z, 2) == PruneResult::Failure);
    CHECK(store.values_of(z) == std::vector<int>{3}); // failure leaves the domain intact
}

TEST_CASE("prune_below") {
    DomainStore store;
    VarId v = store.new_var({1, 2, 3});
    CHECK(store.prune_below(v, 3) == PruneResult::Changed);
    CHECK(store.values_of(v) == std::vector<int>{3});

    VarId w = store.new_var({1, 2});
    CHECK(store.prune_below(w, 0) == PruneResult::Unchanged);

    VarId z = store.new_var({1});
    CHECK(store.prune_below(z, 2) == PruneResult::Failure);
    CHECK(store.values_of(z) == std::vector<int>{1});
}

TEST_CASE("remove_value and assign maintain caches") {
    DomainStore store;
    VarId v = store.new_var({0, 3, 7});
    CHECK(store.remove_value(v, 3) == PruneResult::Changed);
    CHECK(store.remove_value(v, 3) == PruneResult::Unchanged);
    CHECK(store.min_of(v) == 0);
    CHECK(store.max_of(v) == 7);
    CHECK(store.remove_value(v, 0) == PruneResult::Changed);
    CHECK(store.min_of(v) == 7);
    CHECK(store.remove_value(v, 7) == PruneResult::Failure);

    VarId w = store.new_var({2, 4, 6});
    CHECK(store.assign(w, 4) == PruneResult::Changed);
    CHECK(store.is_bound(w));
    CHECK(store.min_of(w) == 4);
    CHECK(store.assign(w, 4) == PruneResult::Unchanged);
    CHECK(store.assign(w, 6) == PruneResult::Failure);
}

TEST_CASE("mark and undo restore exact domains") {
    DomainStore store;
    VarId x = store.new_var({0, 2, 5});

    SECTION("undo restores a prune") {
        MarkToken m = store.mark();
        store.prune_above(x, 1);
        CHECK(store.values_of(x) == std::vector<int>{0});
        store.undo_to(m);
        CHECK(store.values_of(x) == std::vector<int>{0, 2, 5});
        CHECK(store.min_of(x) == 0);
        CHECK(store.max_of(x) == 5);
        CHECK(store.size_of(x) == 3);
    }

    SECTION("undo with no changes is a no-op") {
        MarkToken m = store.mark();
        store.undo_to(m);
        CHECK(store.values_of(x) == std::vector<int>{0, 2, 5});
    }

    SECTION("nested marks undo innermost-first") {
        MarkToken outer = store.mark();
        store.remove_value(x, 5);
        MarkToken inner = store.mark();
        store.remove_value(x, 0);
        CHECK(store.values_of(x) == std::vector<int>{2});
        store.undo_to(inner);
        CHECK(store.values_of(x) == std::vector<int>{0, 2});
        store.undo_to(outer);
        CHECK(store.values_of(x) == std::vector<int>{0, 2, 5});
    }

    SECTION("non-LIFO undo is a usage error") {
        MarkToken outer = store.mark();
        store.remove_value(x, 5);
        MarkToken inner = store.mark();
        CHECK_THROWS_AS(store.undo_to(outer), UsageError);
        store.undo_to(inner);
        store.undo_to(outer);
        CHECK_THROWS_AS(store.undo_to(outer), UsageError); // token already consumed
    }
}

namespace {

// Shadow implementation: plain value-set copies snapshotted at each mark.
struct ShadowStore {
    std::vector<std::set<int>> domains;
    std::vector<std::vector<std::set<int>>> snapshots;

    void mark() { snapshots.push_back(domains); }
    void undo() {
        domains = snapshots.back();
        snapshots.pop_back();
    }
};

} // namespace

TEST_CASE("randomized scripts agree with a copy-on-write shadow") {
    std::mt19937_64 rng(2024);
    for (int script = 0; script < 10000; ++script) {
        DomainStore store;
        ShadowStore shadow;
        std::vector<VarId> vars;
        std::vector<MarkToken> tokens;

        int nvars = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < nvars; ++i) {
            std::set<int> dom;
            int size = 1 + static_cast<int>(rng() % 6);
            for (int k = 0; k < size; ++k) dom.insert(static_cast<int>(rng() % 12));
            std::vector<int> values(dom.begin(), dom.end());
            vars.push_back(store.new_var(values));
            shadow.domains.push_back(dom);
        }

        auto agree = [&] {
            for (int i = 0; i < nvars; ++i) {
                auto got = store.values_of(vars[static_cast<size_t>(i)]);
                std::vector<int> want(shadow.domains[static_cast<size_t>(i)].begin(),
                                      shadow.domains[static_cast<size_t>(i)].end());
                if (got != want) return false;
                // caches agree with the bitset at every step
                if (store.min_of(vars[static_cast<size_t>(i)]) != want.front()) return false;
                if (store.max_of(vars[static_cast<size_t>(i)]) != want.back()) return false;
                if (store.size_of(vars[static_cast<size_t>(i)]) !=
                    static_cast<int>(want.size()))
                    return false;
            }
            return true;
        };

        int ops = 10 + static_cast<int>(rng() % 25);
        for (int op = 0; op < ops; ++op) {
            int kind = static_cast<int>(rng() % 6);
            int vi = static_cast<int>(rng() % static_cast<unsigned>(nvars));
            VarId v = vars[static_cast<size_t>(vi)];
            std::set<int>& dom = shadow.domains[static_cast<size_t>(vi)];
            int value = static_cast<int>(rng() % 13) - 1;
            switch (kind) {
                case 0: {
                    PruneResult r = store.prune_above(v, value);
                    std::set<int> next;
                    for (int x : dom)
                        if (x <= value) next.insert(x);
                    if (next.empty()) {
                        REQUIRE(r == PruneResult::Failure);
                    } else {
                        REQUIRE(r == (next == dom ? PruneResult::Unchanged : PruneResult::Changed));
                        dom = next;
                    }
                    break;
                }
                case 1: {
                    PruneResult r = store.prune_below(v, value);
                    std::set<int> next;
                    for (int x : dom)
                        if (x >= value) next.insert(x);
                    if (next.empty()) {
                        REQUIRE(r == PruneResult::Failure);
                    } else {
                        REQUIRE(r == (next == dom ? PruneResult::Unchanged : PruneResult::Changed));
                        dom = next;
                    }
                    break;
                }
                case 2: {
                    PruneResult r = store.remove_value(v, value);
                    if (dom.count(value) && dom.size() > 1) {
                        REQUIRE(r == PruneResult::Changed);
                        dom.erase(value);
                    } else if (!dom.count(value)) {
                        REQUIRE(r == PruneResult::Unchanged);
                    } else {
                        REQUIRE(r == PruneResult::Failure);
                    }
                    break;
                }
                case 3: {
                    PruneResult r = store.assign(v, value);
                    if (dom.count(value)) {
                        REQUIRE(r != PruneResult::Failure);
                        dom = {value};
                    } else {
                        REQUIRE(r == PruneResult::Failure);
                    }
                    break;
                }
                case 4:
                    tokens.push_back(store.mark());
                    shadow.mark();
                    break;
                case 5:
                    if (!tokens.empty()) {
                        store.undo_to(tokens.back());
                        tokens.pop_back();
                        shadow.undo();
                    }
                    break;
            }
            REQUIRE(agree());
        }
        while (!tokens.empty()) {
            store.undo_to(tokens.back());
            tokens.pop_back();
            shadow.undo();
            REQUIRE(agree());
        }
    }
}
