#include <catch2/catch.hpp>

#include <random>

#include "msetord/engine.hpp"
#include "testutil.hpp"

using namespace msetord;

TEST_CASE("propagate_to_fixpoint") {
    SECTION("msetord reaches fixpoint with pruned domains") {
        Model m;
        std::vector<VarId> xs{m.new_var({1, 2, 3}), m.new_var({1, 2, 3})};
        std::vector<VarId> ys{m.new_var({2}), m.new_var({2})};
        m.emplace<MsetOrderingConstraint>(xs, ys, false);
        CHECK(m.propagate_to_fixpoint() == PropagationOutcome::Fixpoint);
        CHECK(m.store().values_of(xs[0]) == std::vector<int>{1, 2});
        CHECK(m.store().values_of(xs[1]) == std::vector<int>{1, 2});
    }
    SECTION("contradiction fails") {
        Model m;
        VarId v = m.new_var({1});
        m.emplace<SumEqConstraint>(std::vector<VarId>{v}, 5LL);
        CHECK(m.propagate_to_fixpoint() == PropagationOutcome::Failure);
    }
    SECTION("no constraints, no changes") {
        Model m;
        VarId v = m.new_var({0, 1});
        CHECK(m.propagate_to_fixpoint() == PropagationOutcome::Fixpoint);
        CHECK(m.store().values_of(v) == std::vector<int>{0, 1});
    }
}

TEST_CASE("solve_all enumerates in static order with ascending values") {
    Model m;
    m.new_var({0, 1});
    m.new_var({0, 1});
    SolveResult r = m.solve_all();
    REQUIRE(r.stats.solutions == 4);
    CHECK(r.solutions == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("strict pair keeps only x < y") {
    Model m;
    std::vector<VarId> xs{m.new_var({0, 1})};
    std::vector<VarId> ys{m.new_var({0, 1})};
    m.emplace<MsetOrderingConstraint>(xs, ys, true);
    SolveResult r = m.solve_all();
    CHECK(r.solutions == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("solution caps stop the search early") {
    Model m;
    m.new_var({0, 1});
    m.new_var({0, 1});
    SolveResult capped = m.solve_all(1);
    CHECK(capped.stats.solutions == 1);
    CHECK(capped.solutions == std::vector<std::vector<int>>{{0, 0}});

    SolveResult first = m.solve_first();
    CHECK(first.solutions == capped.solutions);

    CHECK(m.solve_all(0).stats.solutions == 0);
}

TEST_CASE("solving twice is deterministic, including node counts") {
    auto make = [] {
        Model m;
        std::vector<VarId> xs{m.new_var({0, 1, 2}), m.new_var({0, 1, 2})};
        std::vector<VarId> ys{m.new_var({0, 1, 2})};
        m.emplace<MsetOrderingConstraint>(xs, ys, false);
        m.emplace<SumEqConstraint>(std::vector<VarId>{xs[0], xs[1]}, 2LL);
        return m;
    };
    Model a = make();
    SolveResult ra1 = a.solve_all();
    SolveResult ra2 = a.solve_all(); // same model object, root state restored
    Model b = make();
    SolveResult rb = b.solve_all();
    CHECK(ra1.solutions == rb.solutions);
    CHECK(ra1.stats.nodes == rb.stats.nodes);
    CHECK(ra1.stats.failures == rb.stats.failures);
    CHECK(ra1.solutions == ra2.solutions);
    CHECK(ra1.stats.nodes == ra2.stats.nodes);
}

TEST_CASE("random mixed models match raw cartesian enumeration") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        testutil::MixedModel desc = testutil::random_mixed_model(rng);
        Model model = testutil::build_mixed_model(desc);
        SolveResult got = model.solve_all();
        auto want = testutil::enumerate_mixed_solutions(desc);
        std::vector<std::vector<int>> got_sorted = got.solutions;
        std::sort(got_sorted.begin(), got_sorted.end());
        std::sort(want.begin(), want.end());
        REQUIRE(got_sorted == want);
        REQUIRE(got.stats.failures <= got.stats.nodes + 1);
        REQUIRE(got.stats.solutions == static_cast<long long>(want.size()));
    }
}

TEST_CASE("adding a msetord chain never adds solutions") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        testutil::MixedModel desc = testutil::random_mixed_model(rng, 6, 3);
        Model plain = testutil::build_mixed_model(desc);
        auto base = plain.solve_all().solutions;

        // chain over two disjoint halves of the variables
        Model chained = testutil::build_mixed_model(desc);
        size_t half = desc.domains.size() / 2;
        if (half == 0) continue;
        std::vector<VarId> lo_half, hi_half;
        for (size_t i = 0; i < half; ++i) lo_half.push_back(VarId{static_cast<int32_t>(i)});
        for (size_t i = half; i < 2 * half; ++i) hi_half.push_back(VarId{static_cast<int32_t>(i)});
        chained.emplace<MsetOrderingConstraint>(lo_half, hi_half, false);
        auto constrained = chained.solve_all().solutions;

        std::sort(base.begin(), base.end());
        std::sort(constrained.begin(), constrained.end());
        REQUIRE(constrained.size() <= base.size());
        for (const auto& sol : constrained)
            REQUIRE(std::binary_search(base.begin(), base.end(), sol));
    }
}

TEST_CASE("a solved model leaves its root state untouched") {
    Model m;
    VarId v = m.new_var({0, 1, 2});
    std::vector<VarId> xs{v};
    std::vector<VarId> ys{m.new_var({1})};
    m.emplace<MsetOrderingConstraint>(xs, ys, false);
    m.solve_all();
    CHECK(m.store().values_of(v) == std::vector<int>{0, 1, 2});
}

TEST_CASE("constraints over invalid variables are rejected") {
    Model m;
    m.new_var({0, 1});
    DomainStore other;
    other.new_var({0, 1});
    VarId foreign = other.new_var({0, 1}); // index 1: valid in `other`, not in `m`
    CHECK_THROWS_AS(m.add(std::make_unique<SumEqConstraint>(other, std::vector<VarId>{foreign}, 1LL)),
                    ModelError);
}
