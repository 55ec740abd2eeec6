#include <doctest.h>

#include "swarmsim/error.hpp"
#include "swarmsim/metrics.hpp"

using namespace swarmsim;

TEST_CASE("weighted objective examples") {
    MissionTally t;
    t.visits = {60, 40};
    t.spans = {{0, 0, 10, 30}};
    CHECK(weighted_objective(t, Weights{0.5, 0.5}, 1.0) == doctest::Approx(60.0));

    MissionTally explore_only;
    explore_only.visits = {7, 8};
    CHECK(weighted_objective(explore_only, Weights{1.0, 0.0}, 2.0) == 30.0);

    try {
        weighted_objective(t, Weights{0.6, 0.3}, 1.0);
        FAIL("expected WeightConstraint");
    } catch (const SimError& e) {
        CHECK(e.kind() == ErrorKind::WeightConstraint);
    }
}

TEST_CASE("objective is linear in the weights") {
    MissionTally t;
    t.visits = {13, 29, 4};
    t.spans = {{0, 1, 3, 11}, {1, 1, 5, 9}};
    const double a = weighted_objective(t, Weights{1.0, 0.0}, 1.5);
    const double b = weighted_objective(t, Weights{0.0, 1.0}, 1.5);
    for (double w1 = 0.0; w1 <= 1.0; w1 += 0.125)
        CHECK(weighted_objective(t, Weights::from_w1(w1), 1.5) == doctest::Approx(w1 * a + (1.0 - w1) * b));
}

TEST_CASE("f1 and f2") {
    Rng rng(1);
    World w = World::create(5, 2, ObstacleSpec::none(), 2, rng);
    CHECK(f1(w) == 0.0);
    for (int x = 1; x <= 5; ++x) w.mark_explored({x, 1});
    w.mark_explored({1, 2});
    CHECK(f1(w) == doctest::Approx(0.6));
    CHECK(f2(w) == 0);
    w.targets()[0].status = TargetStatus::Disarmed;
    w.targets()[1].status = TargetStatus::Exploded;
    CHECK(f2(w) == 1);
}

TEST_CASE("constraint check") {
    Rng rng(2);
    World w = World::create(2, 2, ObstacleSpec::none(), 1, rng);
    MissionTally t;
    auto report = check_constraints(t, w, 3);
    CHECK_FALSE(report.every_cell_visited);
    CHECK(report.cells_missing == 4);
    CHECK(report.coalitions_exact);
    for (int y = 1; y <= 2; ++y)
        for (int x = 1; x <= 2; ++x) w.mark_explored({x, y});
    w.targets()[0].status = TargetStatus::Disarmed;
    t.coalitions = {{0, 10, 4, 4}};
    report = check_constraints(t, w, 3);
    CHECK(report.every_cell_visited);
    CHECK_FALSE(report.satisfied());
    CHECK(report.bad_coalitions == std::vector<int>{0});
    t.coalitions = {{0, 10, 3, 3}};
    CHECK(check_constraints(t, w, 3).satisfied());
}
