#include <doctest.h>

#include <cmath>

#include "swarmsim/error.hpp"
#include "swarmsim/recruit.hpp"

using namespace swarmsim;

TEST_CASE("attractiveness at zero and a few cells away") {
    FireflyParams p;
    CHECK(attractiveness(p, 0.0) == 0.5);
    p.gamma = 0.5;
    CHECK(attractiveness(p, 1.0) == doctest::Approx(0.303265329856316711802).epsilon(1e-14));
}

TEST_CASE("firefly step with neutral sigma moves straight toward the target") {
    FireflyParams p;
    CHECK(firefly_step({10, 10}, {4, 10}, p, 0.5, 0.5) == StepDelta{-1, 0});
    CHECK(firefly_step({10, 10}, {14, 14}, p, 0.5, 0.5) == StepDelta{1, 1});
    CHECK(firefly_step({3, 3}, {3, 3}, p, 0.5, 0.5) == StepDelta{0, 0});
}

TEST_CASE("choose_target prefers the nearer request and breaks ties lexicographically") {
    FireflyParams p;
    const std::vector<HelpRequest> reqs{{1, {10, 5}, 0}, {2, {3, 5}, 0}};
    CHECK(choose_target({4, 5}, reqs, p).coordinator_id == 2);
    const std::vector<HelpRequest> tie{{1, {7, 5}, 0}, {2, {5, 3}, 0}, {3, {3, 5}, 0}};
    // All three at distance 2 from (5,5): smallest (y, x) is (5,3).
    CHECK(choose_target({5, 5}, tie, p).coordinator_id == 2);
    CHECK_THROWS_AS(choose_target({1, 1}, std::span<const HelpRequest>{}, p), SimError);
}

TEST_CASE("choose_target is invariant under beta0 scaling") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<HelpRequest> reqs;
        const int k = 1 + static_cast<int>(rng.index(5));
        for (int i = 0; i < k; ++i)
            reqs.push_back({i, {1 + static_cast<int>(rng.index(30)), 1 + static_cast<int>(rng.index(30))}, 0});
        const Coord pos{1 + static_cast<int>(rng.index(30)), 1 + static_cast<int>(rng.index(30))};
        FireflyParams a;
        FireflyParams b = a;
        b.beta0 = 0.5 + rng.uniform01() * 20.0;
        CHECK(choose_target(pos, reqs, a).coordinator_id == choose_target(pos, reqs, b).coordinator_id);
    }
}

TEST_CASE("without randomization the robot arrives in exactly the Chebyshev distance") {
    Rng rng(99);
    FireflyParams p;
    p.alpha = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        Coord pos{1 + static_cast<int>(rng.index(50)), 1 + static_cast<int>(rng.index(50))};
        const Coord target{1 + static_cast<int>(rng.index(50)), 1 + static_cast<int>(rng.index(50))};
        const int expected = chebyshev(pos, target);
        int steps = 0;
        while (pos != target && steps < 200) {
            const StepDelta d = firefly_step(pos, target, p, rng);
            const int before = chebyshev(pos, target);
            pos.x += d.dx;
            pos.y += d.dy;
            CHECK(chebyshev(pos, target) == before - 1);
            ++steps;
        }
        CHECK(steps == expected);
    }
}

TEST_CASE("step components are always in {-1, 0, 1}") {
    Rng rng(5);
    FireflyParams p;
    p.alpha = 3.0;
    for (int i = 0; i < 2000; ++i) {
        const StepDelta d = firefly_step({25, 25}, {1 + static_cast<int>(rng.index(50)), 1 + static_cast<int>(rng.index(50))},
                                         p, rng);
        CHECK(std::abs(d.dx) <= 1);
        CHECK(std::abs(d.dy) <= 1);
    }
}

TEST_CASE("abandonment threshold") {
    FireflyParams p;  // delta 2
    const std::vector<HelpRequest> far{{0, {9, 1}, 0}};
    CHECK(should_abandon({1, 1}, far, 6.0, p));  // distance 8 >= 8
    const std::vector<HelpRequest> near{{0, {8, 1}, 0}};
    CHECK_FALSE(should_abandon({1, 1}, near, 6.0, p));
    const std::vector<HelpRequest> mixed{{0, {20, 1}, 0}, {1, {3, 1}, 0}};
    CHECK_FALSE(should_abandon({1, 1}, mixed, 6.0, p));
}

TEST_CASE("abandonment is monotone in the margin") {
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::vector<HelpRequest> reqs{{0, {1 + static_cast<int>(rng.index(40)), 1 + static_cast<int>(rng.index(40))}, 0}};
        const Coord pos{1 + static_cast<int>(rng.index(40)), 1 + static_cast<int>(rng.index(40))};
        FireflyParams lo;
        lo.delta_margin = rng.uniform01() * 5.0;
        FireflyParams hi = lo;
        hi.delta_margin += rng.uniform01() * 5.0;
        if (should_abandon(pos, reqs, 6.0, hi)) CHECK(should_abandon(pos, reqs, 6.0, lo));
    }
}

TEST_CASE("acceptance rule") {
    FireflyParams p;
    const std::vector<HelpRequest> reqs{{0, {5, 5}, 0}};
    // w2 = 1 always accepts, w1 = 1 with positive urge always rejects.
    CHECK(accept_recruitment({1, 1}, reqs, Weights::from_w1(0.0), p, 1.0));
    CHECK_FALSE(accept_recruitment({1, 1}, reqs, Weights::from_w1(1.0), p, 0.5));
    // Zero urge accepts regardless of weights.
    CHECK(accept_recruitment({1, 1}, reqs, Weights::from_w1(1.0), p, 0.0));
    const RecruitmentScores s = recruitment_scores({5, 5}, reqs, Weights{0.3, 0.7}, p, 0.5);
    CHECK(s.recruit == doctest::Approx(0.7));
    CHECK(s.explore == doctest::Approx(0.15));
}

TEST_CASE("acceptance is monotone in w2") {
    Rng rng(31);
    FireflyParams p;
    for (int trial = 0; trial < 500; ++trial) {
        const std::vector<HelpRequest> reqs{{0, {1 + static_cast<int>(rng.index(40)), 1 + static_cast<int>(rng.index(40))}, 0}};
        const Coord pos{1 + static_cast<int>(rng.index(40)), 1 + static_cast<int>(rng.index(40))};
        const double urge = rng.uniform01();
        const double w2a = rng.uniform01();
        const double w2b = w2a + (1.0 - w2a) * rng.uniform01();
        if (accept_recruitment(pos, reqs, Weights{1.0 - w2a, w2a}, p, urge))
            CHECK(accept_recruitment(pos, reqs, Weights{1.0 - w2b, w2b}, p, urge));
    }
}

TEST_CASE("weights validation") {
    CHECK_NOTHROW(Weights{0.25, 0.75}.validate());
    try {
        Weights{1.3, -0.3}.validate();
        FAIL("expected WeightConstraint");
    } catch (const SimError& e) {
        CHECK(e.kind() == ErrorKind::WeightConstraint);
    }
    CHECK_THROWS_AS((Weights{0.5, 0.6}.validate()), SimError);
}

TEST_CASE("exploration urge modes") {
    Rng rng(1);
    World w = World::create(3, 3, ObstacleSpec::none(), 0, rng);
    PheromoneField field(3, 3, PheromoneParams{});
    CHECK(exploration_urge(w, field, {2, 2}, UrgeMode::UnexploredFraction) == 1.0);
    CHECK(exploration_urge(w, field, {2, 2}, UrgeMode::PheromoneContrast) == 0.0);
    w.mark_explored({1, 1});
    w.mark_explored({2, 1});
    CHECK(exploration_urge(w, field, {2, 2}, UrgeMode::UnexploredFraction) == 0.75);
    field.set_level({1, 1}, 4.0);
    field.set_level({3, 3}, 1.0);
    CHECK(exploration_urge(w, field, {2, 2}, UrgeMode::PheromoneContrast) == 1.0);
}
