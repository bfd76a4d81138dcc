#include "catch_amalgamated.hpp"

#include <cmath>

#include "coordplan/planner.hpp"
#include "support.hpp"

using namespace coordplan;
using fixtures::box;

namespace {

PriorityGraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  PriorityGraph g;
  g.n = n;
  for (auto [w, l] : edges) g.set_priority(w, l);
  return g;
}

}  // namespace

TEST_CASE("cost helpers: bounds, means and incomplete trajectories", "[planner]") {
  REQUIRE(cost_bounds(2).first == 1.0);
  REQUIRE(cost_bounds(2).second == 1.5);
  REQUIRE(cost_bounds(3).second == 2.0);
  REQUIRE_THROWS_AS(cost_bounds(0), std::domain_error);

  Trajectory tr;
  tr.points = {{0.0, {0.0}}, {0.25, {0.25}}, {1.0, {1.0}}};
  REQUIRE(cost(tr) == 1.0);
  REQUIRE(tr.first_passage(1, 0.5) == Catch::Approx(0.5));
  REQUIRE(tr.first_passage(1, 0.0) == 0.0);

  Trajectory stuck;
  stuck.points = {{0.0, {0.0}}, {1.0, {0.5}}};
  REQUIRE_THROWS_AS(cost(stuck), IncompleteTrajectoryError);
}

TEST_CASE("symmetric crossing: the winner never brakes, the loser waits 0.2", "[planner]") {
  CoordinationScenario scn = fixtures::symmetric_pair();
  PlanResult plan = plan_fixed_priority(scn, graph_of(2, {{1, 2}}));

  REQUIRE(plan.exit_times[0] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(plan.exit_times[1] == Catch::Approx(1.2).margin(1e-9));
  REQUIRE(plan.cost == Catch::Approx(1.1).margin(1e-9));

  // Event snapping is exact: the loser parks exactly on 0.4 and resumes
  // exactly when the winner stands on 0.6.
  REQUIRE(plan.trajectory.points.size() == 5);
  REQUIRE(plan.trajectory.points[1].x == std::vector<double>{0.4, 0.4});
  REQUIRE(plan.trajectory.points[2].x == std::vector<double>{0.6, 0.4});
  REQUIRE(plan.trajectory.points[3].x == std::vector<double>{1.0, 0.8});
  REQUIRE(plan.trajectory.points[4].x == std::vector<double>{1.0, 1.0});

  REQUIRE(validate(plan.trajectory, scn).ok);
  PriorityGraph g = plan.graph;
  REQUIRE(validate(plan.trajectory, scn, &g).ok);

  // The mirrored orientation swaps the exit times.
  PlanResult mirror = plan_fixed_priority(scn, graph_of(2, {{2, 1}}));
  REQUIRE(mirror.exit_times[0] == Catch::Approx(1.2).margin(1e-9));
  REQUIRE(mirror.exit_times[1] == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("staggered crossing: the head start decides the cheap order", "[planner]") {
  CoordinationScenario scn = fixtures::staggered_pair();

  PlanResult lead = plan_fixed_priority(scn, graph_of(2, {{1, 2}}));
  REQUIRE(lead.cost == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(lead.exit_times[0] == Catch::Approx(0.9).margin(1e-9));
  REQUIRE(lead.exit_times[1] == Catch::Approx(1.1).margin(1e-9));

  PlanResult yield = plan_fixed_priority(scn, graph_of(2, {{2, 1}}));
  REQUIRE(yield.cost == Catch::Approx(1.1).margin(1e-9));

  PlanResult best = plan_exhaustive(scn);
  REQUIRE(best.cost == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(best.graph.winner(1, 2) == 1);
}

TEST_CASE("three-way conflict: serialization costs one extra stop each", "[planner]") {
  CoordinationScenario scn = fixtures::common_point_3();
  PlanResult plan = plan_fixed_priority(scn, graph_of(3, {{1, 2}, {1, 3}, {2, 3}}));
  REQUIRE(plan.exit_times[0] == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(plan.exit_times[1] == Catch::Approx(1.2).margin(1e-9));
  REQUIRE(plan.exit_times[2] == Catch::Approx(1.4).margin(1e-9));
  REQUIRE(plan.cost == Catch::Approx(1.2).margin(1e-9));
  REQUIRE(validate(plan.trajectory, scn).ok);

  PlanResult best = plan_exhaustive(scn);
  REQUIRE(best.cost == Catch::Approx(1.2).margin(1e-9));
}

TEST_CASE("the realizable ring lets every vehicle drive straight through", "[planner]") {
  CoordinationScenario scn = fixtures::staggered_cycle_3();
  PlanResult ring = plan_fixed_priority(scn, graph_of(3, {{1, 2}, {2, 3}, {3, 1}}));
  REQUIRE(ring.cost == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(validate(ring.trajectory, scn).ok);

  // Exhaustive search lands on that ring: it is the first orientation that
  // reaches the lower bound.
  PlanResult best = plan_exhaustive(scn);
  REQUIRE(best.cost == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(best.graph.winner(1, 2) == 1);
  REQUIRE(best.graph.winner(2, 3) == 2);
  REQUIRE(best.graph.winner(1, 3) == 3);
}

TEST_CASE("planning an unrealizable ring names the blocking cycle", "[planner]") {
  CoordinationScenario scn = fixtures::common_point_3();
  try {
    plan_fixed_priority(scn, graph_of(3, {{1, 2}, {2, 3}, {3, 1}}));
    FAIL("expected an infeasible-graph error");
  } catch (const InfeasibleGraphError& e) {
    REQUIRE(e.witness == std::vector<int>{1, 2, 3});
  }

  PriorityGraph partial = graph_of(3, {{1, 2}});
  REQUIRE_THROWS_AS(plan_fixed_priority(scn, partial), std::logic_error);
}

TEST_CASE("starts past or inside a conflict are rejected up front", "[planner]") {
  CoordinationScenario past = fixtures::symmetric_pair();
  past.x_init = {0.7, 0.0};
  REQUIRE_THROWS_AS(plan_fixed_priority(past, graph_of(2, {{1, 2}})), ScenarioError);

  // (0.5, 0.3) is fine for 1-first but forfeits 2-first: vehicle 1 already
  // stands beyond the entry line it would have to wait at.
  CoordinationScenario mid = fixtures::symmetric_pair();
  mid.x_init = {0.5, 0.3};
  PlanResult lead = plan_fixed_priority(mid, graph_of(2, {{1, 2}}));
  REQUIRE(lead.cost == Catch::Approx(0.6).margin(1e-9));
  REQUIRE_THROWS_AS(plan_fixed_priority(mid, graph_of(2, {{2, 1}})), InfeasibleGraphError);

  // Exhaustive search skips the forfeited orientation instead of failing.
  PlanResult best = plan_exhaustive(mid);
  REQUIRE(best.cost == Catch::Approx(0.6).margin(1e-9));
  REQUIRE(best.graph.winner(1, 2) == 1);
}

TEST_CASE("planned crossings read back as the requested graph", "[planner]") {
  std::mt19937_64 rng(909);
  int planned = 0;
  for (int trial = 0; trial < 12; ++trial) {
    CoordinationScenario scn = fixtures::random_scenario(rng, 3);
    for (const PriorityGraph& g : OrientationRange(scn)) {
      if (!is_feasible(g, scn).feasible) continue;
      PlanResult plan = plan_fixed_priority(scn, g);
      REQUIRE(validate(plan.trajectory, scn).ok);
      REQUIRE(extract_priority_graph(plan.trajectory, scn) == g);
      REQUIRE(plan.trajectory.end_time() <= time_horizon(scn.n));
      ++planned;
    }
  }
  REQUIRE(planned > 40);
}

TEST_CASE("heuristic planning matches the fixed planner on its own graph", "[planner]") {
  CoordinationScenario sym = fixtures::symmetric_pair();
  PlanResult h = plan_heuristic(sym);
  REQUIRE(h.cost == Catch::Approx(1.1).margin(1e-9));
  REQUIRE(h.graph.winner(1, 2) == 1);  // corner tie goes to the lower id
  REQUIRE(validate(h.trajectory, sym, &h.graph).ok);

  CoordinationScenario sta = fixtures::staggered_pair();
  PlanResult hs = plan_heuristic(sta);
  REQUIRE(hs.graph.winner(1, 2) == 1);
  REQUIRE(hs.cost == Catch::Approx(1.0).margin(1e-9));

  CoordinationScenario three = fixtures::common_point_3();
  PlanResult h3 = plan_heuristic(three);
  REQUIRE(is_feasible(h3.graph, three).feasible);
  REQUIRE(h3.cost == Catch::Approx(1.2).margin(1e-9));

  // The heuristic trajectory is the fixed-priority trajectory of the graph
  // it settles on.
  PlanResult again = plan_fixed_priority(three, h3.graph);
  REQUIRE(again.cost == Catch::Approx(h3.cost).margin(1e-12));
  REQUIRE(again.trajectory.points.size() == h3.trajectory.points.size());
}

TEST_CASE("heuristic decisions stay feasible under pressure", "[planner]") {
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 20; ++trial) {
    CoordinationScenario scn = fixtures::random_scenario(rng, 3);
    PlanResult h = plan_heuristic(scn);
    REQUIRE(is_feasible(h.graph, scn).feasible);
    REQUIRE(validate(h.trajectory, scn, &h.graph).ok);
    PlanResult best = plan_exhaustive(scn);
    REQUIRE(h.cost >= best.cost - 1e-9);
  }
}

TEST_CASE("stepped projection tracks the event planner", "[planner]") {
  CoordinationScenario scn = fixtures::symmetric_pair();
  PriorityGraph g = graph_of(2, {{1, 2}});
  PlanResult event = plan_fixed_priority(scn, g);

  PlanResult coarse = simulate_projection(scn, g, 0.1);
  REQUIRE(std::abs(coarse.cost - event.cost) <= 2 * 0.1 * 2);
  REQUIRE(validate(coarse.trajectory, scn).ok);

  PlanResult fine = simulate_projection(scn, g, 1e-3);
  REQUIRE(std::abs(fine.cost - event.cost) <= 2 * 1e-3 * 2);

  // The stepped loser still parks exactly on the entry line.
  bool parked = false;
  for (const auto& bp : fine.trajectory.points) parked = parked || bp.x[1] == 0.4;
  REQUIRE(parked);
}

TEST_CASE("stepped projection stalls on unrealizable rings", "[planner]") {
  CoordinationScenario scn = fixtures::common_point_3();
  PriorityGraph ring = graph_of(3, {{1, 2}, {2, 3}, {3, 1}});
  try {
    simulate_projection(scn, ring, 1e-3);
    FAIL("expected the projection to stall");
  } catch (const DeadlockError& e) {
    REQUIRE(e.time < time_horizon(3));
    REQUIRE(e.time == Catch::Approx(0.4).margin(0.01));
  }
}

TEST_CASE("projection validates its inputs", "[planner]") {
  CoordinationScenario scn = fixtures::symmetric_pair();
  REQUIRE_THROWS_AS(simulate_projection(scn, graph_of(2, {{1, 2}}), 0.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(simulate_projection(scn, PriorityGraph{2, {}}, 1e-2), std::logic_error);
}

TEST_CASE("the validator flags tampered trajectories", "[planner]") {
  CoordinationScenario scn = fixtures::symmetric_pair();
  PlanResult plan = plan_fixed_priority(scn, graph_of(2, {{1, 2}}));
  REQUIRE(validate(plan.trajectory, scn).ok);

  Trajectory collide = plan.trajectory;
  collide.points[2].x = {0.5, 0.5};  // drag the mid breakpoint into the conflict
  REQUIRE_FALSE(validate(collide, scn).ok);

  Trajectory speedy = plan.trajectory;
  speedy.points[1].t = 0.2;  // same distance in half the time
  REQUIRE_FALSE(validate(speedy, scn).ok);

  Trajectory backward = plan.trajectory;
  backward.points[2].x[0] = 0.3;  // retreat below the previous breakpoint
  REQUIRE_FALSE(validate(backward, scn).ok);

  Trajectory short_of_goal = plan.trajectory;
  short_of_goal.points.pop_back();
  REQUIRE_FALSE(validate(short_of_goal, scn).ok);

  PriorityGraph wrong = graph_of(2, {{2, 1}});
  REQUIRE_FALSE(validate(plan.trajectory, scn, &wrong).ok);
}

TEST_CASE("left-greedy positions dominate any sampled compliant run", "[planner]") {
  CoordinationScenario scn = fixtures::symmetric_pair();
  PriorityGraph g = graph_of(2, {{1, 2}});
  PlanResult best = plan_fixed_priority(scn, g);

  // A lazier but order-respecting trajectory: vehicle 1 dawdles, vehicle 2
  // waits longer than necessary.
  Trajectory lazy;
  lazy.points = {{0.0, {0.0, 0.0}},
                 {0.5, {0.3, 0.3}},
                 {0.7, {0.5, 0.4}},
                 {0.9, {0.7, 0.4}},
                 {1.5, {1.0, 0.7}},
                 {1.8, {1.0, 1.0}}};
  REQUIRE(validate(lazy, scn).ok);
  for (int k = 0; k <= 100; ++k) {
    double t = 1.8 * k / 100.0;
    auto ours = best.trajectory.at(t);
    auto theirs = lazy.at(t);
    REQUIRE(ours[0] >= theirs[0] - 1e-12);
    REQUIRE(ours[1] >= theirs[1] - 1e-12);
  }
  REQUIRE(best.cost <= cost(lazy));
}
