// coordplan: cooperative intersection crossing along fixed paths.
//
// Subcommands:
//   compile   geometric scenario -> abstract conflict rectangles
//   plan      fixed / heuristic / exhaustive crossing plans
//   plot      per-pair and time-space SVG pictures of a saved plan
//   verify    exhaustive planner cost against the lattice reference
//
// Exit codes: 0 success, 1 usage or input problem (including a failed
// verification), 2 infeasible priority graph, 3 internal guard tripped.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coordplan/coordspace.hpp"
#include "coordplan/errors.hpp"
#include "coordplan/geometry.hpp"
#include "coordplan/io.hpp"
#include "coordplan/oracle.hpp"
#include "coordplan/planner.hpp"
#include "coordplan/priority.hpp"
#include "coordplan/svg.hpp"

namespace {

std::string graph_literal(const coordplan::PriorityGraph& g) {
  std::string out;
  for (auto [w, l] : g.edges()) {
    if (!out.empty()) out += ",";
    out += std::to_string(w) + ">" + std::to_string(l);
  }
  return out.empty() ? "(none)" : out;
}

int cmd_compile(const std::string& input, int grid, const std::string& out_path) {
  coordplan::ScenarioFile file = coordplan::load_scenario(input);
  if (!file.geometric) throw coordplan::ScenarioError(input + ": compile needs a geometric scenario");
  coordplan::CoordinationScenario scn = coordplan::compile_scenario(*file.geometric, grid);
  coordplan::save_abstract_scenario(scn, out_path);
  std::cout << "vehicles " << scn.n << "\n";
  for (const coordplan::CollisionRect& r : scn.obstacles)
    std::cout << "pair (" << r.i << "," << r.j << ") s_" << r.i << " in (" << r.i_interval.lo
              << "," << r.i_interval.hi << ") s_" << r.j << " in (" << r.j_interval.lo << ","
              << r.j_interval.hi << ")\n";
  if (scn.obstacles.empty()) std::cout << "no conflicts\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_plan(const std::string& input, const std::string& mode, const std::string& graph_text,
             int grid, const std::string& out_path, const std::string& csv_path) {
  coordplan::CoordinationScenario scn =
      coordplan::resolve_scenario(coordplan::load_scenario(input), grid);
  coordplan::PlanResult plan;
  if (mode == "fixed") {
    coordplan::PriorityGraph g = coordplan::parse_priority_literal(graph_text, scn);
    plan = coordplan::plan_fixed_priority(scn, g);
  } else if (mode == "heuristic") {
    plan = coordplan::plan_heuristic(scn);
  } else {
    plan = coordplan::plan_exhaustive(scn);
  }

  coordplan::ValidationReport rep = coordplan::validate(plan.trajectory, scn, &plan.graph);
  if (!rep) {
    for (const std::string& issue : rep.issues) std::cerr << "invalid plan: " << issue << "\n";
    return 1;
  }

  coordplan::save_plan(plan, out_path);
  std::cout << "cost " << plan.cost << "\n";
  std::cout << "graph " << graph_literal(plan.graph) << "\n";
  for (std::size_t v = 0; v < plan.exit_times.size(); ++v)
    std::cout << "exit " << v + 1 << " " << plan.exit_times[v] << "\n";
  std::cout << "wrote " << out_path << "\n";
  if (!csv_path.empty()) {
    coordplan::save_trajectory_csv(plan.trajectory, csv_path);
    std::cout << "wrote " << csv_path << "\n";
  }
  return 0;
}

int cmd_plot(const std::string& input, const std::string& plan_path, int grid,
             const std::string& out_dir) {
  coordplan::CoordinationScenario scn =
      coordplan::resolve_scenario(coordplan::load_scenario(input), grid);
  coordplan::PlanResult plan = coordplan::load_plan(plan_path);
  if (plan.trajectory.dims() != scn.n)
    throw coordplan::ScenarioError(plan_path + ": plan is for " +
                                   std::to_string(plan.trajectory.dims()) +
                                   " vehicles, scenario has " + std::to_string(scn.n));
  std::filesystem::create_directories(out_dir);
  for (const std::string& name : coordplan::write_plan_plots(scn, plan, out_dir))
    std::cout << "wrote " << out_dir << "/" << name << "\n";
  return 0;
}

int cmd_verify(const std::string& input, int grid, double grid_step,
               std::optional<std::uint64_t> seed) {
  coordplan::CoordinationScenario scn =
      coordplan::resolve_scenario(coordplan::load_scenario(input), grid);
  coordplan::PlanResult best = coordplan::plan_exhaustive(scn);
  coordplan::LatticeConfig cfg{grid_step, grid_step};
  double reference = coordplan::dp_optimal_cost(scn, cfg);
  double tolerance = grid_step * static_cast<double>(scn.n) + cfg.time_step;
  double diff = std::abs(best.cost - reference);

  std::cout << "exhaustive cost " << best.cost << "\n";
  std::cout << "graph " << graph_literal(best.graph) << "\n";
  std::cout << "lattice cost " << reference << "\n";
  std::cout << "difference " << diff << " (tolerance " << tolerance << ")\n";

  bool ok = diff <= tolerance;
  if (seed) {
    coordplan::Trajectory sampled =
        coordplan::sample_feasible_trajectory(scn, best.graph, *seed);
    coordplan::ValidationReport rep = coordplan::validate(sampled, scn, &best.graph);
    double sampled_cost = coordplan::cost(sampled);
    bool dominated = best.cost <= sampled_cost + 1e-9;
    std::cout << "sampled cost " << sampled_cost << " (seed " << *seed << "): "
              << (rep && dominated ? "dominated" : "violation") << "\n";
    ok = ok && rep && dominated;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cooperative intersection crossing planner"};
  app.require_subcommand(1);

  std::string input, out_path, csv_path, graph_text, mode = "exhaustive", plan_path;
  int grid = 256;
  double grid_step = 0.02;
  std::optional<std::uint64_t> seed;

  CLI::App* compile = app.add_subcommand("compile", "derive conflict rectangles from geometry");
  compile->add_option("input", input, "scenario file")->required();
  compile->add_option("--grid", grid, "sampling resolution per axis")->capture_default_str();
  compile->add_option("--out", out_path, "output abstract scenario file");

  CLI::App* plan = app.add_subcommand("plan", "plan a crossing");
  plan->add_option("input", input, "scenario file")->required();
  plan->add_option("--mode", mode, "fixed | heuristic | exhaustive")
      ->check(CLI::IsMember({"fixed", "heuristic", "exhaustive"}))
      ->capture_default_str();
  plan->add_option("--graph", graph_text, "priority literal, e.g. \"1>2,2>3\" (fixed mode)");
  plan->add_option("--grid", grid, "sampling resolution for geometric input")->capture_default_str();
  plan->add_option("--out", out_path, "plan output file");
  plan->add_option("--csv", csv_path, "also write the trajectory as CSV");

  CLI::App* plot = app.add_subcommand("plot", "render a saved plan");
  plot->add_option("input", input, "scenario file")->required();
  plot->add_option("--plan", plan_path, "plan file")->required();
  plot->add_option("--grid", grid, "sampling resolution for geometric input")->capture_default_str();
  plot->add_option("--out", out_path, "output directory")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check the planner against the lattice reference");
  verify->add_option("input", input, "scenario file")->required();
  verify->add_option("--grid", grid, "sampling resolution for geometric input")->capture_default_str();
  verify->add_option("--grid-step", grid_step, "lattice cell size")->capture_default_str();
  verify->add_option("--seed", seed, "also check one sampled trajectory for dominance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (compile->parsed()) {
      if (out_path.empty())
        out_path = std::filesystem::path(input).stem().string() + ".abstract.json";
      return cmd_compile(input, grid, out_path);
    }
    if (plan->parsed()) {
      if (mode == "fixed" && graph_text.empty())
        throw coordplan::ScenarioError("--graph is required with --mode fixed");
      if (mode != "fixed" && !graph_text.empty())
        throw coordplan::ScenarioError("--graph only applies to --mode fixed");
      return cmd_plan(input, mode, graph_text, grid,
                      out_path.empty() ? "plan.json" : out_path, csv_path);
    }
    if (plot->parsed()) return cmd_plot(input, plan_path, grid, out_path.empty() ? "plots" : out_path);
    if (verify->parsed()) return cmd_verify(input, grid, grid_step, seed);
    return 1;
  } catch (const coordplan::InfeasibleGraphError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    if (!e.witness.empty()) {
      std::cerr << "witness cycle:";
      for (int v : e.witness) std::cerr << " " << v;
      std::cerr << "\n";
    }
    return 2;
  } catch (const coordplan::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const coordplan::DeadlockError& e) {
    std::cerr << "deadlock: " << e.what() << "\n";
    return 3;
  } catch (const coordplan::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
