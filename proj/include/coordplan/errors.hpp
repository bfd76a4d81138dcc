#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coordplan {

/// Input data violates a scenario invariant: bad path geometry, a
/// cross-section touching the workspace boundary, an initial state inside an
/// obstacle, or an initial state the priority formalism cannot handle.
class ScenarioError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A requested priority graph cannot be realized by any feasible trajectory.
/// `witness` holds the offending cycle (or the offending pair when the
/// initial state already forfeits one of the graph's gates).
class InfeasibleGraphError : public std::runtime_error {
public:
  InfeasibleGraphError(const std::string& msg, std::vector<int> witness_cycle)
      : std::runtime_error(msg), witness(std::move(witness_cycle)) {}

  std::vector<int> witness;
};

/// A simulation stalled: no vehicle can advance and the goal is unreached,
/// or the time horizon guard fired.
class DeadlockError : public std::runtime_error {
public:
  DeadlockError(const std::string& msg, double at_time)
      : std::runtime_error(msg), time(at_time) {}

  double time = 0.0;
};

/// A combinatorial or state-space guard refused to run the computation.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A trajectory component never reaches its target coordinate.
class IncompleteTrajectoryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace coordplan
