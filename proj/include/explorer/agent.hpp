#ifndef EXPLORER_AGENT_HPP_
#define EXPLORER_AGENT_HPP_

#include <cstdint>

#include "explorer/grid_world.hpp"
#include "explorer/rng.hpp"

namespace explorer {

enum class PolicyMode : std::uint8_t { Stochastic, Deterministic };

struct AgentParams {
  double fear_initial = 0.9;  // starting fear level, in [0, 1]
  double fear_decay = 0.02;   // per-tick multiplicative habituation rate, in [0, 1]
  double w_explore = 1.0;     // weight of the exploration drive, >= 0
  double w_fear = 1.0;        // weight of the fear drive, >= 0
  PolicyMode mode = PolicyMode::Stochastic;
};

// Throws ValidationError when a field is outside its range.
void validate_params(const AgentParams& params);

struct DriveLevels {
  double explore_drive = 0.0;
  double fear_drive = 0.0;
  double move_intensity = 0.0;  // clamp(explore - fear, 0, 1)
};

// The drive competition: explore = w_explore * unvisited_fraction,
// fear = w_fear * fear_level, move intensity is their clamped difference.
DriveLevels drives(double unvisited_fraction, double fear, const AgentParams& params);

// fear' = fear * (1 - fear_decay); habituation applies once per tick.
double habituate(double fear, double fear_decay);

struct StepEvents {
  bool moved = false;
  bool crossed_line = false;  // always equal to moved (4-neighborhood)
  bool novel_cell = false;    // moved into a previously unvisited arena cell
};

struct AgentState {
  Position pos;
  double fear = 0.0;
  CellSet visited;         // refuge cells plus every cell occupied so far
  double credit = 0.0;     // deterministic-mode move accumulator, in [0, 2)
  std::int64_t tick = 0;
  int unvisited_arena = 0;

  bool coverage_complete() const { return unvisited_arena == 0; }
};

// Fresh state at door-opening time: agent on the start cell, refuge cells
// pre-visited, full initial fear, zero credit.
AgentState init_state(const GridWorld& world, const AgentParams& params);

// Advances one tick:
//   1. move intensity from the drive competition (or the homing rule once
//      coverage is complete: move unconditionally until inside the refuge);
//   2. stochastic mode draws one uniform r and acts iff r < m; deterministic
//      mode accumulates credit and acts on overflow;
//   3. an acting agent steps along the BFS first_step toward the nearest
//      unvisited cell, or toward the refuge when nothing is left to explore;
//   4. visited/events update; fear habituates; tick increments.
// Exactly one rng draw per tick in stochastic mode, none in deterministic.
StepEvents step(AgentState& state, const GridWorld& world, const AgentParams& params,
                RandomStream& rng);

}  // namespace explorer

#endif  // EXPLORER_AGENT_HPP_
