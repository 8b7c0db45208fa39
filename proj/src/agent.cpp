#include "explorer/agent.hpp"

#include <algorithm>
#include <string>

namespace explorer {

namespace {

std::string range_message(const char* field, double value, const char* range) {
  return std::string(field) + " = " + std::to_string(value) + " outside " + range;
}

}  // namespace

void validate_params(const AgentParams& params) {
  if (!(params.fear_initial >= 0.0 && params.fear_initial <= 1.0)) {
    throw Error(ErrorKind::ValidationError,
                range_message("fear_initial", params.fear_initial, "[0, 1]"));
  }
  if (!(params.fear_decay >= 0.0 && params.fear_decay <= 1.0)) {
    throw Error(ErrorKind::ValidationError,
                range_message("fear_decay", params.fear_decay, "[0, 1]"));
  }
  if (!(params.w_explore >= 0.0)) {
    throw Error(ErrorKind::ValidationError,
                range_message("w_explore", params.w_explore, "[0, inf)"));
  }
  if (!(params.w_fear >= 0.0)) {
    throw Error(ErrorKind::ValidationError,
                range_message("w_fear", params.w_fear, "[0, inf)"));
  }
}

DriveLevels drives(double unvisited_fraction, double fear, const AgentParams& params) {
  DriveLevels levels;
  levels.explore_drive = params.w_explore * unvisited_fraction;
  levels.fear_drive = params.w_fear * fear;
  levels.move_intensity =
      std::clamp(levels.explore_drive - levels.fear_drive, 0.0, 1.0);
  return levels;
}

double habituate(double fear, double fear_decay) { return fear * (1.0 - fear_decay); }

AgentState init_state(const GridWorld& world, const AgentParams& params) {
  AgentState state;
  state.pos = world.start();
  state.fear = params.fear_initial;
  state.visited = CellSet(world);
  const RefugeRect& refuge = world.refuge();
  for (int y = refuge.y; y < refuge.y + refuge.h; ++y) {
    for (int x = refuge.x; x < refuge.x + refuge.w; ++x) {
      state.visited.insert({x, y});
    }
  }
  state.unvisited_arena = world.arena_cell_count();
  return state;
}

StepEvents step(AgentState& state, const GridWorld& world, const AgentParams& params,
                RandomStream& rng) {
  const double arena = static_cast<double>(world.arena_cell_count());
  const double unvisited_fraction = static_cast<double>(state.unvisited_arena) / arena;

  // Exploration is gated by the drive competition. Once coverage is complete
  // the competition has nothing left to fuel it; the agent heads home at full
  // intensity and idles once inside.
  double move_intensity;
  if (!state.coverage_complete()) {
    move_intensity = drives(unvisited_fraction, state.fear, params).move_intensity;
  } else if (!world.in_refuge(state.pos)) {
    move_intensity = 1.0;
  } else {
    move_intensity = 0.0;
  }

  bool act;
  if (params.mode == PolicyMode::Stochastic) {
    act = rng.next_uniform() < move_intensity;  // one draw per tick, unconditionally
  } else {
    state.credit += move_intensity;
    act = state.credit >= 1.0;
    if (act) state.credit -= 1.0;
  }

  StepEvents events;
  if (act) {
    std::optional<PathTarget> path;
    if (!state.coverage_complete()) {
      path = nearest_unvisited(world, state.visited, state.pos);
    } else if (!world.in_refuge(state.pos)) {
      path = nearest_refuge(world, state.pos);
    }
    if (path && path->first_step) {
      state.pos = offset(state.pos, *path->first_step);
      events.moved = true;
      events.crossed_line = true;
      // Refuge cells are pre-visited, so a first visit is always an arena cell.
      if (state.visited.insert(state.pos)) {
        events.novel_cell = true;
        --state.unvisited_arena;
      }
    }
  }

  state.fear = habituate(state.fear, params.fear_decay);
  ++state.tick;
  return events;
}

}  // namespace explorer
