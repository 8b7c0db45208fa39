#include "explorer/grid_world.hpp"

#include <array>
#include <limits>
#include <string>

namespace explorer {

namespace {

constexpr int kNoDistance = std::numeric_limits<int>::max();

struct Bfs {
  // dist[index] over the whole grid; every cell is traversable.
  std::vector<int> dist;

  Bfs(const GridWorld& world, Position source)
      : dist(static_cast<std::size_t>(world.cell_count()), kNoDistance) {
    std::vector<Position> queue;
    queue.reserve(dist.size());
    queue.push_back(source);
    dist[world.index(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Position cur = queue[head];
      int next = dist[world.index(cur)] + 1;
      for (Direction d : kDirections) {
        Position n = offset(cur, d);
        if (!world.in_bounds(n)) continue;
        int& slot = dist[world.index(n)];
        if (slot != kNoDistance) continue;
        slot = next;
        queue.push_back(n);
      }
    }
  }

  int at(const GridWorld& world, Position p) const { return dist[world.index(p)]; }
};

// Shared by nearest_unvisited and nearest_refuge: pick the goal cell at
// minimal BFS distance (ties: smallest (y, x)), then the first direction in
// N,E,S,W order that strictly decreases the distance to it.
template <typename GoalPred>
std::optional<PathTarget> nearest_goal(const GridWorld& world, Position from,
                                       GoalPred is_goal) {
  Bfs from_bfs(world, from);

  bool found = false;
  Position best{};
  int best_dist = kNoDistance;
  for (int y = 0; y < world.height(); ++y) {
    for (int x = 0; x < world.width(); ++x) {
      Position p{x, y};
      if (!is_goal(p)) continue;
      int d = from_bfs.at(world, p);
      if (d < best_dist) {  // (y,x) scan order makes the first min the tie winner
        best_dist = d;
        best = p;
        found = true;
      }
    }
  }
  if (!found) return std::nullopt;

  PathTarget result;
  result.target = best;
  result.distance = best_dist;
  if (best_dist == 0) return result;

  Bfs target_bfs(world, best);
  for (Direction d : kDirections) {
    Position n = offset(from, d);
    if (!world.in_bounds(n)) continue;
    if (target_bfs.at(world, n) == best_dist - 1) {
      result.first_step = d;
      break;
    }
  }
  return result;
}

}  // namespace

Position offset(Position p, Direction d) {
  switch (d) {
    case Direction::North: return {p.x, p.y - 1};
    case Direction::East: return {p.x + 1, p.y};
    case Direction::South: return {p.x, p.y + 1};
    case Direction::West: return {p.x - 1, p.y};
  }
  return p;
}

char direction_char(Direction d) {
  switch (d) {
    case Direction::North: return 'N';
    case Direction::East: return 'E';
    case Direction::South: return 'S';
    case Direction::West: return 'W';
  }
  return '?';
}

GridWorld::GridWorld(int width, int height, RefugeRect refuge, Position start)
    : width_(width), height_(height), refuge_(refuge), start_(start) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::ValidationError,
                "grid dimensions must be at least 1x1, got " + std::to_string(width) +
                    "x" + std::to_string(height));
  }
  if (refuge.w < 1 || refuge.h < 1 || refuge.x < 0 || refuge.y < 0 ||
      refuge.x + refuge.w > width || refuge.y + refuge.h > height) {
    throw Error(ErrorKind::RefugeOutOfBounds,
                "refuge (" + std::to_string(refuge.x) + "," + std::to_string(refuge.y) +
                    "," + std::to_string(refuge.w) + "," + std::to_string(refuge.h) +
                    ") does not fit inside the " + std::to_string(width) + "x" +
                    std::to_string(height) + " grid");
  }
  if (refuge.cell_count() >= cell_count()) {
    throw Error(ErrorKind::NoArena, "refuge covers the whole grid; no arena cell exists");
  }
  if (!refuge.contains(start)) {
    throw Error(ErrorKind::StartOutsideRefuge,
                "start (" + std::to_string(start.x) + "," + std::to_string(start.y) +
                    ") lies outside the refuge");
  }
}

std::vector<Position> neighbors(const GridWorld& world, Position p) {
  std::vector<Position> out;
  out.reserve(4);
  for (Direction d : kDirections) {
    Position n = offset(p, d);
    if (world.in_bounds(n)) out.push_back(n);
  }
  return out;
}

std::optional<PathTarget> nearest_unvisited(const GridWorld& world,
                                            const CellSet& visited, Position from) {
  return nearest_goal(world, from, [&](Position p) {
    return world.in_arena(p) && !visited.contains(p);
  });
}

std::optional<PathTarget> nearest_refuge(const GridWorld& world, Position from) {
  if (world.in_refuge(from)) {
    PathTarget self{from, 0, std::nullopt};
    return self;
  }
  return nearest_goal(world, from, [&](Position p) { return world.in_refuge(p); });
}

}  // namespace explorer
