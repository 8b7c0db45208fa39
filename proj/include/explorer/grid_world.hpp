#ifndef EXPLORER_GRID_WORLD_HPP_
#define EXPLORER_GRID_WORLD_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "explorer/error.hpp"

namespace explorer {

struct Position {
  int x = 0;  // column, increasing east
  int y = 0;  // row, increasing south

  friend bool operator==(Position a, Position b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Position a, Position b) { return !(a == b); }
};

// Orders positions by (y, x); the tie-break order used for path targets.
inline bool yx_less(Position a, Position b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

// Fixed scan order. Every movement rule iterates directions in this order,
// so traces are reproducible across implementations.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr Direction kDirections[4] = {Direction::North, Direction::East,
                                             Direction::South, Direction::West};

Position offset(Position p, Direction d);
char direction_char(Direction d);

struct RefugeRect {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  bool contains(Position p) const {
    return p.x >= x && p.x < x + w && p.y >= y && p.y < y + h;
  }
  int cell_count() const { return w * h; }
};

// Rectangular cell grid with a refuge rectangle and a start cell inside it.
// All cells are traversable; novelty lives only outside the refuge.
class GridWorld {
 public:
  GridWorld(int width, int height, RefugeRect refuge, Position start);

  int width() const { return width_; }
  int height() const { return height_; }
  const RefugeRect& refuge() const { return refuge_; }
  Position start() const { return start_; }

  int cell_count() const { return width_ * height_; }
  int arena_cell_count() const { return cell_count() - refuge_.cell_count(); }

  bool in_bounds(Position p) const {
    return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
  }
  bool in_refuge(Position p) const { return refuge_.contains(p); }
  bool in_arena(Position p) const { return in_bounds(p) && !in_refuge(p); }

  // Row-major cell index, used by CellSet and the BFS scratch arrays.
  int index(Position p) const { return p.y * width_ + p.x; }

 private:
  int width_;
  int height_;
  RefugeRect refuge_;
  Position start_;
};

// Flat boolean set over the cells of one world. Cheaper and more cache
// friendly than a hash set for per-tick membership tests.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(const GridWorld& world)
      : width_(world.width()), bits_(static_cast<std::size_t>(world.cell_count()), 0) {}

  bool contains(Position p) const { return bits_[index(p)] != 0; }

  // Returns true when the cell was newly inserted.
  bool insert(Position p) {
    auto& slot = bits_[index(p)];
    if (slot) return false;
    slot = 1;
    ++count_;
    return true;
  }

  int count() const { return count_; }
  std::size_t capacity() const { return bits_.size(); }

  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::size_t index(Position p) const {
    return static_cast<std::size_t>(p.y) * width_ + p.x;
  }

  int width_ = 0;
  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

struct PathTarget {
  Position target;
  int distance = 0;
  // Absent only when from == target (no step decreases a zero distance).
  std::optional<Direction> first_step;
};

// In-bounds von Neumann neighbors of p, in N, E, S, W order.
std::vector<Position> neighbors(const GridWorld& world, Position p);

// Nearest unvisited arena cell from `from` (BFS distance, uniform cost).
// Ties on distance resolve to the smallest (y, x) target; first_step is the
// first direction in N,E,S,W order that strictly decreases the BFS distance
// to that target. Absent when every arena cell is visited.
std::optional<PathTarget> nearest_unvisited(const GridWorld& world,
                                            const CellSet& visited, Position from);

// Nearest refuge cell, same tie-breaks. Absent only when from is already
// inside the refuge.
std::optional<PathTarget> nearest_refuge(const GridWorld& world, Position from);

}  // namespace explorer

#endif  // EXPLORER_GRID_WORLD_HPP_
