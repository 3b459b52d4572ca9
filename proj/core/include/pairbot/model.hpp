#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pairbot/geometry.hpp"

namespace pairbot {

using PointSet = std::unordered_set<Point, PointHash>;

// Engine-internal robot index. Robots 2k and 2k+1 form pairbot k.
struct RobotId {
  std::size_t index = 0;

  constexpr std::size_t pair() const { return index / 2; }
  constexpr RobotId buddy() const { return RobotId{index ^ 1u}; }
  friend constexpr auto operator<=>(const RobotId&, const RobotId&) = default;
};

enum class PairState : std::uint8_t { Short, Long };

// Raised when a pair is found split apart. Only an engine bug (or a
// deliberately corrupted input) can produce it.
class CorruptionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Positions of every robot plus the static object. Cheap to copy: the object
// is shared and immutable.
class Configuration {
 public:
  Configuration() : object_(std::make_shared<const PointSet>()) {}
  Configuration(std::vector<Point> positions, PointSet object,
                std::optional<std::size_t> head_pair = std::nullopt);

  std::size_t robot_count() const { return positions_.size(); }
  std::size_t pair_count() const { return positions_.size() / 2; }

  Point position(RobotId r) const { return positions_[r.index]; }
  const std::vector<Point>& positions() const { return positions_; }
  void set_position(RobotId r, Point p) { positions_[r.index] = p; }

  const PointSet& object() const { return *object_; }
  bool is_object(Point p) const { return object_->contains(p); }

  std::optional<std::size_t> head_pair() const { return head_pair_; }

  // Exact number of robots on p (not capped).
  int robots_at(Point p) const;

  // Distinct occupied points, sorted.
  std::vector<Point> occupied_points() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.positions_ == b.positions_ && a.head_pair_ == b.head_pair_ &&
           (a.object_ == b.object_ || *a.object_ == *b.object_);
  }

 private:
  std::vector<Point> positions_;
  std::shared_ptr<const PointSet> object_;
  std::optional<std::size_t> head_pair_;
};

// Throws CorruptionError when the two robots are more than one step apart.
PairState pair_state(const Configuration& c, std::size_t pair);

// What one robot perceives in its Look phase: nothing beyond distance one,
// counts capped at two, no identities.
struct Snapshot {
  std::array<std::uint8_t, 7> occupancy{};
  Label buddy = Label::here;
  LabelSet objects;
  bool is_head = false;

  int occupy(Label l) const { return occupancy[static_cast<std::size_t>(to_int(l))]; }
  bool is_short() const { return buddy == Label::here; }

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot take_snapshot(const Configuration& c, RobotId r);

bool is_line_formed(const Configuration& c);

enum class MoveKind : std::uint8_t { ExclusiveFromShort, CloseUpFromLong, Stay };

struct MoveIntent {
  RobotId mover;
  Label target = Label::here;
  MoveKind kind = MoveKind::Stay;

  friend bool operator==(const MoveIntent&, const MoveIntent&) = default;
};

enum class ViolationKind : std::uint8_t { Crowded, PairSplit, OnObject };

struct Violation {
  ViolationKind kind;
  Point where;
  // Pair index for PairSplit, robot index for OnObject, robot count for Crowded.
  std::size_t detail = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(ViolationKind kind);
std::string describe(const Violation& v);

// Every safety breach present in c: >2 robots on a point, a pair more than
// one step apart, a robot on an object point.
std::vector<Violation> check_safety(const Configuration& c);

struct MoveOutcome {
  Configuration config;
  std::vector<Violation> violations;
};

// Applies the moves simultaneously. Breaches are reported, never rejected.
MoveOutcome apply_moves(const Configuration& c, std::span<const MoveIntent> moves);
MoveOutcome apply_move(const Configuration& c, const MoveIntent& m);

}  // namespace pairbot
