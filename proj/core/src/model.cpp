#include "pairbot/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace pairbot {

Configuration::Configuration(std::vector<Point> positions, PointSet object,
                             std::optional<std::size_t> head_pair)
    : positions_(std::move(positions)),
      object_(std::make_shared<const PointSet>(std::move(object))),
      head_pair_(head_pair) {
  if (positions_.size() % 2 != 0) {
    throw std::invalid_argument("robot count must be even, got " +
                                std::to_string(positions_.size()));
  }
  if (head_pair_ && *head_pair_ >= pair_count()) {
    throw std::invalid_argument("head pair index out of range");
  }
}

int Configuration::robots_at(Point p) const {
  return static_cast<int>(std::count(positions_.begin(), positions_.end(), p));
}

std::vector<Point> Configuration::occupied_points() const {
  std::vector<Point> pts = positions_;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

PairState pair_state(const Configuration& c, std::size_t pair) {
  const Point a = c.position(RobotId{2 * pair});
  const Point b = c.position(RobotId{2 * pair + 1});
  const int d = dist(a, b);
  if (d == 0) return PairState::Short;
  if (d == 1) return PairState::Long;
  throw CorruptionError("pair " + std::to_string(pair) + " split: " + to_string(a) + " and " +
                        to_string(b) + " are " + std::to_string(d) + " apart");
}

Snapshot take_snapshot(const Configuration& c, RobotId r) {
  Snapshot s;
  const Point here = c.position(r);
  std::array<int, 7> counts{};
  for (const Point& p : c.positions()) {
    const Point d = p - here;
    if (d == Point{}) {
      ++counts[0];
    } else if (dist(p, here) == 1) {
      ++counts[static_cast<std::size_t>(to_int(label_toward(here, p)))];
    }
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    s.occupancy[i] = static_cast<std::uint8_t>(std::min(counts[i], 2));
  }
  const Point buddy = c.position(r.buddy());
  if (dist(here, buddy) > 1) {
    throw CorruptionError("snapshot of robot " + std::to_string(r.index) +
                          ": buddy out of sight");
  }
  s.buddy = label_toward(here, buddy);
  for (Label l : kDirections) {
    if (c.is_object(here + label_offset(l))) s.objects.insert(l);
  }
  s.is_head = c.head_pair().has_value() && *c.head_pair() == r.pair();
  return s;
}

bool is_line_formed(const Configuration& c) {
  if (c.robot_count() == 0) return true;
  std::map<Point, int> counts;
  for (const Point& p : c.positions()) ++counts[p];
  const int y = counts.begin()->first.y;
  int expected_x = counts.begin()->first.x;
  for (const auto& [p, n] : counts) {
    if (p.y != y || p.x != expected_x || n > 2) return false;
    ++expected_x;
  }
  std::set<std::pair<Point, Point>> long_spans;
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    Point a = c.position(RobotId{2 * k});
    Point b = c.position(RobotId{2 * k + 1});
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (!long_spans.emplace(a, b).second) return false;
  }
  return true;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Crowded:
      return "crowded";
    case ViolationKind::PairSplit:
      return "pair-split";
    case ViolationKind::OnObject:
      return "on-object";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::Crowded:
      return std::to_string(v.detail) + " robots on " + to_string(v.where);
    case ViolationKind::PairSplit:
      return "pair " + std::to_string(v.detail) + " split at " + to_string(v.where);
    case ViolationKind::OnObject:
      return "robot " + std::to_string(v.detail) + " on object point " + to_string(v.where);
  }
  return "unknown violation";
}

std::vector<Violation> check_safety(const Configuration& c) {
  std::vector<Violation> out;
  std::map<Point, std::size_t> counts;
  for (const Point& p : c.positions()) ++counts[p];
  for (const auto& [p, n] : counts) {
    if (n > 2) out.push_back({ViolationKind::Crowded, p, n});
  }
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    const Point a = c.position(RobotId{2 * k});
    if (dist(a, c.position(RobotId{2 * k + 1})) > 1) {
      out.push_back({ViolationKind::PairSplit, a, k});
    }
  }
  for (std::size_t i = 0; i < c.robot_count(); ++i) {
    const Point p = c.position(RobotId{i});
    if (c.is_object(p)) out.push_back({ViolationKind::OnObject, p, i});
  }
  return out;
}

MoveOutcome apply_moves(const Configuration& c, std::span<const MoveIntent> moves) {
  Configuration next = c;
  for (const MoveIntent& m : moves) {
    if (m.kind == MoveKind::Stay) continue;
    if (m.target == Label::here) {
      throw std::invalid_argument("move intent without a direction");
    }
    if (m.mover.index >= c.robot_count()) {
      throw std::out_of_range("move intent for unknown robot " + std::to_string(m.mover.index));
    }
    next.set_position(m.mover, c.position(m.mover) + label_offset(m.target));
  }
  auto violations = check_safety(next);
  return {std::move(next), std::move(violations)};
}

MoveOutcome apply_move(const Configuration& c, const MoveIntent& m) {
  return apply_moves(c, std::span<const MoveIntent>(&m, 1));
}

}  // namespace pairbot
