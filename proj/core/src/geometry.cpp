#include "pairbot/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace pairbot {

namespace {

constexpr std::array<Point, 6> kOffsets = {{
    {1, 0},   // l1
    {1, -1},  // l2
    {0, -1},  // l3
    {-1, 0},  // l4
    {-1, 1},  // l5
    {0, 1},   // l6
}};

void require_direction(Label l, const char* what) {
  if (l == Label::here) {
    throw std::invalid_argument(std::string(what) + ": label 0 has no direction");
  }
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Label label_from_int(int value) {
  if (value < 0 || value > 6) {
    throw std::invalid_argument("label out of range: " + std::to_string(value));
  }
  return static_cast<Label>(value);
}

int dist(Point u, Point v) {
  const long dx = static_cast<long>(u.x) - v.x;
  const long dy = static_cast<long>(u.y) - v.y;
  const long ax = std::labs(dx);
  const long ay = std::labs(dy);
  if (dx * dy >= 0) return static_cast<int>(ax + ay);
  return static_cast<int>(ax + ay - std::min(ax, ay));
}

Point label_offset(Label l) {
  require_direction(l, "label_offset");
  return kOffsets[static_cast<std::size_t>(to_int(l) - 1)];
}

Label next(Label l, int steps) {
  require_direction(l, "next");
  int y = (to_int(l) - 1 + steps) % 6;
  if (y < 0) y += 6;
  return static_cast<Label>(y + 1);
}

Label label_toward(Point from, Point to) {
  const Point d = to - from;
  if (d == Point{}) return Label::here;
  for (std::size_t i = 0; i < kOffsets.size(); ++i) {
    if (kOffsets[i] == d) return static_cast<Label>(i + 1);
  }
  throw std::invalid_argument("label_toward: " + to_string(to) + " is not adjacent to " +
                              to_string(from));
}

std::array<Point, 6> neighbors(Point p) {
  std::array<Point, 6> out;
  for (std::size_t i = 0; i < kOffsets.size(); ++i) out[i] = p + kOffsets[i];
  return out;
}

int LabelSet::size() const { return std::popcount(bits_); }

}  // namespace pairbot
