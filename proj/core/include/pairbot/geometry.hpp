#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace pairbot {

// A global point on the triangular grid, in axial coordinates. Robots never
// see these; they only exist in the engine and in analysis.
struct Point {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
    std::uint64_t h = (ux << 32) | uy;
    // splitmix64 finalizer
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

std::string to_string(const Point& p);

// Robot-local edge label. `here` is the robot's own point, l1..l6 are the
// incident edges in clockwise order starting from the agreed +X direction.
enum class Label : std::uint8_t { here = 0, l1, l2, l3, l4, l5, l6 };

inline constexpr std::array<Label, 6> kDirections = {Label::l1, Label::l2, Label::l3,
                                                     Label::l4, Label::l5, Label::l6};

constexpr int to_int(Label l) { return static_cast<int>(l); }

// Throws std::invalid_argument outside 0..6.
Label label_from_int(int value);

// Grid distance between two points.
int dist(Point u, Point v);

inline bool adjacent(Point u, Point v) { return dist(u, v) == 1; }

// Unit offset of a direction label. Throws std::invalid_argument for `here`.
Point label_offset(Label l);

// Label l rotated clockwise by `steps` (any integer, taken mod 6).
// Throws std::invalid_argument for `here`.
Label next(Label l, int steps);

inline Label opposite(Label l) { return next(l, 3); }

// The direction label pointing from `from` to the adjacent point `to`;
// `here` when the points coincide. Throws std::invalid_argument otherwise.
Label label_toward(Point from, Point to);

std::array<Point, 6> neighbors(Point p);

// Small set of labels stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr LabelSet(std::initializer_list<Label> labels) {
    for (Label l : labels) insert(l);
  }

  static constexpr LabelSet from_bits(std::uint8_t bits) {
    LabelSet s;
    s.bits_ = static_cast<std::uint8_t>(bits & 0x7f);
    return s;
  }

  constexpr void insert(Label l) { bits_ |= static_cast<std::uint8_t>(1u << to_int(l)); }
  constexpr void erase(Label l) { bits_ &= static_cast<std::uint8_t>(~(1u << to_int(l))); }
  constexpr bool contains(Label l) const { return (bits_ >> to_int(l)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  int size() const;

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace pairbot

template <>
struct std::hash<pairbot::Point> : pairbot::PointHash {};
