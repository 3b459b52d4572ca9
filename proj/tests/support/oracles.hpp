#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the code it is used to check, apart from
// plain data types and the grid adjacency offsets.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "pairbot/analysis.hpp"
#include "pairbot/geometry.hpp"
#include "pairbot/model.hpp"

namespace pairbot::oracle {

// The six grid steps, written out by hand rather than taken from label_offset.
inline constexpr std::array<Point, 6> kSteps = {
    Point{1, 0}, Point{1, -1}, Point{0, -1}, Point{-1, 0}, Point{-1, 1}, Point{0, 1}};

// Breadth-first distances from `origin` inside the square |x|,|y| <= radius
// (the window is convex in the grid metric, so BFS inside it is exact).
inline std::map<Point, int> bfs_distances(Point origin, int radius) {
  std::map<Point, int> d;
  std::deque<Point> queue{origin};
  d[origin] = 0;
  while (!queue.empty()) {
    const Point u = queue.front();
    queue.pop_front();
    for (const Point& s : kSteps) {
      const Point v = u + s;
      if (std::abs(v.x) > radius || std::abs(v.y) > radius || d.contains(v)) continue;
      d[v] = d[u] + 1;
      queue.push_back(v);
    }
  }
  return d;
}

// Free points of the analysis window and their adjacency.
struct WindowGraph {
  std::vector<Point> points;
  std::map<Point, int> index;
  std::vector<std::vector<int>> adj;

  WindowGraph(const std::vector<Point>& object, const std::vector<Point>& robots, int margin) {
    std::vector<Point> all = object;
    all.insert(all.end(), robots.begin(), robots.end());
    int min_x = all.front().x, max_x = min_x, min_y = all.front().y, max_y = min_y;
    for (const Point& p : all) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const std::set<Point> obj(object.begin(), object.end());
    for (int y = min_y - margin; y <= max_y + margin; ++y) {
      for (int x = min_x - margin; x <= max_x + margin; ++x) {
        if (obj.contains({x, y})) continue;
        index[{x, y}] = static_cast<int>(points.size());
        points.push_back({x, y});
      }
    }
    adj.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (const Point& s : kSteps) {
        auto it = index.find(points[i] + s);
        if (it != index.end()) adj[i].push_back(it->second);
      }
    }
  }

  int at(Point p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }
};

// Vertices reachable from `sources`, skipping vertex `cut_v` and the
// undirected edge {cut_a, cut_b}.
inline std::vector<char> reach(const WindowGraph& g, const std::vector<int>& sources, int cut_v,
                               int cut_a = -1, int cut_b = -1) {
  std::vector<char> seen(g.points.size(), 0);
  std::deque<int> queue;
  for (int s : sources) {
    if (s != cut_v && !seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (v == cut_v || seen[static_cast<std::size_t>(v)]) continue;
      if ((u == cut_a && v == cut_b) || (u == cut_b && v == cut_a)) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    }
  }
  return seen;
}

// Surface points lacking two disjoint robot-to-point paths, decided by
// Menger's theorem: two paths exist exactly when the point is reachable and
// no single removable element (a non-robot vertex other than the target for
// internal disjointness, any edge for both modes) separates it from every
// robot point. Robot points count as coatable.
inline std::vector<Point> non_coating_by_cuts(const std::vector<Point>& object,
                                              const std::vector<Point>& robots, int margin,
                                              Disjointness mode = Disjointness::Internal) {
  const WindowGraph g(object, robots, margin);
  const std::set<Point> robot_set(robots.begin(), robots.end());
  std::vector<int> sources;
  for (const Point& r : robot_set) sources.push_back(g.at(r));

  const std::set<Point> obj(object.begin(), object.end());
  std::set<Point> surface;
  for (const Point& o : object) {
    for (const Point& s : kSteps) {
      if (!obj.contains(o + s)) surface.insert(o + s);
    }
  }

  std::set<Point> bad;
  auto mark_unreached = [&](const std::vector<char>& seen, int skip) {
    for (const Point& t : surface) {
      if (robot_set.contains(t)) continue;
      const int i = g.at(t);
      if (i < 0 || i == skip) {
        if (i < 0) bad.insert(t);
        continue;
      }
      if (!seen[static_cast<std::size_t>(i)]) bad.insert(t);
    }
  };
  mark_unreached(reach(g, sources, -1), -1);
  if (mode == Disjointness::Internal) {
    for (std::size_t v = 0; v < g.points.size(); ++v) {
      if (robot_set.contains(g.points[v])) continue;
      mark_unreached(reach(g, sources, static_cast<int>(v)), static_cast<int>(v));
    }
  }
  for (std::size_t u = 0; u < g.points.size(); ++u) {
    for (int v : g.adj[u]) {
      if (static_cast<int>(u) < v) mark_unreached(reach(g, sources, -1, static_cast<int>(u), v), -1);
    }
  }
  return {bad.begin(), bad.end()};
}

// Literal search over robot-to-`target` simple paths, looking for two
// distinct ones with disjoint interiors. Any such pair can be shortened to a
// pair of chordless paths whose interiors touch no robot point except at the
// far end, so only those are listed. Shortening can merge two paths only
// when both collapse onto the same robot edge, so a target next to a robot
// is settled separately: the edge plus any other route. Exponential; meant
// for small windows.
inline bool has_two_disjoint_paths_by_enumeration(const WindowGraph& g,
                                                  const std::set<Point>& robots, Point target) {
  if (robots.contains(target)) return true;
  const int t = g.at(target);
  if (t < 0) return false;
  const std::size_t n = g.points.size();
  auto is_robot = [&](int v) { return robots.contains(g.points[static_cast<std::size_t>(v)]); };
  std::vector<char> robot_adjacent(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (int w : g.adj[v]) robot_adjacent[v] = robot_adjacent[v] || is_robot(w);
  }
  if (robot_adjacent[static_cast<std::size_t>(t)]) {
    int robot_edges = 0;
    std::vector<int> starts;
    for (int w : g.adj[static_cast<std::size_t>(t)]) {
      if (is_robot(w)) {
        ++robot_edges;
      } else {
        starts.push_back(w);
      }
    }
    if (robot_edges > 1) return true;
    const auto seen = reach(g, starts, t);
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v] && is_robot(static_cast<int>(v))) return true;
    }
    return false;
  }

  using Mask = std::vector<bool>;
  std::vector<std::pair<Mask, int>> paths;  // interior set, robot end
  std::vector<int> path = {t};
  Mask on_path(n, false);
  on_path[static_cast<std::size_t>(t)] = true;
  bool found = false;

  auto disjoint = [](const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && b[i]) return false;
    }
    return true;
  };
  // v may follow the last path vertex only if it touches no earlier one.
  auto chordless = [&](int v) {
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (on_path[static_cast<std::size_t>(w)] && w != path.back()) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, Mask& interior) -> void {
    const int u = path.back();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (found) return;
      if (on_path[static_cast<std::size_t>(v)] || !chordless(v)) continue;
      if (is_robot(v)) {
        for (const auto& [other, end] : paths) {
          if (disjoint(other, interior) && !(other == interior && end == v)) {
            found = true;
            return;
          }
        }
        paths.emplace_back(interior, v);
        continue;
      }
      if (u != t && robot_adjacent[static_cast<std::size_t>(u)]) continue;
      on_path[static_cast<std::size_t>(v)] = true;
      interior[static_cast<std::size_t>(v)] = true;
      path.push_back(v);
      self(self, interior);
      path.pop_back();
      interior[static_cast<std::size_t>(v)] = false;
      on_path[static_cast<std::size_t>(v)] = false;
    }
  };
  Mask interior(n, false);
  dfs(dfs, interior);
  return found;
}

inline std::vector<Point> non_coating_by_enumeration(const std::vector<Point>& object,
                                                     const std::vector<Point>& robots,
                                                     int margin) {
  const WindowGraph g(object, robots, margin);
  const std::set<Point> robot_set(robots.begin(), robots.end());
  const std::set<Point> obj(object.begin(), object.end());
  std::set<Point> surface;
  for (const Point& o : object) {
    for (const Point& s : kSteps) {
      if (!obj.contains(o + s)) surface.insert(o + s);
    }
  }
  std::vector<Point> out;
  for (const Point& t : surface) {
    if (!has_two_disjoint_paths_by_enumeration(g, robot_set, t)) out.push_back(t);
  }
  return out;
}

// All connected sets of `max_cells` or fewer grid points, one per
// translation class, normalised so the smallest point is (0, 0).
inline std::vector<std::vector<Point>> fixed_polyhexes(int max_cells) {
  std::vector<std::vector<Point>> all;
  std::set<std::vector<Point>> level = {{Point{0, 0}}};
  for (int size = 1; size <= max_cells; ++size) {
    all.insert(all.end(), level.begin(), level.end());
    if (size == max_cells) break;
    std::set<std::vector<Point>> grown;
    for (const auto& shape : level) {
      const std::set<Point> cells(shape.begin(), shape.end());
      for (const Point& c : shape) {
        for (const Point& s : kSteps) {
          const Point n = c + s;
          if (cells.contains(n)) continue;
          std::vector<Point> next = shape;
          next.push_back(n);
          std::sort(next.begin(), next.end());
          const Point base = next.front();
          for (Point& p : next) p = p - base;
          grown.insert(std::move(next));
        }
      }
    }
    level = std::move(grown);
  }
  return all;
}

// Every line-formed arrangement of `pairs` pairbots on y = 0 whose leftmost
// robot is at x = 0, including both orientations of each long pair. Pair 0
// is the head.
inline std::vector<Configuration> line_arrangements(std::size_t pairs) {
  const std::size_t robots = 2 * pairs;
  const int span = static_cast<int>(robots);
  std::vector<Configuration> out;
  std::vector<int> xs(robots, 0);
  while (true) {
    bool ok = *std::min_element(xs.begin(), xs.end()) == 0;
    std::map<int, int> load;
    for (int x : xs) ok = ok && ++load[x] <= 2;
    for (std::size_t k = 0; ok && k < pairs; ++k) ok = std::abs(xs[2 * k] - xs[2 * k + 1]) <= 1;
    // Contiguous occupancy.
    if (ok) ok = static_cast<int>(load.size()) == load.rbegin()->first + 1;
    // No two long pairs over the same two points.
    std::set<int> long_spans;
    for (std::size_t k = 0; ok && k < pairs; ++k) {
      if (xs[2 * k] != xs[2 * k + 1]) ok = long_spans.insert(std::min(xs[2 * k], xs[2 * k + 1])).second;
    }
    if (ok) {
      std::vector<Point> pos;
      for (int x : xs) pos.push_back({x, 0});
      out.emplace_back(std::move(pos), PointSet{}, 0);
    }
    std::size_t i = 0;
    while (i < robots && ++xs[i] == span) xs[i++] = 0;
    if (i == robots) break;
  }
  return out;
}

}  // namespace pairbot::oracle
