#include "pairbot/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace pairbot {

namespace {

struct Scenery {
  std::map<Point, int> robots;
  std::set<Point> coating;
  std::vector<std::pair<Point, Point>> links;
  int min_x, max_x, min_y, max_y;
};

Scenery collect(const Configuration& c, const RenderOptions& opts) {
  Scenery s{};
  std::vector<Point> all;
  for (const Point& p : c.positions()) {
    ++s.robots[p];
    all.push_back(p);
  }
  all.insert(all.end(), c.object().begin(), c.object().end());
  if (opts.coating) {
    s.coating.insert(opts.coating->begin(), opts.coating->end());
    all.insert(all.end(), opts.coating->begin(), opts.coating->end());
  }
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    const Point a = c.position(RobotId{2 * k});
    const Point b = c.position(RobotId{2 * k + 1});
    if (a != b) s.links.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(s.links.begin(), s.links.end());
  if (all.empty()) all.push_back({0, 0});
  s.min_x = s.max_x = all.front().x;
  s.min_y = s.max_y = all.front().y;
  for (const Point& p : all) {
    s.min_x = std::min(s.min_x, p.x);
    s.max_x = std::max(s.max_x, p.x);
    s.min_y = std::min(s.min_y, p.y);
    s.max_y = std::max(s.max_y, p.y);
  }
  s.min_x -= opts.margin;
  s.max_x += opts.margin;
  s.min_y -= opts.margin;
  s.max_y += opts.margin;
  return s;
}

const char* kReset = "\x1b[0m";

}  // namespace

std::string render_ascii(const Configuration& c, const RenderOptions& opts) {
  const Scenery s = collect(c, opts);
  // Point (x, y) sits at text column 4x + 2y; rows run from max_y down.
  const int col0 = 4 * s.min_x + 2 * s.min_y;
  const int width = 4 * (s.max_x - s.min_x) + 2 * (s.max_y - s.min_y) + 1;
  const int rows = 2 * (s.max_y - s.min_y) + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(width), ' '));
  std::vector<std::vector<const char*>> tint(
      static_cast<std::size_t>(rows), std::vector<const char*>(static_cast<std::size_t>(width)));

  auto at = [&](Point p, int dcol, int drow) -> std::pair<std::size_t, std::size_t> {
    return {static_cast<std::size_t>(2 * (s.max_y - p.y) + drow),
            static_cast<std::size_t>(4 * p.x + 2 * p.y - col0 + dcol)};
  };

  for (int y = s.min_y; y <= s.max_y; ++y) {
    for (int x = s.min_x; x <= s.max_x; ++x) {
      const Point p{x, y};
      char ch = '.';
      const char* color = nullptr;
      auto it = s.robots.find(p);
      const int n = it == s.robots.end() ? 0 : it->second;
      if (c.is_object(p)) {
        ch = '#';
        color = "\x1b[90m";
      }
      if (n > 0) {
        ch = n == 1 ? 'o' : (n == 2 ? '8' : '*');
        color = n > 2 ? "\x1b[31m" : "\x1b[36m";
      } else if (s.coating.contains(p)) {
        ch = '+';
        color = "\x1b[33m";
      }
      auto [r, col] = at(p, 0, 0);
      grid[r][col] = ch;
      tint[r][col] = color;
    }
  }
  for (const auto& [a, b] : s.links) {
    const Point d = b - a;
    std::pair<std::size_t, std::size_t> cell;
    char ch;
    if (d == Point{1, 0}) {
      cell = at(a, 2, 0);
      ch = '-';
    } else if (d == Point{0, 1}) {
      cell = at(b, -1, 1);
      ch = '/';
    } else {
      cell = at(a, 1, 1);
      ch = '\\';
    }
    grid[cell.first][cell.second] = ch;
    tint[cell.first][cell.second] = "\x1b[36m";
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t col = 0; col < grid[r].size(); ++col) {
      const char ch = grid[r][col];
      if (opts.color && tint[r][col] != nullptr && ch != ' ') {
        line += tint[r][col];
        line += ch;
        line += kReset;
      } else {
        line += ch;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_svg(const Configuration& c, const RenderOptions& opts) {
  const Scenery s = collect(c, opts);
  constexpr double kScale = 24.0;
  const double h = std::sqrt(3.0) / 2.0;
  auto sx = [&](Point p) { return (p.x + p.y / 2.0) * kScale; };
  auto sy = [&](Point p) { return -p.y * h * kScale; };

  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (int y = s.min_y; y <= s.max_y; ++y) {
    for (int x = s.min_x; x <= s.max_x; ++x) {
      const Point p{x, y};
      lo_x = std::min(lo_x, sx(p));
      hi_x = std::max(hi_x, sx(p));
      lo_y = std::min(lo_y, sy(p));
      hi_y = std::max(hi_y, sy(p));
    }
  }
  const double pad = kScale;
  char buf[256];
  std::ostringstream out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.2f %.2f %.2f %.2f\">\n",
                lo_x - pad, lo_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"white\"/>\n",
                lo_x - pad, lo_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad);
  out << buf;

  for (int y = s.min_y; y <= s.max_y; ++y) {
    for (int x = s.min_x; x <= s.max_x; ++x) {
      const Point p{x, y};
      if (c.is_object(p)) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#808080\"/>\n", sx(p),
                      sy(p), kScale * 0.5);
      } else {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.50\" fill=\"#c0c0c0\"/>\n", sx(p),
                      sy(p));
      }
      out << buf;
      if (s.coating.contains(p)) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"none\" "
                      "stroke=\"#d08000\" stroke-width=\"1.5\"/>\n",
                      sx(p), sy(p), kScale * 0.42);
        out << buf;
      }
    }
  }
  for (const auto& [a, b] : s.links) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#1060c0\" "
                  "stroke-width=\"3\"/>\n",
                  sx(a), sy(a), sx(b), sy(b));
    out << buf;
  }
  for (const auto& [p, n] : s.robots) {
    const int shown = std::min(n, 3);
    for (int i = 0; i < shown; ++i) {
      const double offset = shown == 1 ? 0.0 : (i - (shown - 1) / 2.0) * kScale * 0.3;
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n", sx(p) + offset,
                    sy(p), kScale * 0.16, n > 2 ? "#d02020" : "#1060c0");
      out << buf;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pairbot
