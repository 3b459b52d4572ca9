#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pairbot/geometry.hpp"
#include "pairbot/model.hpp"

namespace pairbot {

// Malformed or invalid scene input. The message names the offending line or
// field.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairPlacement {
  Point a;
  Point b;
  bool head = false;

  friend bool operator==(const PairPlacement&, const PairPlacement&) = default;
};

// Scene file contents:
//   { "pairs": [ {"a": [x,y], "b": [x,y], "head": bool}, ... ],
//     "object": [ [x,y], ... ],
//     "algorithm": "marching" | "coating" }       (algorithm optional)
struct Scene {
  std::vector<PairPlacement> pairs;
  std::vector<Point> object;
  std::optional<std::string> algorithm;

  friend bool operator==(const Scene&, const Scene&) = default;
};

Scene parse_scene(std::string_view text);
Scene load_scene(const std::string& path);
Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& scene);

// Throws SceneError on any load-time invariant breach.
void validate_scene(const Scene& scene);

Configuration to_configuration(const Scene& scene);
Scene scene_from_configuration(const Configuration& c);

// True when the points induce a connected subgraph of the grid (vacuously
// true for the empty set).
bool is_connected(const std::vector<Point>& points);

nlohmann::json point_to_json(Point p);
Point point_from_json(const nlohmann::json& j, const std::string& field);

}  // namespace pairbot
