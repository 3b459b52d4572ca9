#include "pairbot/scene.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pairbot {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

json point_to_json(Point p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw SceneError(field + ": expected a point [x, y] of two integers, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

Scene scene_from_json(const json& j) {
  if (!j.is_object()) throw SceneError("scene: top level must be an object");
  Scene scene;
  if (!j.contains("pairs") || !j["pairs"].is_array()) {
    throw SceneError("pairs: missing or not an array");
  }
  const auto& pairs = j["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string field = "pairs[" + std::to_string(i) + "]";
    const auto& entry = pairs[i];
    if (!entry.is_object()) throw SceneError(field + ": expected an object");
    if (!entry.contains("a")) throw SceneError(field + ".a: missing (a pair needs two robots)");
    if (!entry.contains("b")) throw SceneError(field + ".b: missing (a pair needs two robots)");
    PairPlacement placement;
    placement.a = point_from_json(entry["a"], field + ".a");
    placement.b = point_from_json(entry["b"], field + ".b");
    if (entry.contains("head")) {
      if (!entry["head"].is_boolean()) throw SceneError(field + ".head: expected a boolean");
      placement.head = entry["head"].get<bool>();
    }
    scene.pairs.push_back(placement);
  }
  if (j.contains("object")) {
    const auto& object = j["object"];
    if (!object.is_array()) throw SceneError("object: expected an array of points");
    for (std::size_t i = 0; i < object.size(); ++i) {
      scene.object.push_back(point_from_json(object[i], "object[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("algorithm")) {
    if (!j["algorithm"].is_string()) throw SceneError("algorithm: expected a string");
    scene.algorithm = j["algorithm"].get<std::string>();
  }
  return scene;
}

Scene parse_scene(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SceneError("scene JSON syntax error at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) +
                     ": " + e.what());
  }
  Scene scene = scene_from_json(j);
  validate_scene(scene);
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError(path + ": cannot open scene file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scene(buffer.str());
  } catch (const SceneError& e) {
    throw SceneError(path + ": " + e.what());
  }
}

json scene_to_json(const Scene& scene) {
  json pairs = json::array();
  for (const auto& p : scene.pairs) {
    pairs.push_back({{"a", point_to_json(p.a)}, {"b", point_to_json(p.b)}, {"head", p.head}});
  }
  json object = json::array();
  for (const Point& p : scene.object) object.push_back(point_to_json(p));
  json j = {{"pairs", pairs}, {"object", object}};
  if (scene.algorithm) j["algorithm"] = *scene.algorithm;
  return j;
}

bool is_connected(const std::vector<Point>& points) {
  if (points.empty()) return true;
  PointSet remaining(points.begin(), points.end());
  std::queue<Point> queue;
  queue.push(points.front());
  remaining.erase(points.front());
  while (!queue.empty()) {
    const Point p = queue.front();
    queue.pop();
    for (const Point& q : neighbors(p)) {
      if (remaining.erase(q) > 0) queue.push(q);
    }
  }
  return remaining.empty();
}

void validate_scene(const Scene& scene) {
  PointSet object(scene.object.begin(), scene.object.end());
  if (object.size() != scene.object.size()) throw SceneError("object: duplicate points");
  if (!is_connected(scene.object)) throw SceneError("object: points are not connected");

  std::map<Point, int> load;
  int heads = 0;
  for (std::size_t i = 0; i < scene.pairs.size(); ++i) {
    const auto& p = scene.pairs[i];
    const std::string field = "pairs[" + std::to_string(i) + "]";
    if (dist(p.a, p.b) > 1) {
      throw SceneError(field + ": robots " + to_string(p.a) + " and " + to_string(p.b) +
                       " are more than one step apart");
    }
    for (const Point& q : {p.a, p.b}) {
      if (object.contains(q)) throw SceneError(field + ": robot on object point " + to_string(q));
      if (++load[q] > 2) throw SceneError(field + ": more than two robots on " + to_string(q));
    }
    if (p.head) ++heads;
  }
  if (heads > 1) throw SceneError("pairs: at most one pair may set \"head\": true");
  if (scene.algorithm && *scene.algorithm != "marching" && *scene.algorithm != "coating") {
    throw SceneError("algorithm: unknown algorithm \"" + *scene.algorithm + "\"");
  }
  if (scene.algorithm == "coating" && heads != 1 && !scene.pairs.empty()) {
    throw SceneError("pairs: coating needs exactly one pair with \"head\": true");
  }
}

Configuration to_configuration(const Scene& scene) {
  std::vector<Point> positions;
  positions.reserve(scene.pairs.size() * 2);
  std::optional<std::size_t> head;
  for (std::size_t i = 0; i < scene.pairs.size(); ++i) {
    positions.push_back(scene.pairs[i].a);
    positions.push_back(scene.pairs[i].b);
    if (scene.pairs[i].head) head = i;
  }
  return Configuration(std::move(positions), PointSet(scene.object.begin(), scene.object.end()),
                       head);
}

Scene scene_from_configuration(const Configuration& c) {
  Scene scene;
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    scene.pairs.push_back({c.position(RobotId{2 * k}), c.position(RobotId{2 * k + 1}),
                           c.head_pair() == k});
  }
  scene.object.assign(c.object().begin(), c.object().end());
  std::sort(scene.object.begin(), scene.object.end());
  return scene;
}

}  // namespace pairbot
