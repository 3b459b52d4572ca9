#pragma once

#include <cstddef>
#include <vector>

#include "pairbot/engine.hpp"
#include "pairbot/geometry.hpp"
#include "pairbot/model.hpp"
#include "pairbot/scene.hpp"
#include "pairbot/trace.hpp"

namespace pairbot {

// Axis-aligned box in axial coordinates; stands in for the unbounded grid.
struct Window {
  int min_x = 0;
  int max_x = -1;
  int min_y = 0;
  int max_y = -1;

  bool contains(Point p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  std::size_t width() const { return static_cast<std::size_t>(max_x - min_x + 1); }
  std::size_t height() const { return static_cast<std::size_t>(max_y - min_y + 1); }

  // Bounding box of the points grown by `margin` on every side.
  static Window around(const std::vector<Point>& points, int margin);
};

// Which paths count as "disjoint".
enum class Disjointness : std::uint8_t {
  Internal,  // no shared vertex except the endpoints
  Edge,      // no shared edge
};

// How robot points act as path sources.
enum class SourceMode : std::uint8_t {
  Pooled,    // all robot points merged into one source
  PerRobot,  // some single robot point must reach the target twice
};

struct AnalysisOptions {
  int margin = 3;
  Disjointness disjointness = Disjointness::Internal;
  SourceMode sources = SourceMode::Pooled;
};

// Non-object points adjacent to the object, sorted. Throws
// std::invalid_argument for a disconnected object.
std::vector<Point> surface_set(const std::vector<Point>& object);

// Surface points without two disjoint paths from the robots through the
// object-free grid (restricted to the analysis window), sorted. Throws
// std::invalid_argument for no robots or robots on the object.
std::vector<Point> non_coating_set(const std::vector<Point>& object,
                                   const std::vector<Point>& robot_points,
                                   const AnalysisOptions& opts = {});

std::vector<Point> coating_set(const std::vector<Point>& object,
                               const std::vector<Point>& robot_points,
                               const AnalysisOptions& opts = {});

// Number of disjoint paths from the robots to `target`, stopping at `limit`.
int disjoint_path_count(const std::vector<Point>& object, const std::vector<Point>& robot_points,
                        Point target, const AnalysisOptions& opts = {}, int limit = 2);

struct CoatingAnalysis {
  std::vector<Point> surface;
  std::vector<Point> non_coating;
  std::vector<Point> coating;
};

CoatingAnalysis analyze(const std::vector<Point>& object, const std::vector<Point>& robot_points,
                        const AnalysisOptions& opts = {});
CoatingAnalysis analyze_scene(const Scene& scene, const AnalysisOptions& opts = {});

// Distinct robot points of a scene, sorted.
std::vector<Point> robot_points(const Scene& scene);

struct CoatingVerdict {
  bool solved = false;
  std::vector<Point> missing;
  std::vector<std::size_t> non_short_pairs;
  // Some robot can still move.
  bool enabled = false;
};

// Judged against a coating set fixed from the initial configuration.
CoatingVerdict check_coating_solved(const Configuration& c, const std::vector<Point>& coating,
                                    const EngineOptions& opts = {});

struct MarchingProgress {
  bool line_formed_always = true;
  // Events after which the largest occupied x grew.
  std::vector<std::size_t> head_advances;
};

MarchingProgress check_marching_progress(const Trace& trace);

}  // namespace pairbot
