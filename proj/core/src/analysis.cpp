#include "pairbot/analysis.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace pairbot {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Residual network with BFS augmentation; flows here are tiny (we only ever
// need to know whether two paths exist), so shortest augmenting paths are
// plenty.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_edge(int from, int to, int cap) {
    adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, 0});
    adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, 0});
  }

  void reset() {
    for (Edge& e : edges_) e.flow = 0;
  }

  int max_flow(int source, int sink, int limit) {
    int total = 0;
    std::vector<int> via(adj_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int id : adj_[static_cast<std::size_t>(u)]) {
          const Edge& e = edges_[static_cast<std::size_t>(id)];
          if (e.cap - e.flow > 0 && via[static_cast<std::size_t>(e.to)] == -1) {
            via[static_cast<std::size_t>(e.to)] = id;
            queue.push(e.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      int push = limit - total;
      for (int v = sink; v != source;) {
        const Edge& e = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
        push = std::min(push, e.cap - e.flow);
        v = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to;
      }
      for (int v = sink; v != source;) {
        const int id = via[static_cast<std::size_t>(v)];
        edges_[static_cast<std::size_t>(id)].flow += push;
        edges_[static_cast<std::size_t>(id ^ 1)].flow -= push;
        v = edges_[static_cast<std::size_t>(id ^ 1)].to;
      }
      total += push;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    int cap;
    int flow;
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Free points of the window, each split into an in-node (2i) and out-node
// (2i+1); node 2N is the source.
class FreeGraph {
 public:
  FreeGraph(const PointSet& object, const Window& window) {
    for (int y = window.min_y; y <= window.max_y; ++y) {
      for (int x = window.min_x; x <= window.max_x; ++x) {
        const Point p{x, y};
        if (object.contains(p)) continue;
        index_.emplace(p, static_cast<int>(points_.size()));
        points_.push_back(p);
      }
    }
  }

  std::size_t size() const { return points_.size(); }
  int index(Point p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::vector<Point> points_;
  std::unordered_map<Point, int, PointHash> index_;
};

FlowNetwork build_network(const FreeGraph& g, const PointSet& sources, const Disjointness mode) {
  const int n = static_cast<int>(g.size());
  FlowNetwork net(static_cast<std::size_t>(2 * n + 1));
  const int source = 2 * n;
  for (int i = 0; i < n; ++i) {
    const Point p = g.points()[static_cast<std::size_t>(i)];
    const bool is_source = sources.contains(p);
    const int vertex_cap = (is_source || mode == Disjointness::Edge) ? kInf : 1;
    net.add_edge(2 * i, 2 * i + 1, vertex_cap);
    if (is_source) net.add_edge(source, 2 * i, kInf);
    for (const Point& q : neighbors(p)) {
      const int j = g.index(q);
      if (j >= 0) net.add_edge(2 * i + 1, 2 * j, 1);
    }
  }
  return net;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_inputs(const std::vector<Point>& object, const std::vector<Point>& robots) {
  if (robots.empty()) throw std::invalid_argument("non-coating set needs at least one robot");
  const PointSet obj(object.begin(), object.end());
  for (const Point& r : robots) {
    if (obj.contains(r)) {
      throw std::invalid_argument("robot point " + to_string(r) + " lies on the object");
    }
  }
}

Window analysis_window(const std::vector<Point>& object, const std::vector<Point>& robots,
                       int margin) {
  std::vector<Point> all = object;
  all.insert(all.end(), robots.begin(), robots.end());
  return Window::around(all, margin);
}

// Max-flow value per surface point, capped at `limit`.
std::vector<int> path_counts(const std::vector<Point>& object, const std::vector<Point>& robots,
                             const std::vector<Point>& targets, const AnalysisOptions& opts,
                             int limit) {
  require_inputs(object, robots);
  const PointSet obj(object.begin(), object.end());
  const Window window = analysis_window(object, robots, opts.margin);
  const FreeGraph g(obj, window);
  const PointSet robot_set(robots.begin(), robots.end());
  const int source = 2 * static_cast<int>(g.size());

  std::vector<int> counts(targets.size(), 0);
  if (opts.sources == SourceMode::Pooled) {
    FlowNetwork net = build_network(g, robot_set, opts.disjointness);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (robot_set.contains(targets[t])) {
        counts[t] = limit;
        continue;
      }
      const int i = g.index(targets[t]);
      if (i < 0) continue;
      net.reset();
      counts[t] = net.max_flow(source, 2 * i, limit);
    }
    return counts;
  }
  for (const Point& r : sorted(robots)) {
    FlowNetwork net = build_network(g, PointSet{r}, opts.disjointness);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (counts[t] >= limit) continue;
      if (targets[t] == r) {
        counts[t] = limit;
        continue;
      }
      const int i = g.index(targets[t]);
      if (i < 0) continue;
      net.reset();
      counts[t] = std::max(counts[t], net.max_flow(source, 2 * i, limit));
    }
  }
  return counts;
}

}  // namespace

Window Window::around(const std::vector<Point>& points, int margin) {
  if (points.empty()) return {};
  Window w{points.front().x, points.front().x, points.front().y, points.front().y};
  for (const Point& p : points) {
    w.min_x = std::min(w.min_x, p.x);
    w.max_x = std::max(w.max_x, p.x);
    w.min_y = std::min(w.min_y, p.y);
    w.max_y = std::max(w.max_y, p.y);
  }
  w.min_x -= margin;
  w.max_x += margin;
  w.min_y -= margin;
  w.max_y += margin;
  return w;
}

std::vector<Point> surface_set(const std::vector<Point>& object) {
  if (!is_connected(object)) throw std::invalid_argument("object is not connected");
  const PointSet obj(object.begin(), object.end());
  std::vector<Point> out;
  for (const Point& u : object) {
    for (const Point& v : neighbors(u)) {
      if (!obj.contains(v)) out.push_back(v);
    }
  }
  return sorted(std::move(out));
}

int disjoint_path_count(const std::vector<Point>& object, const std::vector<Point>& robot_points,
                        Point target, const AnalysisOptions& opts, int limit) {
  return path_counts(object, robot_points, {target}, opts, limit).front();
}

std::vector<Point> non_coating_set(const std::vector<Point>& object,
                                   const std::vector<Point>& robot_points,
                                   const AnalysisOptions& opts) {
  const std::vector<Point> surface = surface_set(object);
  const std::vector<int> counts = path_counts(object, robot_points, surface, opts, 2);
  std::vector<Point> out;
  for (std::size_t i = 0; i < surface.size(); ++i) {
    if (counts[i] < 2) out.push_back(surface[i]);
  }
  return out;
}

std::vector<Point> coating_set(const std::vector<Point>& object,
                               const std::vector<Point>& robot_points,
                               const AnalysisOptions& opts) {
  return analyze(object, robot_points, opts).coating;
}

CoatingAnalysis analyze(const std::vector<Point>& object, const std::vector<Point>& robot_points,
                        const AnalysisOptions& opts) {
  CoatingAnalysis a;
  a.surface = surface_set(object);
  a.non_coating = non_coating_set(object, robot_points, opts);
  std::set_difference(a.surface.begin(), a.surface.end(), a.non_coating.begin(),
                      a.non_coating.end(), std::back_inserter(a.coating));
  return a;
}

std::vector<Point> robot_points(const Scene& scene) {
  std::vector<Point> pts;
  for (const auto& p : scene.pairs) {
    pts.push_back(p.a);
    pts.push_back(p.b);
  }
  return sorted(std::move(pts));
}

CoatingAnalysis analyze_scene(const Scene& scene, const AnalysisOptions& opts) {
  return analyze(scene.object, robot_points(scene), opts);
}

CoatingVerdict check_coating_solved(const Configuration& c, const std::vector<Point>& coating,
                                    const EngineOptions& opts) {
  CoatingVerdict v;
  for (const Point& p : coating) {
    if (c.robots_at(p) == 0) v.missing.push_back(p);
  }
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    if (pair_state(c, k) != PairState::Short) v.non_short_pairs.push_back(k);
  }
  v.enabled = !is_terminated(c, Algorithm::Coating, opts);
  v.solved = v.missing.empty() && v.non_short_pairs.empty() && !v.enabled;
  return v;
}

MarchingProgress check_marching_progress(const Trace& trace) {
  MarchingProgress progress;
  const std::vector<Configuration> frames = replay(trace);
  auto max_x = [](const Configuration& c) {
    int m = std::numeric_limits<int>::min();
    for (const Point& p : c.positions()) m = std::max(m, p.x);
    return m;
  };
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (!is_line_formed(frames[i])) progress.line_formed_always = false;
    if (i > 0 && max_x(frames[i]) > max_x(frames[i - 1])) {
      progress.head_advances.push_back(trace.events[i - 1].index);
    }
  }
  return progress;
}

}  // namespace pairbot
