#include "pairbot/explorer.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <utility>

namespace pairbot {

namespace {

using StateKey = std::vector<std::int32_t>;

struct KeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int32_t v : k) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

// Pending slot code: 0 idle, otherwise 1 + per-robot targets in base 7.
std::int32_t pending_code(const std::optional<PendingActivation>& p, std::size_t pair) {
  if (!p) return 0;
  int even = 0;
  int odd = 0;
  for (const MoveIntent& m : p->intents) {
    (m.mover.index == 2 * pair ? even : odd) = to_int(m.target);
  }
  return 1 + even * 7 + odd;
}

StateKey key_of(const AsyncState& s) {
  StateKey key;
  key.reserve(s.config.robot_count() * 2 + s.pending.size());
  for (const Point& p : s.config.positions()) {
    key.push_back(p.x);
    key.push_back(p.y);
  }
  for (std::size_t k = 0; k < s.pending.size(); ++k) key.push_back(pending_code(s.pending[k], k));
  return key;
}

struct Node {
  std::size_t parent;
  AsyncEvent event;
};

struct Successor {
  std::size_t parent;
  AsyncEvent event;
  AsyncState state;
  StateKey key;
  std::vector<Violation> violations;
  bool predicate_ok;
  bool split;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

}  // namespace

AsyncState replay_events(const Configuration& initial, Algorithm algo,
                         const std::vector<AsyncEvent>& events, const EngineOptions& opts) {
  AsyncState s(initial);
  for (const AsyncEvent& e : events) s = step_async(s, e, algo, opts).state;
  return s;
}

ExploreReport explore(const Configuration& initial, Algorithm algo, const ExploreOptions& opts) {
  ExploreReport report;
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::size_t, KeyHash> seen;

  auto holds = [&](const Configuration& c) { return !opts.predicate || opts.predicate(c); };

  auto path_to = [&](std::size_t id) {
    std::vector<AsyncEvent> events;
    while (id != kRoot && nodes[id].parent != kRoot) {
      events.push_back(nodes[id].event);
      id = nodes[id].parent;
    }
    std::reverse(events.begin(), events.end());
    return events;
  };

  auto add_counterexample = [&](std::size_t id, std::string reason, const Configuration& c) {
    if (report.counterexamples.size() < opts.max_counterexamples) {
      report.counterexamples.push_back({path_to(id), std::move(reason), c});
    }
  };

  AsyncState root(initial);
  nodes.push_back({kRoot, {}});
  seen.emplace(key_of(root), 0);
  report.states = 1;
  if (!holds(root.config)) {
    ++report.predicate_violations;
    add_counterexample(0, "predicate " + opts.predicate_name + " fails", root.config);
  }

  std::vector<std::pair<std::size_t, AsyncState>> frontier;
  frontier.emplace_back(0, std::move(root));
  const std::size_t pairs = initial.pair_count();
  const unsigned jobs = std::max(1u, opts.jobs);

  for (std::size_t depth = 0; depth < opts.depth_bound && !frontier.empty(); ++depth) {
    // Expand chunks independently, then merge in frontier order.
    std::vector<std::vector<Successor>> chunks(jobs);
    auto expand = [&](unsigned worker) {
      const std::size_t begin = frontier.size() * worker / jobs;
      const std::size_t end = frontier.size() * (worker + 1) / jobs;
      for (std::size_t i = begin; i < end; ++i) {
        const auto& [id, state] = frontier[i];
        for (std::size_t k = 0; k < pairs; ++k) {
          const AsyncEvent e{state.idle(k) ? EventKind::Look : EventKind::Move, k};
          AsyncStepResult r = step_async(state, e, algo, opts.engine);
          const bool split = std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
            return v.kind == ViolationKind::PairSplit;
          });
          const bool ok = split || holds(r.state.config);
          StateKey key = key_of(r.state);
          chunks[worker].push_back(
              {id, e, std::move(r.state), std::move(key), std::move(r.violations), ok, split});
        }
      }
    };
    if (jobs == 1) {
      expand(0);
    } else {
      std::vector<std::thread> workers;
      for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(expand, w);
      for (auto& t : workers) t.join();
    }

    std::vector<std::pair<std::size_t, AsyncState>> next_frontier;
    for (auto& chunk : chunks) {
      for (Successor& s : chunk) {
        ++report.transitions;
        auto [it, inserted] = seen.try_emplace(std::move(s.key), nodes.size());
        if (!inserted) continue;
        const std::size_t id = nodes.size();
        nodes.push_back({s.parent, s.event});
        ++report.states;
        report.depth_reached = depth + 1;
        if (!s.violations.empty()) {
          report.safety_violations += s.violations.size();
          add_counterexample(id, "safety: " + describe(s.violations.front()), s.state.config);
        }
        if (!s.predicate_ok) {
          ++report.predicate_violations;
          add_counterexample(id, "predicate " + opts.predicate_name + " fails", s.state.config);
        }
        if (!s.split) next_frontier.emplace_back(id, std::move(s.state));
        if (report.states >= opts.max_states) {
          report.budget_exceeded = true;
          return report;
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return report;
}

}  // namespace pairbot
