#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pairbot/engine.hpp"

namespace pairbot {

using StatePredicate = std::function<bool(const Configuration&)>;

struct ExploreOptions {
  std::size_t depth_bound = 10;
  std::size_t max_states = 5'000'000;
  // Worker threads for frontier expansion. Results do not depend on it.
  unsigned jobs = 1;
  // Invariant checked on every reachable configuration; empty = always true.
  StatePredicate predicate;
  std::string predicate_name = "true";
  std::size_t max_counterexamples = 8;
  // engine.on_snapshot is called from every worker when jobs > 1.
  EngineOptions engine;
};

struct Counterexample {
  std::vector<AsyncEvent> events;
  std::string reason;
  Configuration config;
};

struct ExploreReport {
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::size_t depth_reached = 0;
  std::size_t predicate_violations = 0;
  std::size_t safety_violations = 0;
  bool budget_exceeded = false;
  std::vector<Counterexample> counterexamples;

  bool clean() const { return predicate_violations == 0 && safety_violations == 0; }
};

// Breadth-first enumeration of every ASYNC interleaving of Look and Move
// events from `initial`, up to depth_bound events. States are deduplicated on
// exact positions plus pending intents.
ExploreReport explore(const Configuration& initial, Algorithm algo, const ExploreOptions& opts);

// Replays a counterexample's events from `initial`.
AsyncState replay_events(const Configuration& initial, Algorithm algo,
                         const std::vector<AsyncEvent>& events, const EngineOptions& opts = {});

}  // namespace pairbot
