#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pairbot/algorithms.hpp"
#include "pairbot/model.hpp"
#include "pairbot/scene.hpp"
#include "pairbot/trace.hpp"

namespace pairbot {

struct EngineOptions {
  ScanOrder scan = ScanOrder::Ascending;
  // Called with every snapshot the engine takes.
  std::function<void(const Snapshot&)> on_snapshot;
};

// Look + Compute for both robots of a pair against c. A Short pair yields at
// most one exclusive move, made by its even-indexed robot. `notes` receives
// rule-ambiguity observations when non-null.
std::vector<MoveIntent> pair_intents(const Configuration& c, Algorithm algo, std::size_t pair,
                                     const EngineOptions& opts = {},
                                     std::vector<std::string>* notes = nullptr);

struct StepResult {
  Configuration config;
  std::vector<MoveIntent> moves;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

StepResult step_fsync(const Configuration& c, Algorithm algo, const EngineOptions& opts = {});

// `active` must be nonempty.
StepResult step_ssync(const Configuration& c, Algorithm algo, std::span<const std::size_t> active,
                      const EngineOptions& opts = {});

// Intents captured at a pair's Look, applied verbatim at its Move.
struct PendingActivation {
  std::vector<MoveIntent> intents;
  friend bool operator==(const PendingActivation&, const PendingActivation&) = default;
};

struct AsyncState {
  Configuration config;
  std::vector<std::optional<PendingActivation>> pending;

  explicit AsyncState(Configuration c)
      : config(std::move(c)), pending(config.pair_count()) {}

  bool idle(std::size_t pair) const { return !pending[pair].has_value(); }
  friend bool operator==(const AsyncState&, const AsyncState&) = default;
};

struct AsyncEvent {
  EventKind kind = EventKind::Look;  // Look or Move
  std::size_t pair = 0;
  friend bool operator==(const AsyncEvent&, const AsyncEvent&) = default;
};

struct AsyncStepResult {
  AsyncState state;
  std::vector<MoveIntent> moves;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

// Throws std::logic_error on a scheduling-contract breach (Look while
// pending, Move while idle).
AsyncStepResult step_async(const AsyncState& s, const AsyncEvent& e, Algorithm algo,
                           const EngineOptions& opts = {});

// Every pair would stay if activated now.
bool is_terminated(const Configuration& c, Algorithm algo, const EngineOptions& opts = {});

// Terminated and no pending activation would move anything.
bool is_quiescent(const AsyncState& s, Algorithm algo, const EngineOptions& opts = {});

// Drives the scheduler until max_events events or termination. Deterministic
// in (scene, algo, scheduler, max_events). AsyncExhaustive is not a run
// scheduler; use explore().
Trace run(const Scene& scene, Algorithm algo, const SchedulerSpec& scheduler,
          std::uint64_t max_events, const EngineOptions& opts = {});

}  // namespace pairbot
