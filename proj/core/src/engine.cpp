#include "pairbot/engine.hpp"

#include <stdexcept>
#include <string>

#include "pairbot/rng.hpp"

namespace pairbot {

namespace {

void note_ambiguity(Algorithm algo, const Snapshot& s, const EngineOptions& opts, RobotId r,
                    std::vector<std::string>* notes) {
  if (notes == nullptr) return;
  if (algo == Algorithm::Marching) {
    const unsigned mask = enabled_lines(marching_rules(), {s, std::nullopt});
    if ((mask & 0b1100u) == 0b1100u) {
      notes->push_back("march-lines-2-3:r" + std::to_string(r.index));
    }
  } else if (!s.objects.empty()) {
    const ScanOrder other =
        opts.scan == ScanOrder::Ascending ? ScanOrder::Descending : ScanOrder::Ascending;
    if (coating_dir(s, opts.scan) != coating_dir(s, other)) {
      notes->push_back("dir-scan-disagree:r" + std::to_string(r.index));
    }
  }
}

Decision decide(const Configuration& c, Algorithm algo, RobotId r, const EngineOptions& opts,
                std::vector<std::string>* notes) {
  const Snapshot s = take_snapshot(c, r);
  if (opts.on_snapshot) opts.on_snapshot(s);
  note_ambiguity(algo, s, opts, r, notes);
  return compute(algo, s, opts.scan);
}

}  // namespace

std::vector<MoveIntent> pair_intents(const Configuration& c, Algorithm algo, std::size_t pair,
                                     const EngineOptions& opts, std::vector<std::string>* notes) {
  const RobotId even{2 * pair};
  const RobotId odd{2 * pair + 1};
  std::vector<MoveIntent> intents;
  if (pair_state(c, pair) == PairState::Short) {
    // Both robots see the same snapshot and decide the same; only one moves.
    const Decision d = decide(c, algo, even, opts, notes);
    decide(c, algo, odd, opts, nullptr);
    if (d.moves()) intents.push_back({even, *d.target, MoveKind::ExclusiveFromShort});
    return intents;
  }
  for (RobotId r : {even, odd}) {
    const Decision d = decide(c, algo, r, opts, notes);
    if (!d.moves()) continue;
    const Label buddy = label_toward(c.position(r), c.position(r.buddy()));
    if (*d.target != buddy) {
      throw std::logic_error("robot " + std::to_string(r.index) +
                             " of a long pair chose a move away from its buddy");
    }
    intents.push_back({r, *d.target, MoveKind::CloseUpFromLong});
  }
  return intents;
}

StepResult step_ssync(const Configuration& c, Algorithm algo, std::span<const std::size_t> active,
                      const EngineOptions& opts) {
  if (active.empty()) throw std::invalid_argument("step_ssync: empty activation set");
  StepResult result;
  for (std::size_t pair : active) {
    auto intents = pair_intents(c, algo, pair, opts, &result.notes);
    result.moves.insert(result.moves.end(), intents.begin(), intents.end());
  }
  MoveOutcome out = apply_moves(c, result.moves);
  result.config = std::move(out.config);
  result.violations = std::move(out.violations);
  return result;
}

StepResult step_fsync(const Configuration& c, Algorithm algo, const EngineOptions& opts) {
  if (c.pair_count() == 0) return {c, {}, {}, {}};
  std::vector<std::size_t> all(c.pair_count());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return step_ssync(c, algo, all, opts);
}

AsyncStepResult step_async(const AsyncState& s, const AsyncEvent& e, Algorithm algo,
                           const EngineOptions& opts) {
  if (e.pair >= s.pending.size()) throw std::logic_error("async event for unknown pair");
  AsyncStepResult result{s, {}, {}, {}};
  if (e.kind == EventKind::Look) {
    if (!s.idle(e.pair)) {
      throw std::logic_error("Look for pair " + std::to_string(e.pair) + " while it is pending");
    }
    result.state.pending[e.pair] =
        PendingActivation{pair_intents(s.config, algo, e.pair, opts, &result.notes)};
    return result;
  }
  if (e.kind != EventKind::Move) throw std::logic_error("step_async: not a Look or Move event");
  if (s.idle(e.pair)) {
    throw std::logic_error("Move for pair " + std::to_string(e.pair) + " without a pending Look");
  }
  result.moves = s.pending[e.pair]->intents;
  result.state.pending[e.pair].reset();
  MoveOutcome out = apply_moves(s.config, result.moves);
  result.state.config = std::move(out.config);
  result.violations = std::move(out.violations);
  return result;
}

bool is_terminated(const Configuration& c, Algorithm algo, const EngineOptions& opts) {
  for (std::size_t k = 0; k < c.pair_count(); ++k) {
    if (!pair_intents(c, algo, k, opts).empty()) return false;
  }
  return true;
}

bool is_quiescent(const AsyncState& s, Algorithm algo, const EngineOptions& opts) {
  for (const auto& p : s.pending) {
    if (p && !p->intents.empty()) return false;
  }
  return is_terminated(s.config, algo, opts);
}

namespace {

bool has_split(const std::vector<Violation>& vs) {
  for (const Violation& v : vs) {
    if (v.kind == ViolationKind::PairSplit) return true;
  }
  return false;
}

}  // namespace

Trace run(const Scene& scene, Algorithm algo, const SchedulerSpec& scheduler,
          std::uint64_t max_events, const EngineOptions& opts) {
  if (scheduler.kind == SchedulerKind::AsyncExhaustive) {
    throw std::invalid_argument("run: async-exhaustive is handled by explore()");
  }
  if (scheduler.kind == SchedulerKind::SSync &&
      !(scheduler.activation_probability > 0.0 && scheduler.activation_probability <= 1.0)) {
    throw std::invalid_argument("run: ssync activation probability must be in (0, 1]");
  }
  validate_scene(scene);
  if (algo == Algorithm::Coating && !scene.pairs.empty() &&
      !to_configuration(scene).head_pair()) {
    throw SceneError("pairs: coating needs exactly one pair with \"head\": true");
  }
  Trace trace;
  trace.header.scene = scene;
  trace.header.algorithm = algo;
  trace.header.scheduler = scheduler;
  trace.header.max_events = max_events;
  trace.header.scan = opts.scan;

  Rng rng(scheduler.seed);
  AsyncState state(to_configuration(scene));
  const std::size_t pairs = state.config.pair_count();
  TraceSummary& summary = trace.summary;

  auto record = [&](TraceEvent event) {
    event.index = trace.events.size();
    event.digest = position_digest(state.config);
    summary.violations += event.violations.size();
    const bool split = has_split(event.violations);
    trace.events.push_back(std::move(event));
    return !split;
  };

  if (scheduler.kind == SchedulerKind::AsyncRandom) {
    summary.terminated = is_quiescent(state, algo, opts);
  } else {
    summary.terminated = is_terminated(state.config, algo, opts);
  }

  while (!summary.terminated && trace.events.size() < max_events) {
    TraceEvent event;
    bool ok = true;
    if (scheduler.kind == SchedulerKind::AsyncRandom) {
      const std::size_t k = static_cast<std::size_t>(rng.below(pairs));
      const AsyncEvent e{state.idle(k) ? EventKind::Look : EventKind::Move, k};
      AsyncStepResult r = step_async(state, e, algo, opts);
      state = std::move(r.state);
      event.kind = e.kind;
      event.pairs = {k};
      event.moves = std::move(r.moves);
      event.violations = std::move(r.violations);
      event.notes = std::move(r.notes);
      ok = record(std::move(event));
      if (ok) summary.terminated = is_quiescent(state, algo, opts);
    } else {
      std::vector<std::size_t> active;
      if (scheduler.kind == SchedulerKind::FSync) {
        for (std::size_t k = 0; k < pairs; ++k) active.push_back(k);
      } else {
        while (active.empty()) {
          for (std::size_t k = 0; k < pairs; ++k) {
            if (rng.chance(scheduler.activation_probability)) active.push_back(k);
          }
        }
      }
      StepResult r = step_ssync(state.config, algo, active, opts);
      state.config = std::move(r.config);
      event.kind = EventKind::SyncRound;
      event.pairs = std::move(active);
      event.moves = std::move(r.moves);
      event.violations = std::move(r.violations);
      event.notes = std::move(r.notes);
      ok = record(std::move(event));
      if (ok) summary.terminated = is_terminated(state.config, algo, opts);
    }
    if (!ok) {
      summary.aborted = true;
      break;
    }
  }
  summary.events = trace.events.size();
  summary.final_digest = position_digest(state.config);
  return trace;
}

}  // namespace pairbot
