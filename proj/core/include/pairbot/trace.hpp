#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pairbot/algorithms.hpp"
#include "pairbot/model.hpp"
#include "pairbot/scene.hpp"

namespace pairbot {

enum class SchedulerKind : std::uint8_t { FSync, SSync, AsyncRandom, AsyncExhaustive };

std::string to_string(SchedulerKind k);
// "fsync", "ssync", "async-random", "async-exhaustive".
SchedulerKind parse_scheduler(std::string_view name);

struct SchedulerSpec {
  SchedulerKind kind = SchedulerKind::FSync;
  std::uint64_t seed = 0;
  // SSYNC: each pair joins a round independently with this probability.
  double activation_probability = 0.5;
  // AsyncExhaustive only.
  std::size_t depth_bound = 0;

  friend bool operator==(const SchedulerSpec&, const SchedulerSpec&) = default;
};

enum class EventKind : std::uint8_t { Look, Move, SyncRound };

std::string to_string(EventKind k);

struct TraceHeader {
  Scene scene;
  Algorithm algorithm = Algorithm::Marching;
  SchedulerSpec scheduler;
  std::uint64_t max_events = 0;
  ScanOrder scan = ScanOrder::Ascending;
  // Coating set of the initial configuration, recorded for coating runs.
  std::optional<std::vector<Point>> coating;

  friend bool operator==(const TraceHeader&, const TraceHeader&) = default;
};

struct TraceEvent {
  std::size_t index = 0;
  EventKind kind = EventKind::SyncRound;
  // The pair for Look/Move; the activated pairs for a SyncRound.
  std::vector<std::size_t> pairs;
  std::vector<MoveIntent> moves;
  std::uint64_t digest = 0;
  std::vector<Violation> violations;
  // Rule-ambiguity observations (see algorithms diagnostics).
  std::vector<std::string> notes;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct TraceSummary {
  bool terminated = false;
  // Set when a pair split and the run could not continue.
  bool aborted = false;
  std::size_t events = 0;
  std::size_t violations = 0;
  std::uint64_t final_digest = 0;
  // Post-hoc check outcomes by check name, filled in by callers.
  std::map<std::string, bool> checks;

  friend bool operator==(const TraceSummary&, const TraceSummary&) = default;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceEvent> events;
  TraceSummary summary;

  friend bool operator==(const Trace&, const Trace&) = default;
};

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a over the robot positions in robot order.
std::uint64_t position_digest(const Configuration& c);
std::string digest_hex(std::uint64_t digest);

nlohmann::json to_json(const TraceHeader& h);
nlohmann::json to_json(const TraceEvent& e);
nlohmann::json to_json(const TraceSummary& s);

// JSON Lines: header, one line per event, summary.
void write_jsonl(std::ostream& out, const Trace& trace);
std::string to_jsonl(const Trace& trace);
Trace read_jsonl(std::istream& in);
Trace load_trace(const std::string& path);

// Configurations before the first event and after every event (size
// events + 1). Throws TraceError when a digest does not match.
std::vector<Configuration> replay(const Trace& trace);

}  // namespace pairbot
