#include "pairbot/trace.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pairbot {

using nlohmann::json;

std::string to_string(SchedulerKind k) {
  switch (k) {
    case SchedulerKind::FSync:
      return "fsync";
    case SchedulerKind::SSync:
      return "ssync";
    case SchedulerKind::AsyncRandom:
      return "async-random";
    case SchedulerKind::AsyncExhaustive:
      return "async-exhaustive";
  }
  return "unknown";
}

SchedulerKind parse_scheduler(std::string_view name) {
  if (name == "fsync") return SchedulerKind::FSync;
  if (name == "ssync") return SchedulerKind::SSync;
  if (name == "async-random") return SchedulerKind::AsyncRandom;
  if (name == "async-exhaustive") return SchedulerKind::AsyncExhaustive;
  throw std::invalid_argument("unknown scheduler \"" + std::string(name) + "\"");
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::Look:
      return "look";
    case EventKind::Move:
      return "move";
    case EventKind::SyncRound:
      return "round";
  }
  return "unknown";
}

namespace {

EventKind parse_event_kind(const std::string& s) {
  if (s == "look") return EventKind::Look;
  if (s == "move") return EventKind::Move;
  if (s == "round") return EventKind::SyncRound;
  throw TraceError("unknown event kind \"" + s + "\"");
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::ExclusiveFromShort:
      return "exclusive";
    case MoveKind::CloseUpFromLong:
      return "close-up";
    case MoveKind::Stay:
      return "stay";
  }
  return "unknown";
}

MoveKind parse_move_kind(const std::string& s) {
  if (s == "exclusive") return MoveKind::ExclusiveFromShort;
  if (s == "close-up") return MoveKind::CloseUpFromLong;
  if (s == "stay") return MoveKind::Stay;
  throw TraceError("unknown move kind \"" + s + "\"");
}

ViolationKind parse_violation_kind(const std::string& s) {
  if (s == "crowded") return ViolationKind::Crowded;
  if (s == "pair-split") return ViolationKind::PairSplit;
  if (s == "on-object") return ViolationKind::OnObject;
  throw TraceError("unknown violation kind \"" + s + "\"");
}

std::uint64_t parse_digest(const std::string& hex) {
  std::size_t used = 0;
  std::uint64_t v = std::stoull(hex, &used, 16);
  if (used != hex.size()) throw TraceError("bad digest \"" + hex + "\"");
  return v;
}

TraceHeader header_from_json(const json& j) {
  TraceHeader h;
  h.scene = scene_from_json(j.at("scene"));
  h.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  const json& s = j.at("scheduler");
  h.scheduler.kind = parse_scheduler(s.at("kind").get<std::string>());
  h.scheduler.seed = s.at("seed").get<std::uint64_t>();
  h.scheduler.activation_probability = s.value("activation_probability", 0.5);
  h.scheduler.depth_bound = s.value("depth_bound", std::size_t{0});
  h.max_events = j.at("max_events").get<std::uint64_t>();
  h.scan = j.value("scan", std::string("ascending")) == "descending" ? ScanOrder::Descending
                                                                      : ScanOrder::Ascending;
  if (j.contains("coating")) {
    std::vector<Point> pts;
    for (const auto& p : j["coating"]) pts.push_back(point_from_json(p, "coating"));
    h.coating = std::move(pts);
  }
  return h;
}

TraceEvent event_from_json(const json& j) {
  TraceEvent e;
  e.index = j.at("index").get<std::size_t>();
  e.kind = parse_event_kind(j.at("kind").get<std::string>());
  if (j.contains("pair")) e.pairs.push_back(j["pair"].get<std::size_t>());
  if (j.contains("pairs")) e.pairs = j["pairs"].get<std::vector<std::size_t>>();
  for (const auto& m : j.at("moves")) {
    e.moves.push_back({RobotId{m.at("robot").get<std::size_t>()},
                       label_from_int(m.at("to").get<int>()),
                       parse_move_kind(m.at("kind").get<std::string>())});
  }
  e.digest = parse_digest(j.at("digest").get<std::string>());
  if (j.contains("violations")) {
    for (const auto& v : j["violations"]) {
      e.violations.push_back({parse_violation_kind(v.at("kind").get<std::string>()),
                              point_from_json(v.at("at"), "violations.at"),
                              v.at("detail").get<std::size_t>()});
    }
  }
  if (j.contains("notes")) e.notes = j["notes"].get<std::vector<std::string>>();
  return e;
}

TraceSummary summary_from_json(const json& j) {
  TraceSummary s;
  s.terminated = j.at("terminated").get<bool>();
  s.aborted = j.value("aborted", false);
  s.events = j.at("events").get<std::size_t>();
  s.violations = j.at("violations").get<std::size_t>();
  s.final_digest = parse_digest(j.at("final_digest").get<std::string>());
  if (j.contains("checks")) s.checks = j["checks"].get<std::map<std::string, bool>>();
  return s;
}

}  // namespace

std::uint64_t position_digest(const Configuration& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::int32_t v) {
    auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  for (const Point& p : c.positions()) {
    mix(p.x);
    mix(p.y);
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

json to_json(const TraceHeader& h) {
  json scheduler = {{"kind", to_string(h.scheduler.kind)}, {"seed", h.scheduler.seed}};
  if (h.scheduler.kind == SchedulerKind::SSync) {
    scheduler["activation_probability"] = h.scheduler.activation_probability;
  }
  if (h.scheduler.kind == SchedulerKind::AsyncExhaustive) {
    scheduler["depth_bound"] = h.scheduler.depth_bound;
  }
  json j = {{"type", "header"},
            {"scene", scene_to_json(h.scene)},
            {"algorithm", to_string(h.algorithm)},
            {"scheduler", scheduler},
            {"max_events", h.max_events},
            {"scan", h.scan == ScanOrder::Ascending ? "ascending" : "descending"}};
  if (h.coating) {
    json pts = json::array();
    for (const Point& p : *h.coating) pts.push_back(point_to_json(p));
    j["coating"] = pts;
  }
  return j;
}

json to_json(const TraceEvent& e) {
  json j = {{"type", "event"}, {"index", e.index}, {"kind", to_string(e.kind)}};
  if (e.kind == EventKind::SyncRound) {
    j["pairs"] = e.pairs;
  } else {
    j["pair"] = e.pairs.empty() ? 0 : e.pairs.front();
  }
  json moves = json::array();
  for (const MoveIntent& m : e.moves) {
    moves.push_back({{"robot", m.mover.index}, {"to", to_int(m.target)}, {"kind", to_string(m.kind)}});
  }
  j["moves"] = moves;
  j["digest"] = digest_hex(e.digest);
  if (!e.violations.empty()) {
    json vs = json::array();
    for (const Violation& v : e.violations) {
      vs.push_back({{"kind", to_string(v.kind)}, {"at", point_to_json(v.where)}, {"detail", v.detail}});
    }
    j["violations"] = vs;
  }
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

json to_json(const TraceSummary& s) {
  json j = {{"type", "summary"},
            {"terminated", s.terminated},
            {"aborted", s.aborted},
            {"events", s.events},
            {"violations", s.violations},
            {"final_digest", digest_hex(s.final_digest)}};
  if (!s.checks.empty()) j["checks"] = s.checks;
  return j;
}

void write_jsonl(std::ostream& out, const Trace& trace) {
  out << to_json(trace.header).dump() << '\n';
  for (const TraceEvent& e : trace.events) out << to_json(e).dump() << '\n';
  out << to_json(trace.summary).dump() << '\n';
}

std::string to_jsonl(const Trace& trace) {
  std::ostringstream out;
  write_jsonl(out, trace);
  return out.str();
}

Trace read_jsonl(std::istream& in) {
  Trace trace;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool have_summary = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (have_header) throw TraceError("second header");
        trace.header = header_from_json(j);
        have_header = true;
      } else if (type == "event") {
        if (!have_header) throw TraceError("event before header");
        trace.events.push_back(event_from_json(j));
      } else if (type == "summary") {
        trace.summary = summary_from_json(j);
        have_summary = true;
      } else {
        throw TraceError("unknown line type \"" + type + "\"");
      }
    } catch (const TraceError& e) {
      throw TraceError("trace line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception& e) {
      throw TraceError("trace line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw TraceError("trace has no header line");
  if (!have_summary) trace.summary.events = trace.events.size();
  return trace;
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceError(path + ": cannot open trace file");
  return read_jsonl(in);
}

std::vector<Configuration> replay(const Trace& trace) {
  std::vector<Configuration> frames;
  frames.reserve(trace.events.size() + 1);
  frames.push_back(to_configuration(trace.header.scene));
  for (const TraceEvent& e : trace.events) {
    MoveOutcome out = apply_moves(frames.back(), e.moves);
    const std::uint64_t d = position_digest(out.config);
    if (d != e.digest) {
      throw TraceError("replay diverged at event " + std::to_string(e.index) + ": digest " +
                       digest_hex(d) + " != recorded " + digest_hex(e.digest));
    }
    frames.push_back(std::move(out.config));
  }
  return frames;
}

}  // namespace pairbot
