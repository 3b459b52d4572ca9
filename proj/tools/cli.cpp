#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pairbot/analysis.hpp"
#include "pairbot/engine.hpp"
#include "pairbot/explorer.hpp"
#include "pairbot/render.hpp"
#include "pairbot/scene.hpp"
#include "pairbot/trace.hpp"

namespace pairbot::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kCheckNames = {"line-formed", "safety", "coating", "progress"};

// Raised for bad flags or inputs; maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!kCheckNames.contains(item)) {
      throw InputError("unknown check \"" + item +
                       "\" (expected line-formed, safety, coating, progress)");
    }
    out.push_back(item);
  }
  return out;
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

AnalysisOptions analysis_options(int margin, const std::string& disjointness,
                                 const std::string& sources) {
  AnalysisOptions opts;
  opts.margin = margin;
  if (disjointness == "internal") {
    opts.disjointness = Disjointness::Internal;
  } else if (disjointness == "edge") {
    opts.disjointness = Disjointness::Edge;
  } else {
    throw InputError("--disjointness must be internal or edge");
  }
  if (sources == "pooled") {
    opts.sources = SourceMode::Pooled;
  } else if (sources == "per-robot") {
    opts.sources = SourceMode::PerRobot;
  } else {
    throw InputError("--sources must be pooled or per-robot");
  }
  return opts;
}

ScanOrder parse_scan(const std::string& s) {
  if (s == "ascending") return ScanOrder::Ascending;
  if (s == "descending") return ScanOrder::Descending;
  throw InputError("--scan must be ascending or descending");
}

Algorithm pick_algorithm(const std::string& flag, const Scene& scene) {
  if (!flag.empty()) return parse_algorithm(flag);
  if (scene.algorithm) return parse_algorithm(*scene.algorithm);
  return Algorithm::Marching;
}

// Sink for command output: the --out file when given, otherwise `fallback`.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError(path + ": cannot open for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct CheckOutcome {
  std::map<std::string, bool> passed;
  json details = json::object();
  bool budget = false;
};

CheckOutcome apply_checks(const Trace& trace, const std::vector<std::string>& checks) {
  CheckOutcome outcome;
  const std::vector<Configuration> frames = replay(trace);
  std::size_t violations = 0;
  for (const TraceEvent& e : trace.events) violations += e.violations.size();
  for (const std::string& name : checks) {
    if (name == "safety") {
      outcome.passed[name] = violations == 0;
      outcome.details[name] = {{"violations", violations}};
    } else if (name == "line-formed" || name == "progress") {
      const MarchingProgress p = check_marching_progress(trace);
      if (name == "line-formed") {
        outcome.passed[name] = p.line_formed_always;
        outcome.details[name] = {{"line_formed_always", p.line_formed_always}};
      } else {
        outcome.passed[name] = !p.head_advances.empty();
        outcome.details[name] = {{"head_advances", p.head_advances}};
      }
    } else if (name == "coating") {
      const std::vector<Point> coating =
          trace.header.coating ? *trace.header.coating : analyze_scene(trace.header.scene).coating;
      EngineOptions eo;
      eo.scan = trace.header.scan;
      const CoatingVerdict v = check_coating_solved(frames.back(), coating, eo);
      outcome.passed[name] = v.solved;
      outcome.details[name] = {{"solved", v.solved},
                               {"missing", points_json(v.missing)},
                               {"nonShortPairs", v.non_short_pairs},
                               {"enabled", v.enabled}};
      if (!v.solved && !trace.summary.terminated) outcome.budget = true;
    }
  }
  return outcome;
}

int exit_code_for(const CheckOutcome& outcome, std::size_t violations) {
  if (violations > 0) return kExitViolation;
  bool failed_hard = false;
  for (const auto& [name, ok] : outcome.passed) {
    if (ok) continue;
    if (name == "coating" && outcome.budget) continue;
    failed_hard = true;
  }
  if (failed_hard) return kExitViolation;
  for (const auto& [name, ok] : outcome.passed) {
    if (!ok) return kExitBudget;
  }
  return kExitClean;
}

json explore_report_json(const ExploreReport& r, const std::string& predicate) {
  json cex = json::array();
  for (const Counterexample& c : r.counterexamples) {
    json events = json::array();
    for (const AsyncEvent& e : c.events) {
      events.push_back({{"kind", to_string(e.kind)}, {"pair", e.pair}});
    }
    json positions = json::array();
    for (const Point& p : c.config.positions()) positions.push_back(point_to_json(p));
    cex.push_back({{"reason", c.reason}, {"events", events}, {"positions", positions}});
  }
  return {{"states", r.states},
          {"transitions", r.transitions},
          {"depth_reached", r.depth_reached},
          {"predicate", predicate},
          {"predicate_violations", r.predicate_violations},
          {"safety_violations", r.safety_violations},
          {"budget_exceeded", r.budget_exceeded},
          {"counterexamples", cex}};
}

StatePredicate predicate_named(const std::string& name) {
  if (name == "line-formed") return [](const Configuration& c) { return is_line_formed(c); };
  if (name == "safety") {
    return [](const Configuration& c) { return check_safety(c).empty(); };
  }
  if (name == "true") return {};
  if (name == "false") return [](const Configuration&) { return false; };
  throw InputError("unknown predicate \"" + name + "\" (expected line-formed, safety, true, false)");
}

int do_explore(const Scene& scene, Algorithm algo, std::size_t depth, const std::string& predicate,
               std::size_t max_states, unsigned jobs, std::size_t max_pairs, ScanOrder scan,
               std::ostream& out) {
  if (scene.pairs.size() > max_pairs) {
    throw InputError("exhaustive exploration is capped at " + std::to_string(max_pairs) +
                     " pairs (scene has " + std::to_string(scene.pairs.size()) +
                     "); raise --max-pairs to override");
  }
  ExploreOptions opts;
  opts.depth_bound = depth;
  opts.max_states = max_states;
  opts.jobs = jobs;
  opts.predicate = predicate_named(predicate);
  opts.predicate_name = predicate;
  opts.engine.scan = scan;
  const ExploreReport report = explore(to_configuration(scene), algo, opts);
  out << explore_report_json(report, predicate).dump(2) << '\n';
  if (!report.clean()) return kExitViolation;
  if (report.budget_exceeded) return kExitBudget;
  return kExitClean;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairbot simulator, model checker and coating analysis"};
  app.require_subcommand(1);

  // run
  std::string scene_path;
  std::string algorithm;
  std::string scheduler = "fsync";
  std::uint64_t seed = 0;
  std::uint64_t max_events = 1000;
  std::string checks = "safety";
  std::string out_path;
  std::size_t depth = 0;
  std::size_t max_pairs = 3;
  std::size_t max_states = 5'000'000;
  unsigned jobs = 1;
  int margin = 3;
  std::string scan = "ascending";
  double activation = 0.5;

  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on a scene and emit a JSON Lines trace");
  run_cmd->add_option("scene,--scene", scene_path, "Scene file")->required();
  run_cmd->add_option("-a,--algorithm", algorithm, "marching or coating (default: scene's, else marching)");
  run_cmd->add_option("-s,--scheduler", scheduler, "fsync, ssync, async-random, async-exhaustive");
  run_cmd->add_option("--seed", seed, "Scheduler seed");
  run_cmd->add_option("-n,--max-events", max_events, "Event budget (rounds for fsync/ssync)")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--checks", checks, "Comma list of line-formed,safety,coating,progress");
  run_cmd->add_option("-o,--out", out_path, "Write the trace here instead of stdout");
  run_cmd->add_option("--depth", depth, "Depth bound for async-exhaustive");
  run_cmd->add_option("--max-pairs", max_pairs, "Pair cap for async-exhaustive");
  run_cmd->add_option("--max-states", max_states, "State budget for async-exhaustive");
  run_cmd->add_option("--jobs", jobs, "Explorer worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--margin", margin, "Analysis window margin")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--scan", scan, "Heading tie-break scan: ascending or descending");
  run_cmd->add_option("--activation", activation, "SSYNC per-pair activation probability")
      ->check(CLI::Range(0.0, 1.0));

  // explore
  std::string predicate = "line-formed";
  auto* explore_cmd = app.add_subcommand("explore", "Exhaustively explore ASYNC interleavings");
  explore_cmd->add_option("scene,--scene", scene_path, "Scene file")->required();
  explore_cmd->add_option("-a,--algorithm", algorithm, "marching or coating");
  explore_cmd->add_option("--depth", depth, "Depth bound in events")->required();
  explore_cmd->add_option("--predicate", predicate, "line-formed, safety, true, false");
  explore_cmd->add_option("--max-states", max_states, "State budget");
  explore_cmd->add_option("--max-pairs", max_pairs, "Pair cap");
  explore_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--scan", scan, "ascending or descending");
  explore_cmd->add_option("-o,--out", out_path, "Write the report here");

  // analyze
  std::string disjointness = "internal";
  std::string sources = "pooled";
  auto* analyze_cmd = app.add_subcommand("analyze", "Surface, non-coating and coating sets");
  analyze_cmd->add_option("scene,--scene", scene_path, "Scene file")->required();
  analyze_cmd->add_option("--margin", margin, "Analysis window margin")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--disjointness", disjointness, "internal or edge");
  analyze_cmd->add_option("--sources", sources, "pooled or per-robot");
  analyze_cmd->add_option("-o,--out", out_path, "Write the JSON here");

  // check
  std::string trace_path;
  auto* check_cmd = app.add_subcommand("check", "Apply checkers to a recorded trace");
  check_cmd->add_option("trace,--trace", trace_path, "Trace file")->required();
  check_cmd->add_option("--checks", checks, "Comma list of line-formed,safety,coating,progress");

  // render
  std::string frame = "last";
  std::string format = "ascii";
  bool no_color = false;
  auto* render_cmd = app.add_subcommand("render", "Draw one frame of a trace as ASCII or SVG");
  render_cmd->add_option("trace,--trace", trace_path, "Trace file")->required();
  render_cmd->add_option("--frame", frame, "Frame index or \"last\"");
  render_cmd->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_flag("--no-color", no_color, "Disable ANSI colour");
  render_cmd->add_option("-o,--out", out_path, "Write the picture here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*run_cmd) {
      const Scene scene = load_scene(scene_path);
      const Algorithm algo = pick_algorithm(algorithm, scene);
      const std::vector<std::string> check_list = split_checks(checks);
      const SchedulerKind kind = parse_scheduler(scheduler);
      if (kind == SchedulerKind::AsyncExhaustive) {
        if (depth == 0) throw InputError("async-exhaustive needs --depth");
        const bool wants_line = std::find(check_list.begin(), check_list.end(), "line-formed") !=
                                check_list.end();
        Output sink(out_path, out);
        return do_explore(scene, algo, depth, wants_line ? "line-formed" : "safety", max_states,
                          jobs, max_pairs, parse_scan(scan), sink.get());
      }
      EngineOptions eo;
      eo.scan = parse_scan(scan);
      SchedulerSpec spec{kind, seed, activation, 0};
      Trace trace = run(scene, algo, spec, max_events, eo);
      if (algo == Algorithm::Coating && !scene.object.empty()) {
        AnalysisOptions ao;
        ao.margin = margin;
        trace.header.coating = analyze_scene(scene, ao).coating;
      }
      const CheckOutcome outcome = apply_checks(trace, check_list);
      trace.summary.checks = outcome.passed;
      Output sink(out_path, out);
      write_jsonl(sink.get(), trace);
      if (!outcome.details.empty()) err << outcome.details.dump() << '\n';
      const int code = exit_code_for(outcome, trace.summary.violations);
      // Coating is expected to terminate; running out of events is a budget failure.
      if (code == kExitClean && algo == Algorithm::Coating && !trace.summary.terminated) {
        return kExitBudget;
      }
      return code;
    }
    if (*explore_cmd) {
      const Scene scene = load_scene(scene_path);
      Output sink(out_path, out);
      return do_explore(scene, pick_algorithm(algorithm, scene), depth, predicate, max_states,
                        jobs, max_pairs, parse_scan(scan), sink.get());
    }
    if (*analyze_cmd) {
      const Scene scene = load_scene(scene_path);
      if (scene.object.empty()) throw InputError("scene has no object to analyze");
      if (scene.pairs.empty()) throw InputError("scene has no robots");
      const CoatingAnalysis a =
          analyze_scene(scene, analysis_options(margin, disjointness, sources));
      const json j = {{"surface", points_json(a.surface)},
                      {"nonCoating", points_json(a.non_coating)},
                      {"coating", points_json(a.coating)}};
      Output sink(out_path, out);
      sink.get() << j.dump() << '\n';
      return kExitClean;
    }
    if (*check_cmd) {
      const Trace trace = load_trace(trace_path);
      const CheckOutcome outcome = apply_checks(trace, split_checks(checks));
      std::size_t violations = 0;
      for (const TraceEvent& e : trace.events) violations += e.violations.size();
      out << json{{"checks", outcome.passed}, {"details", outcome.details}}.dump() << '\n';
      return exit_code_for(outcome, violations);
    }
    if (*render_cmd) {
      const Trace trace = load_trace(trace_path);
      const std::vector<Configuration> frames = replay(trace);
      std::size_t index = frames.size() - 1;
      if (frame != "last") {
        std::size_t used = 0;
        long long requested = -1;
        try {
          requested = std::stoll(frame, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != frame.size() || requested < 0 ||
            static_cast<std::size_t>(requested) >= frames.size()) {
          throw InputError("frame " + frame + " out of range; valid frames are 0.." +
                           std::to_string(frames.size() - 1) + " or \"last\"");
        }
        index = static_cast<std::size_t>(requested);
      }
      RenderOptions ro;
      ro.coating = trace.header.coating;
      ro.color = format == "ascii" && !no_color && std::getenv("PAIRBOT_NO_COLOR") == nullptr;
      Output sink(out_path, out);
      sink.get() << (format == "svg" ? render_svg(frames[index], ro)
                                     : render_ascii(frames[index], ro));
      return kExitClean;
    }
  } catch (const SceneError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const TraceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace pairbot::cli
