#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pairbot/geometry.hpp"
#include "pairbot/model.hpp"

namespace pairbot {

enum class Algorithm : std::uint8_t { Marching, Coating };

std::string to_string(Algorithm a);
// Accepts "marching" or "coating"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);

// Order in which candidate object labels are tried by the coating heading
// rules when more than one qualifies.
enum class ScanOrder : std::uint8_t { Ascending, Descending };

// Result of one Compute phase. `line` is the rule that fired (0 = none).
struct Decision {
  std::optional<Label> target;
  int line = 0;

  bool moves() const { return target.has_value(); }
  friend bool operator==(const Decision&, const Decision&) = default;
};

// Inputs every guard sees. `heading` is the coating direction, evaluated once
// per activation; marching leaves it empty.
struct RuleContext {
  const Snapshot& view;
  std::optional<Label> heading;
};

// <guard> => move to <action>. Rules are tried in ascending line order and
// the first enabled one fires.
struct GuardedRule {
  int line;
  bool (*guard)(const RuleContext&);
  Label (*action)(const RuleContext&);
  bool exclusive;
};

std::span<const GuardedRule> marching_rules();
std::span<const GuardedRule> coating_rules();

Decision evaluate(std::span<const GuardedRule> rules, const RuleContext& ctx);

// Bitmask of every enabled rule (bit i set for line i), for diagnostics.
unsigned enabled_lines(std::span<const GuardedRule> rules, const RuleContext& ctx);

Decision marching_compute(const Snapshot& s);

// Heading chosen from the adjacent object labels; empty when no heading rule
// applies (treated as stay).
std::optional<Label> coating_dir(const Snapshot& s, ScanOrder order = ScanOrder::Ascending);

Decision coating_compute(const Snapshot& s, ScanOrder order = ScanOrder::Ascending);

Decision compute(Algorithm a, const Snapshot& s, ScanOrder order = ScanOrder::Ascending);

}  // namespace pairbot
