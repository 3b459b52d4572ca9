#include "pairbot/algorithms.hpp"

#include <array>
#include <stdexcept>

namespace pairbot {

std::string to_string(Algorithm a) {
  return a == Algorithm::Marching ? "marching" : "coating";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "marching") return Algorithm::Marching;
  if (name == "coating") return Algorithm::Coating;
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) +
                              "\" (expected marching or coating)");
}

namespace {

// Marching. Every action is "move to l1".

Label to_l1(const RuleContext&) { return Label::l1; }

bool march_short(const RuleContext& c) {
  return c.view.buddy == Label::here && c.view.occupy(Label::l1) < 2;
}

bool march_tail(const RuleContext& c) {
  return c.view.buddy == Label::l1 && c.view.occupy(Label::l1) == 1 &&
         c.view.occupy(Label::l4) == 0;
}

bool march_shared(const RuleContext& c) {
  return c.view.buddy == Label::l1 && c.view.occupy(Label::l1) == 1 &&
         c.view.occupy(Label::here) == 2;
}

constexpr std::array<GuardedRule, 3> kMarching = {{
    {1, march_short, to_l1, true},
    {2, march_tail, to_l1, false},
    {3, march_shared, to_l1, false},
}};

// Coating. Guards are false when no heading exists.

Label to_heading(const RuleContext& c) { return *c.heading; }

bool heading_occupancy_is(const RuleContext& c, int n) {
  return c.heading && c.view.occupy(*c.heading) == n;
}

bool coat_head_short(const RuleContext& c) {
  return c.view.buddy == Label::here && c.view.is_head && heading_occupancy_is(c, 0);
}

bool coat_follower_short(const RuleContext& c) {
  return c.view.buddy == Label::here && !c.view.is_head && heading_occupancy_is(c, 1);
}

bool coat_shared(const RuleContext& c) {
  return c.view.buddy != Label::here && heading_occupancy_is(c, 1) &&
         c.view.occupy(Label::here) >= 2 && c.view.buddy == *c.heading;
}

bool coat_tail(const RuleContext& c) {
  return c.view.buddy != Label::here && heading_occupancy_is(c, 1) && c.view.objects.empty() &&
         c.view.occupy(Label::l4) == 0 && c.view.buddy == *c.heading;
}

constexpr std::array<GuardedRule, 4> kCoating = {{
    {1, coat_head_short, to_heading, true},
    {2, coat_follower_short, to_heading, true},
    {3, coat_shared, to_heading, false},
    {4, coat_tail, to_heading, false},
}};

}  // namespace

std::span<const GuardedRule> marching_rules() { return kMarching; }
std::span<const GuardedRule> coating_rules() { return kCoating; }

Decision evaluate(std::span<const GuardedRule> rules, const RuleContext& ctx) {
  for (const GuardedRule& rule : rules) {
    if (rule.guard(ctx)) return {rule.action(ctx), rule.line};
  }
  return {};
}

unsigned enabled_lines(std::span<const GuardedRule> rules, const RuleContext& ctx) {
  unsigned mask = 0;
  for (const GuardedRule& rule : rules) {
    if (rule.guard(ctx)) mask |= 1u << rule.line;
  }
  return mask;
}

Decision marching_compute(const Snapshot& s) { return evaluate(kMarching, {s, std::nullopt}); }

std::optional<Label> coating_dir(const Snapshot& s, ScanOrder order) {
  const LabelSet& objects = s.objects;
  if (objects.empty()) return Label::l1;

  auto scan = [&](auto&& qualifies) -> std::optional<Label> {
    for (int k = 0; k < 6; ++k) {
      const Label li = order == ScanOrder::Ascending ? kDirections[static_cast<std::size_t>(k)]
                                                     : kDirections[static_cast<std::size_t>(5 - k)];
      if (objects.contains(li) && qualifies(li)) return next(li, 1);
    }
    return std::nullopt;
  };

  // An object edge with three free labels clockwise of it.
  if (auto d = scan([&](Label li) {
        return !objects.contains(next(li, 1)) && !objects.contains(next(li, 2)) &&
               !objects.contains(next(li, 3));
      })) {
    return d;
  }
  // A one-wide gap between two object labels, entered only behind a robot.
  return scan([&](Label li) {
    return !objects.contains(next(li, 1)) && s.occupy(next(li, 2)) >= 1 &&
           objects.contains(next(li, 3));
  });
}

Decision coating_compute(const Snapshot& s, ScanOrder order) {
  return evaluate(kCoating, {s, coating_dir(s, order)});
}

Decision compute(Algorithm a, const Snapshot& s, ScanOrder order) {
  return a == Algorithm::Marching ? marching_compute(s) : coating_compute(s, order);
}

}  // namespace pairbot
