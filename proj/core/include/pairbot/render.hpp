#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairbot/model.hpp"

namespace pairbot {

struct RenderOptions {
  bool color = false;
  // Coating set to outline, when known.
  std::optional<std::vector<Point>> coating;
  int margin = 1;
};

// Text picture of the grid, one text row per grid row, with link rows in
// between. Legend: '.' free, '#' object, 'o' one robot, '8' two robots,
// '*' more than two, '+' unoccupied coating point; '-', '/', '\' join the two
// points of a long pair.
std::string render_ascii(const Configuration& c, const RenderOptions& opts = {});

// Standalone SVG document of the same picture.
std::string render_svg(const Configuration& c, const RenderOptions& opts = {});

}  // namespace pairbot
