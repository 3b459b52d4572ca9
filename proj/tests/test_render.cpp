#include <gtest/gtest.h>

#include <algorithm>

#include "pairbot/analysis.hpp"
#include "pairbot/engine.hpp"
#include "pairbot/render.hpp"

namespace pairbot {
namespace {

TEST(Ascii, Golden) {
  // Three robots on (0,0) and one long pair leaving it in each link direction.
  const Configuration c({{0, 0}, {1, 0}, {0, 0}, {0, 1}, {1, -1}, {0, 0}}, PointSet{{2, 0}}, 0);
  RenderOptions opts;
  opts.margin = 0;
  EXPECT_EQ(render_ascii(c, opts),
            "    o   .   .\n"
            "   /\n"
            "  * - o   #\n"
            "   \\\n"
            ".   o   .\n");
}

TEST(Ascii, FrameZeroShowsTheScene) {
  Scene s;
  s.pairs = {{{0, 0}, {0, 0}, true}, {{-1, 0}, {-1, 0}, false}, {{-2, 0}, {-3, 0}, false}};
  s.object = {{3, 0}, {3, 1}};
  const std::string text = render_ascii(to_configuration(s));
  EXPECT_EQ(std::count(text.begin(), text.end(), '8'), 2);
  EXPECT_EQ(std::count(text.begin(), text.end(), 'o'), 2);
  EXPECT_EQ(std::count(text.begin(), text.end(), '#'), 2);
  EXPECT_EQ(std::count(text.begin(), text.end(), '-'), 1);
  EXPECT_EQ(text.find('\x1b'), std::string::npos);
}

TEST(Ascii, SolvedCoatingLeavesNoOpenCoatingCells) {
  Scene s;
  s.object = {{4, 0}};
  for (int i = 0; i < 6; ++i) s.pairs.push_back({{-i, 0}, {-i, 0}, i == 0});
  const auto coating = analyze_scene(s).coating;
  const Trace t = run(s, Algorithm::Coating, {SchedulerKind::FSync, 0}, 500);
  const Configuration last = replay(t).back();
  ASSERT_TRUE(check_coating_solved(last, coating).solved);
  RenderOptions opts;
  opts.coating = coating;
  const std::string text = render_ascii(last, opts);
  EXPECT_EQ(text.find('+'), std::string::npos);
  EXPECT_NE(render_ascii(to_configuration(s), opts).find('+'), std::string::npos);
}

TEST(Ascii, ColorOnlyWhenAsked) {
  const Configuration c({{0, 0}, {0, 0}}, PointSet{}, 0);
  RenderOptions opts;
  opts.color = true;
  EXPECT_NE(render_ascii(c, opts).find('\x1b'), std::string::npos);
}

TEST(Svg, DeterministicDocument) {
  const Configuration c({{0, 0}, {1, 0}, {-1, 0}, {-1, 0}}, PointSet{{3, 0}}, 0);
  const std::string a = render_svg(c);
  EXPECT_EQ(a, render_svg(c));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_NE(a.find("<line"), std::string::npos);
}

}  // namespace
}  // namespace pairbot
