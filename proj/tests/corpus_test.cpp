#include <gtest/gtest.h>

#include <functional>
#include <regex>

#include "hsurf/corpus.hpp"
#include "hsurf/regions.hpp"
#include "hsurf/svg.hpp"
#include "support.hpp"

using namespace hsurf;

namespace {

// Separating iff the complementary regions of both balls, glued across the
// disk faces they share, fall into more than one piece.
bool separating(const SurfaceComplex& s) {
  std::map<std::pair<int, int>, int> id;
  std::vector<int> parent;
  auto node = [&](int b, int r) {
    auto [it, fresh] = id.try_emplace({b, r}, static_cast<int>(parent.size()));
    if (fresh) parent.push_back(it->second);
    return it->second;
  };
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  std::map<std::pair<int, int>, std::vector<int>> by_face;
  for (const auto& br : complement_regions(s))
    for (const auto& r : br.regions) {
      int x = node(br.ball, r.id);
      for (const auto& [slot, f] : r.disk_faces) by_face[{f.disk, f.face}].push_back(x);
    }
  for (auto& [k, v] : by_face)
    for (std::size_t i = 1; i < v.size(); ++i) parent[static_cast<std::size_t>(find(v[i]))] = find(v[0]);
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) roots.insert(find(i));
  return roots.size() > 1;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Qiu, ValidConnectedSeparating) {
  for (int n = 1; n <= 6; ++n) {
    auto s = gen_qiu(n);
    EXPECT_TRUE(validate(s).ok()) << n;
    EXPECT_EQ(component_count(s), 1) << n;
    EXPECT_TRUE(orientable(s)) << n;
    EXPECT_TRUE(separating(s)) << n;
    EXPECT_EQ(s.num_arcs(), 4 * n);
    EXPECT_EQ(euler_characteristic(s), n == 1 ? -1 : -2);
    EXPECT_GE(disk_intersection_count(s), 1);
  }
}

TEST(Qiu, VariantsDifferOnlyInBallZeroD1Slots) {
  for (int n = 1; n <= 4; ++n) {
    auto base = qiu_diagram(n);
    for (auto var : {QiuVariant::Fig12a, QiuVariant::Fig12b}) {
      auto d = qiu_diagram(n, var);
      EXPECT_EQ(d.arcs, base.arcs);
      EXPECT_EQ(d.twist[1], base.twist[1]);
      EXPECT_EQ(d.twist[0][2], base.twist[0][2]);
      auto s = build_diagram(d);
      EXPECT_TRUE(validate(s).ok());
      EXPECT_EQ(component_count(s), 1);
    }
  }
}

TEST(Qiu, RejectsBadArguments) {
  EXPECT_THROW(gen_qiu(0), DiagramError);
  EXPECT_THROW(parse_variant("fig13"), DiagramError);
  EXPECT_EQ(parse_variant(variant_name(QiuVariant::Fig12b)), QiuVariant::Fig12b);
}

TEST(Jaco, ValidNonSeparatingAndGrowing) {
  for (int n = 1; n <= 5; ++n) {
    auto s = gen_jaco(n);
    EXPECT_TRUE(validate(s).ok()) << n;
    EXPECT_EQ(component_count(s), 1) << n;
    EXPECT_TRUE(orientable(s)) << n;
    EXPECT_FALSE(separating(s)) << n;
    EXPECT_EQ(euler_characteristic(s), 1 - 2 * n);
    EXPECT_EQ(s.num_arcs(), 6 * n + 1);
  }
  EXPECT_THROW(gen_jaco(0), DiagramError);
}

TEST(Jaco, MirrorSymmetricAcrossD0) {
  for (int n = 1; n <= 4; ++n) {
    auto d = jaco_diagram(n);
    EXPECT_EQ(d.twist[0], d.twist[1]);
    EXPECT_EQ(d.arcs[1], d.arcs[2]);
    auto s = build_diagram(d);
    // Swapping the balls (D1 <-> D2, D0 sides exchanged) maps piece sizes onto each other.
    std::multiset<int> sizes[2];
    for (const auto& p : s.pieces) sizes[p.ball].insert(p.n());
    EXPECT_EQ(sizes[0], sizes[1]);
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(serialize_surface(gen_qiu(3, QiuVariant::Fig12a)), serialize_surface(gen_qiu(3, QiuVariant::Fig12a)));
  EXPECT_EQ(serialize_surface(gen_jaco(3)), serialize_surface(gen_jaco(3)));
}

TEST(Generators, FixturesMatchGenerators) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(serialize_surface(hsurf::testing::fixture("jaco_n" + std::to_string(n) + ".hs")),
              serialize_surface(gen_jaco(n)));
    for (auto var : {QiuVariant::Original, QiuVariant::Fig12a, QiuVariant::Fig12b})
      EXPECT_EQ(serialize_surface(hsurf::testing::fixture("qiu_" + variant_name(var) + "_n" + std::to_string(n) + ".hs")),
                serialize_surface(gen_qiu(n, var)));
  }
}

TEST(Diagram, RejectsMalformedInput) {
  Diagram d;
  d.arcs = {{-1}, {-1}};
  d.twist = {{0, 0, 0}, {0, 0, 0}};
  EXPECT_THROW(build_diagram(d), DiagramError);
  d.arcs = {{0}, {-1}, {-1}};
  EXPECT_THROW(build_diagram(d), DiagramError);
}

TEST(Svg, EmptySurfaceDrawsThreeCirclesPerBall) {
  SurfaceComplex s;
  s.handlebody = canonical_handlebody(2);
  auto svg = render_diagram(s);
  EXPECT_EQ(count(svg, "<circle"), 6);
  for (auto label : {"D1A", "D1B", "D0A", "D2A", "D2B", "D0B"}) EXPECT_NE(svg.find(std::string(">") + label + "<"), std::string::npos);
  EXPECT_EQ(count(svg, "<g id=\"ball"), 2);
}

TEST(Svg, DeterministicAndComplete) {
  auto s = gen_qiu(2);
  auto a = render_diagram(s), b = render_diagram(s);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  // one chord per disk arc on each of its two slots
  EXPECT_EQ(count(a, "<line"), 2 * s.num_arcs());
  EXPECT_EQ(count(a, "class=\"piece\""), s.num_pieces());
}

TEST(Svg, InternalArcsAreDashed) {
  auto svg = render_diagram(mutated_collar());
  EXPECT_EQ(count(svg, "stroke-dasharray"), 2);
}
