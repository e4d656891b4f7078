#include <gtest/gtest.h>

#include <set>

#include "hsurf/corpus.hpp"
#include "hsurf/polygons.hpp"
#include "hsurf/solver.hpp"
#include "support.hpp"

using namespace hsurf;

namespace {

int bigons_in_ball(const PolygonCensus& c, int ball) {
  int n = 0;
  for (std::size_t k = 0; k < c.classes.class_size.size(); ++k)
    if (c.classes.class_bigon[k] && c.classes.types[static_cast<std::size_t>(c.classes.by_class[k][0])].ball == ball) ++n;
  return n;
}

std::vector<SurfaceComplex> standard_surfaces() {
  std::vector<SurfaceComplex> out;
  for (auto& [name, s] : hsurf::testing::corpus()) {
    auto v = decide(s);
    if (v.census) out.push_back(v.reduction.surface);
  }
  return out;
}

}  // namespace

TEST(Polygons, ShapeInvariants) {
  for (const auto& s : standard_surfaces()) {
    auto c = polygon_census(s);
    auto ess = essential_arcs(s);
    for (const auto& bp : c.balls)
      for (const auto& p : bp.polygons) {
        EXPECT_EQ(p.corners.size(), 2 * p.d_edges.size());
        EXPECT_EQ(p.s_edges.size(), p.d_edges.size());
        EXPECT_EQ(p.bigon, p.size() == 2);
        // Never two corners on one side of one arc.
        std::set<std::pair<int, int>> sides;
        std::map<int, int> hits;
        for (int k : p.corners) {
          const auto& as = bp.regions.arc_sides[static_cast<std::size_t>(k)];
          EXPECT_TRUE(sides.insert({as.arc, as.slot}).second);
          ++hits[as.arc];
        }
        for (const auto& se : p.s_edges)
          for (const auto& x : se.crossings) ++hits[x.arc];
        for (auto [arc, n] : hits) {
          if (ess[static_cast<std::size_t>(arc)]) EXPECT_LE(n, 2);
          else EXPECT_NE(n, 1);
        }
        for (const auto& d : p.d_edges) EXPECT_GE(d.slot, 0);
      }
  }
}

TEST(Polygons, ClassesPartitionTypes) {
  for (const auto& s : standard_surfaces()) {
    auto c = polygon_census(s);
    std::size_t total = 0;
    for (std::size_t k = 0; k < c.classes.by_class.size(); ++k) {
      total += c.classes.by_class[k].size();
      for (int t : c.classes.by_class[k]) {
        EXPECT_EQ(c.classes.types[static_cast<std::size_t>(t)].cls, static_cast<int>(k));
        EXPECT_EQ(type_polygon(c, t).size(), c.classes.class_size[k]);
      }
    }
    EXPECT_EQ(total, c.classes.types.size());
  }
}

TEST(Polygons, QiuHasOneBigonClassInBallZero) {
  for (int n = 1; n <= 4; ++n) {
    auto v = decide(gen_qiu(n));
    ASSERT_TRUE(v.census);
    EXPECT_EQ(bigons_in_ball(*v.census, 0), 1) << "n=" << n;
    EXPECT_EQ(bigons_in_ball(*v.census, 1), 0) << "n=" << n;
  }
}

TEST(Polygons, JacoHasNoBigons) {
  for (int n = 1; n <= 4; ++n) {
    auto c = polygon_census(gen_jaco(n));
    EXPECT_EQ(c.classes.bigon_classes(), 0) << "n=" << n;
  }
}

TEST(Polygons, HexagonMeetingOneArcOnBothSidesIsKept) {
  auto v = decide(hsurf::testing::fixture("hexagon_across_d0.hs"));
  ASSERT_EQ(v.kind, VerdictKind::Compressible);
  bool hexagon = false;
  for (int t : v.solve->certificate->assembly.instances) hexagon |= type_polygon(*v.census, t).size() == 6;
  EXPECT_TRUE(hexagon);
}

TEST(Polygons, SaddleBound) {
  // Half the total D-edge count of critical pieces with at least three edges.
  for (const auto& s : standard_surfaces()) {
    int twice = 0;
    for (const auto& p : s.pieces)
      if (p.kind != PieceKind::Trivial && p.n() >= 3) twice += p.n();
    EXPECT_EQ(saddle_bound(s), twice / 2);
  }
  EXPECT_EQ(saddle_bound(gen_qiu(1)), 2);
}

TEST(Polygons, CensusJsonAndTextAgree) {
  auto s = gen_qiu(2);
  auto c = polygon_census(s);
  auto j = polygon_census_json(s, c.balls, c.classes);
  auto text = polygon_census_text(s, c.balls, c.classes);
  EXPECT_EQ(j["classes"].size(), c.classes.by_class.size());
  EXPECT_NE(text.find("bigon_classes " + std::to_string(c.classes.bigon_classes())), std::string::npos);
}
