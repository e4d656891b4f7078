#include <gtest/gtest.h>

#include "hsurf/document.hpp"
#include "hsurf/handlebody.hpp"
#include "hsurf/regions.hpp"
#include "hsurf/retract_graph.hpp"

using namespace hsurf;

TEST(Handlebody, CountsPerGenus) {
  for (int g = 2; g <= 7; ++g) {
    auto hb = canonical_handlebody(g);
    EXPECT_EQ(hb.num_balls(), 2 * g - 2);
    EXPECT_EQ(hb.num_disks(), 3 * g - 3);
    EXPECT_TRUE(check_spine(hb.spine()).empty());
    int gens = 0;
    for (int d = 0; d < hb.num_disks(); ++d) gens += hb.generator_of(d) >= 0;
    EXPECT_EQ(gens, g);
  }
}

TEST(Handlebody, GenusTwoSlots) {
  auto hb = canonical_handlebody(2);
  const auto& p0 = hb.ball(0).slots;
  EXPECT_EQ(p0[0], (DiskSide{1, Side::A}));
  EXPECT_EQ(p0[1], (DiskSide{1, Side::B}));
  EXPECT_EQ(p0[2], (DiskSide{0, Side::A}));
  const auto& p1 = hb.ball(1).slots;
  EXPECT_EQ(p1[0], (DiskSide{2, Side::A}));
  EXPECT_EQ(p1[2], (DiskSide{0, Side::B}));
  EXPECT_EQ(hb.generator_of(0), -1);
  EXPECT_EQ(hb.generator_of(1), 0);
  EXPECT_EQ(hb.generator_of(2), 1);
}

TEST(Handlebody, RejectsGenusOne) { EXPECT_THROW(build_spine(1), HandlebodyError); }

TEST(Handlebody, EverySideHasExactlyOneSlot) {
  for (int g = 2; g <= 6; ++g) {
    auto hb = canonical_handlebody(g);
    std::map<DiskSide, int> seen;
    for (const auto& b : hb.balls())
      for (const auto& ds : b.slots) ++seen[ds];
    EXPECT_EQ(static_cast<int>(seen.size()), 2 * hb.num_disks());
    for (auto [ds, n] : seen) {
      EXPECT_EQ(n, 1);
      EXPECT_EQ(hb.ball(hb.ball_of(ds)).slots[static_cast<std::size_t>(hb.slot_of(ds))], ds);
    }
  }
}

TEST(Handlebody, BrokenSpinesReported) {
  auto s = build_spine(3);
  s.edges[3].v = s.edges[3].u;
  EXPECT_FALSE(check_spine(s).empty());
  auto t = build_spine(3);
  t.spanning_tree.push_back(1);
  EXPECT_FALSE(check_spine(t).empty());
}
