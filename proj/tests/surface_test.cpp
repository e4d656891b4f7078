#include <gtest/gtest.h>

#include "hsurf/corpus.hpp"
#include "hsurf/document.hpp"
#include "hsurf/surface.hpp"
#include "support.hpp"

using namespace hsurf;

TEST(Surface, CollarInvariants) {
  auto s = collar_annulus();
  EXPECT_TRUE(validate(s).ok());
  EXPECT_EQ(euler_characteristic(s), 0);
  EXPECT_EQ(disk_intersection_count(s), 1);
  EXPECT_EQ(component_count(s), 1);
  EXPECT_TRUE(orientable(s));
  auto ess = essential_arcs(s);
  EXPECT_TRUE(ess[0]);
}

TEST(Surface, EulerCharacteristicIsPiecesMinusArcs) {
  for (auto& [name, s] : hsurf::testing::corpus()) {
    int sum_twice = 0;
    for (const auto& p : s.pieces) sum_twice += 2 - p.n();
    EXPECT_EQ(2 * euler_characteristic(s), sum_twice) << name;
  }
}

TEST(Surface, ValidateCatchesBrokenComplexes) {
  // An arc used only once.
  auto s = collar_annulus();
  s.arcs.push_back(DiskArc{});
  s.arcs.back().name = "z";
  s.arcs.back().disk = 2;
  EXPECT_FALSE(validate(s).ok());
  // A piece listed in the wrong ball for its slot.
  auto t = collar_annulus();
  t.pieces[0].ball = 1;
  EXPECT_FALSE(validate(t).ok());
}

TEST(Surface, OddPiecesAreRejected) {
  EXPECT_FALSE(default_kind(5).has_value());
  EXPECT_FALSE(default_kind(7).has_value());
  EXPECT_EQ(default_kind(2), PieceKind::Trivial);
  EXPECT_EQ(default_kind(3), PieceKind::BoundaryCritical);
  EXPECT_EQ(default_kind(6), PieceKind::Saddle);
}

TEST(Surface, InessentialArcOfCap) {
  // A disk capped off on both sides: its arc is cut off as a disk.
  auto s = parse_surface(
      "hsurf 1\ngenus 2\narc a disk 1\n"
      "piece c ball 0 kind boundary_critical crossings 0 : a@A+\n"
      "piece d ball 0 kind boundary_critical crossings 0 : a@B-\n");
  EXPECT_TRUE(validate(s).ok());
  EXPECT_FALSE(essential_arcs(s)[0]);
  EXPECT_EQ(euler_characteristic(s), 1);
}

TEST(Document, TextRoundTrip) {
  for (auto& [name, s] : hsurf::testing::corpus()) {
    auto text = serialize_surface(s);
    auto back = parse_surface(text);
    EXPECT_EQ(serialize_surface(back), text) << name;
    EXPECT_EQ(back.num_arcs(), s.num_arcs());
    EXPECT_EQ(back.num_pieces(), s.num_pieces());
  }
}

TEST(Document, JsonRoundTrip) {
  for (auto& [name, s] : hsurf::testing::corpus()) {
    auto back = from_json(nlohmann::json::parse(to_json(s).dump()));
    EXPECT_EQ(serialize_surface(back), serialize_surface(s)) << name;
  }
}

TEST(Document, CommentsAndWhitespace) {
  auto s = parse_surface(
      "# a collar\nhsurf 1\n\ngenus 2\narc a disk 1   # the only arc\n"
      "piece c ball 0 kind trivial crossings 0 : a@A+ a@B-\n");
  EXPECT_EQ(s.num_arcs(), 1);
}

TEST(Document, ErrorsCarryLineNumbers) {
  try {
    parse_surface("hsurf 1\ngenus 2\narc a dusk 1\npiece c ball 0 kind trivial crossings 0 : a@A+ a@B-\n");
    FAIL() << "expected a DocumentError";
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_surface("hsurf 1\ngenus 2\npiece c ball 0 kind trivial crossings 0 : q@A+ q@B-\n"),
               DocumentError);
  // Out-of-range disks pass the schema and are left to validate().
  auto bad = parse_surface("hsurf 1\ngenus 2\narc a disk 7\npiece c ball 0 kind trivial crossings 0 : a@A+ a@B-\n");
  EXPECT_FALSE(validate(bad).ok());
  EXPECT_THROW(parse_surface("hsurf 9\ngenus 2\n"), DocumentError);
}
