#include <gtest/gtest.h>

#include "hsurf/corpus.hpp"
#include "hsurf/free_group.hpp"
#include "hsurf/retract_graph.hpp"
#include "support.hpp"

using namespace hsurf;

namespace {

FreeWord w(const std::string& s) {
  // a, b, c ... positive; A, B, C ... inverses
  FreeWord out;
  for (char c : s) out.push_back(c >= 'a' ? c - 'a' + 1 : -(c - 'A' + 1));
  return out;
}

}  // namespace

TEST(RetractGraph, CollarIsNontrivial) {
  auto s = collar_annulus();
  auto g = build_graph(s);
  auto t = is_trivial(s, g);
  EXPECT_FALSE(t.trivial);
  EXPECT_GT(g.edges.size(), 0u);
}

TEST(RetractGraph, MutatedCollarHasCycleInBallZero) {
  auto s = mutated_collar();
  ASSERT_TRUE(validate(s).ok());
  auto g = build_graph(s);
  auto t = is_trivial(s, g);
  ASSERT_TRUE(t.trivial);
  EXPECT_EQ(t.ball, 0);
  EXPECT_FALSE(t.cycle_pieces.empty());
  for (int p : t.cycle_pieces) EXPECT_EQ(s.piece(p).ball, 0);
}

TEST(RetractGraph, CycleRankMatchesEuler) {
  // The retract graph is a spine of the surface, so its cycle rank is 1 - χ
  // for a connected surface.
  for (auto& [name, s] : hsurf::testing::corpus()) {
    auto g = build_graph(s);
    EXPECT_EQ(g.cycle_rank(), 1 - euler_characteristic(s)) << name;
  }
}

TEST(RetractGraph, EdgeListMentionsEveryNode) {
  auto s = gen_qiu(2);
  auto g = build_graph(s);
  auto text = export_edge_list(s, g);
  int nodes = 0, edges = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    nodes += line.rfind("node ", 0) == 0;
    edges += line.rfind("edge ", 0) == 0;
  }
  EXPECT_EQ(nodes, static_cast<int>(g.nodes.size()));
  EXPECT_EQ(edges, static_cast<int>(g.edges.size()));
}

TEST(FreeGroup, ReduceAndInverse) {
  EXPECT_EQ(word_string(reduce(w("abBA"))), "1");
  EXPECT_EQ(word_string(reduce(w("aabBc"))), "aac");
  EXPECT_EQ(word_string(cyclic_reduce(w("abaA"))), "ab");
  EXPECT_EQ(word_string(cyclic_reduce(w("abcA"))), "bc");
  EXPECT_EQ(word_string(inverse(w("abC"))), "cBA");
  EXPECT_EQ(word_string(reduce(concat(w("ab"), inverse(w("ab"))))), "1");
}

TEST(FreeGroup, FoldedRanks) {
  EXPECT_EQ(fold({w("aa"), w("b")}).rank(), 2);
  EXPECT_EQ(fold({w("aa"), w("aaa")}).rank(), 1);  // generates <a>
  EXPECT_EQ(fold({w("a"), w("aba"), w("b")}).rank(), 2);
  EXPECT_EQ(fold({w("abAB")}).rank(), 1);
  EXPECT_EQ(fold({w("ab"), w("ba"), w("a")}).rank(), 2);
}

TEST(FreeGroup, MembershipAfterFolding) {
  auto g = fold({w("aa"), w("bab")});
  EXPECT_TRUE(g.contains(w("aaaa")));
  EXPECT_TRUE(g.contains(w("babaa")));
  EXPECT_FALSE(g.contains(w("a")));
  EXPECT_FALSE(g.contains(w("b")));
}

TEST(FreeGroup, FoldIsOrderIndependent) {
  std::vector<FreeWord> words{w("abA"), w("bb"), w("aab"), w("Ba")};
  const int r = fold(words).rank();
  for (unsigned seed = 1; seed < 20; ++seed) EXPECT_EQ(fold(words, seed).rank(), r);
  std::reverse(words.begin(), words.end());
  EXPECT_EQ(fold(words).rank(), r);
}

TEST(Oracle, Families) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(is_injective(gen_qiu(n)).injective);
    EXPECT_TRUE(is_injective(gen_jaco(n)).injective);
  }
  EXPECT_FALSE(is_injective(gen_qiu(2, QiuVariant::Fig12b)).injective);
  EXPECT_TRUE(is_injective(collar_annulus()).injective);
  EXPECT_FALSE(is_injective(mutated_collar()).injective);
}

TEST(Oracle, RanksAreConsistent) {
  for (auto& [name, s] : hsurf::testing::corpus()) {
    auto r = is_injective(s);
    EXPECT_EQ(r.surface_rank, 1 - euler_characteristic(s)) << name;
    EXPECT_LE(r.image_rank, r.surface_rank) << name;
    EXPECT_EQ(r.injective, r.image_rank == r.surface_rank) << name;
  }
}
