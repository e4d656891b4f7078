#include <gtest/gtest.h>

#include <random>

#include "hsurf/corpus.hpp"
#include "hsurf/solver.hpp"
#include "support.hpp"

using namespace hsurf;
using hsurf::testing::assembly_arithmetic_ok;
using hsurf::testing::brute_force_feasible;
using hsurf::testing::random_problem;

namespace {

AssemblyCheck accept_all() {
  return [](const Assembly&, bool) { return true; };
}

}  // namespace

TEST(Assembly, TwoBigonsOnOneKeyPair) {
  AssemblyProblem pb;
  pb.types = {{0, {0}}, {1, {1}}};
  pb.class_cap = {1, 1};
  pb.max_polygons = 2;
  auto out = solve_assembly(pb, accept_all());
  ASSERT_EQ(out.status, SolveStatus::Found);
  EXPECT_EQ(out.assembly.instances.size(), 2u);
  EXPECT_TRUE(assembly_arithmetic_ok(pb, out.assembly));
}

TEST(Assembly, CapBlocksSecondCopy) {
  // Both bigons are of one class with cap 1, so no pair can be formed.
  AssemblyProblem pb;
  pb.types = {{0, {0}}, {0, {1}}};
  pb.class_cap = {1};
  pb.max_polygons = 4;
  EXPECT_EQ(solve_assembly(pb, accept_all()).status, SolveStatus::Infeasible);
  EXPECT_FALSE(brute_force_feasible(pb));
}

TEST(Assembly, RectangleChain) {
  // bigon - rectangle - bigon
  AssemblyProblem pb;
  pb.types = {{0, {0}}, {1, {1, 2}}, {2, {3}}};
  pb.class_cap = {1, 1, 1};
  pb.max_polygons = 3;
  auto out = solve_assembly(pb, accept_all());
  ASSERT_EQ(out.status, SolveStatus::Found);
  EXPECT_EQ(out.assembly.instances.size(), 3u);
  pb.max_polygons = 2;
  EXPECT_EQ(solve_assembly(pb, accept_all()).status, SolveStatus::Infeasible);
}

TEST(Assembly, BudgetIsReported) {
  AssemblyProblem pb;
  pb.types = {{0, {0}}, {1, {1, 0, 0}}};
  pb.class_cap = {10, 10};
  pb.max_polygons = 12;
  auto out = solve_assembly(pb, [](const Assembly&, bool complete) { return !complete; }, 5);
  EXPECT_EQ(out.status, SolveStatus::BudgetExhausted);
}

TEST(Assembly, AgreesWithBruteForceOnRandomProblems) {
  std::mt19937 rng(20240611);
  int feasible = 0;
  for (int i = 0; i < 300; ++i) {
    auto pb = random_problem(rng);
    auto out = solve_assembly(pb, accept_all());
    ASSERT_NE(out.status, SolveStatus::BudgetExhausted);
    const bool found = out.status == SolveStatus::Found;
    ASSERT_EQ(found, brute_force_feasible(pb)) << "problem " << i;
    if (found) {
      ++feasible;
      EXPECT_TRUE(assembly_arithmetic_ok(pb, out.assembly));
      EXPECT_LE(static_cast<int>(out.assembly.instances.size()), pb.max_polygons);
    }
  }
  // Both outcomes must actually be exercised.
  EXPECT_GT(feasible, 20);
  EXPECT_LT(feasible, 280);
}

TEST(Certificate, CompressibleFixturesVerify) {
  for (auto name : {"qiu_fig12b_n2.hs", "qiu_fig12b_n3.hs", "hexagon_across_d0.hs", "two_bigon_strip.hs"}) {
    auto s = hsurf::testing::fixture(name);
    auto v = decide(s);
    ASSERT_EQ(v.kind, VerdictKind::Compressible) << name;
    ASSERT_TRUE(v.solve && v.solve->certificate) << name;
    const auto& cert = *v.solve->certificate;
    auto chk = verify_certificate(v.reduction.surface, *v.census, cert.assembly);
    EXPECT_TRUE(chk.ok) << name;
    EXPECT_EQ(chk.chi_formula_twice, 2) << name;
    EXPECT_EQ(chk.chi_complex, 1) << name;
    EXPECT_EQ(cert.e_d % 2, 0);
    EXPECT_EQ(static_cast<int>(cert.assembly.instances.size()) - cert.e_d / 2, 1) << name;
    EXPECT_FALSE(cert.boundary_in_surface.empty());
    EXPECT_TRUE(cyclic_reduce(cert.boundary_in_handlebody).empty());
  }
}

TEST(Certificate, TamperedAssemblyIsRejected) {
  auto s = hsurf::testing::fixture("qiu_fig12b_n2.hs");
  auto v = decide(s);
  ASSERT_TRUE(v.solve && v.solve->certificate);
  auto a = v.solve->certificate->assembly;
  a.instances.pop_back();
  EXPECT_FALSE(verify_certificate(v.reduction.surface, *v.census, a).ok);
  EXPECT_FALSE(verify_certificate(v.reduction.surface, *v.census, Assembly{}).ok);
}

TEST(Decide, RejectsDisconnectedInput) {
  auto s = parse_surface(
      "hsurf 1\ngenus 2\narc a disk 1\narc b disk 2\n"
      "piece c ball 0 kind trivial crossings 0 : a@A+ a@B-\n"
      "piece d ball 1 kind trivial crossings 0 : b@A+ b@B-\n");
  auto v = decide(s);
  EXPECT_EQ(v.kind, VerdictKind::Indeterminate);
  EXPECT_EQ(v.stage, "validate");
}

TEST(Decide, NoBigonsMeansIncompressible) {
  auto v = decide(gen_jaco(2));
  EXPECT_EQ(v.kind, VerdictKind::Incompressible);
  EXPECT_EQ(v.stage, "bigons");
  EXPECT_FALSE(v.solve.has_value());
}

TEST(Decide, CapsMatchTheirFormulas) {
  auto v = decide(gen_qiu(2));
  ASSERT_TRUE(v.census);
  auto caps = class_caps(*v.census);
  const int n2 = v.census->saddle_bound * v.census->classes.bigon_classes();
  for (std::size_t k = 0; k < caps.size(); ++k) {
    const int m = v.census->classes.class_size[k] / 2;
    if (m == 1) {
      EXPECT_EQ(caps[k], v.census->saddle_bound);
    } else if (m == 2) {
      EXPECT_EQ(caps[k], n2);
    } else {
      EXPECT_LE((m - 2) * caps[k], std::max(0, n2 - 2));
    }
  }
}

TEST(Decide, AgreesWithOracleOnRandomSurfaces) {
  int decided = 0;
  for (const auto& s : hsurf::testing::random_mutations(200, 99)) {
    auto v = decide(s);
    if (v.kind == VerdictKind::Indeterminate) continue;
    ++decided;
    EXPECT_EQ(v.kind == VerdictKind::Incompressible, is_injective(s).injective) << serialize_surface(s);
  }
  EXPECT_GT(decided, 50);
}
