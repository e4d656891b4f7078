// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hsurf/corpus.hpp"
#include "hsurf/free_group.hpp"
#include "hsurf/retract_graph.hpp"
#include "hsurf/solver.hpp"
#include "hsurf/standard_position.hpp"
#include "support.hpp"

using namespace hsurf;

namespace {

constexpr double kQiuSecondsPerLevel = 10.0;
constexpr int kQiuMaxN = 5;
constexpr int kJacoMaxN = 4;
constexpr int kRandomAssemblies = 200;
constexpr int kRandomMutations = 100;
constexpr unsigned kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int bigons_in_ball(const PolygonCensus& c, int ball) {
  int n = 0;
  for (std::size_t k = 0; k < c.classes.class_size.size(); ++k)
    if (c.classes.class_bigon[k] && c.classes.types[static_cast<std::size_t>(c.classes.by_class[k][0])].ball == ball) ++n;
  return n;
}

Outcome qiu_family() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= kQiuMaxN; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = decide(gen_qiu(n));
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, sec);
    if (v.kind != VerdictKind::Incompressible) o.fail("n=" + std::to_string(n) + " " + verdict_name(v.kind) + ": " + v.reason);
    if (sec >= kQiuSecondsPerLevel) o.fail("n=" + std::to_string(n) + " took " + std::to_string(sec) + " s");
  }
  if (o.pass) o.detail = "n=1.." + std::to_string(kQiuMaxN) + " Incompressible, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome qiu_bigon() {
  Outcome o;
  auto v = decide(gen_qiu(2));
  if (!v.census) {
    o.fail("no census (" + v.stage + ")");
    return o;
  }
  int b0 = bigons_in_ball(*v.census, 0);
  o.detail = "bigon classes in ball 0: " + std::to_string(b0);
  if (b0 != 1) o.fail(o.detail);
  return o;
}

Outcome qiu_variants() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    auto b = decide(gen_qiu(n, QiuVariant::Fig12b));
    if (b.kind != VerdictKind::Compressible || !b.solve || !b.solve->certificate) {
      o.fail("fig12b n=" + std::to_string(n) + " " + verdict_name(b.kind));
    } else if (!verify_certificate(b.reduction.surface, *b.census, b.solve->certificate->assembly).ok) {
      o.fail("fig12b n=" + std::to_string(n) + " certificate rejected");
    }
    auto a = decide(gen_qiu(n, QiuVariant::Fig12a));
    if (a.kind != VerdictKind::Incompressible) o.fail("fig12a n=" + std::to_string(n) + " " + verdict_name(a.kind));
  }
  if (o.pass) o.detail = "fig12b Compressible with verified certificate, fig12a Incompressible, n=2,3";
  return o;
}

Outcome jaco_family() {
  Outcome o;
  for (int n = 1; n <= kJacoMaxN; ++n) {
    auto v = decide(gen_jaco(n));
    if (v.kind != VerdictKind::Incompressible || v.stage != "bigons") {
      o.fail("n=" + std::to_string(n) + " " + verdict_name(v.kind) + " at " + v.stage);
      continue;
    }
    for (int b = 0; b < 2; ++b)
      if (bigons_in_ball(*v.census, b) != 0) o.fail("n=" + std::to_string(n) + " has a bigon in ball " + std::to_string(b));
  }
  if (o.pass) o.detail = "n=1.." + std::to_string(kJacoMaxN) + " Incompressible, |P2| = 0 in both balls";
  return o;
}

std::vector<std::pair<std::string, SurfaceComplex>> full_corpus() {
  auto out = hsurf::testing::corpus();
  for (int n = 4; n <= kQiuMaxN; ++n) out.emplace_back("qiu n=" + std::to_string(n), gen_qiu(n));
  for (int n = 4; n <= kJacoMaxN; ++n) out.emplace_back("jaco n=" + std::to_string(n), gen_jaco(n));
  return out;
}

Outcome oracle_agreement() {
  Outcome o;
  int checked = 0;
  for (const auto& [name, s] : full_corpus()) {
    if (!orientable(s)) continue;
    ++checked;
    bool inj = is_injective(s).injective;
    auto v = decide(s);
    if (inj != (v.kind == VerdictKind::Incompressible))
      o.fail(name + ": oracle " + (inj ? "injective" : "not injective") + ", decide " + verdict_name(v.kind));
  }
  if (o.pass) o.detail = std::to_string(checked) + " two-sided surfaces agree";
  return o;
}

Outcome certificate_arithmetic() {
  Outcome o;
  int certs = 0;
  for (const auto& [name, s] : full_corpus()) {
    auto v = decide(s);
    if (!v.solve || !v.solve->certificate) continue;
    ++certs;
    auto chk = verify_certificate(v.reduction.surface, *v.census, v.solve->certificate->assembly);
    auto pb = assembly_problem(*v.census);
    if (!chk.ok || chk.chi_complex != 1 || chk.chi_formula_twice != 2)
      o.fail(name + ": certificate chi check failed");
    if (!hsurf::testing::assembly_arithmetic_ok(pb, v.solve->certificate->assembly))
      o.fail(name + ": certificate edges unbalanced");
  }
  std::mt19937 rng(kSeed);
  int feasible = 0;
  for (int i = 0; i < kRandomAssemblies; ++i) {
    auto pb = hsurf::testing::random_problem(rng);
    auto out = solve_assembly(pb, [](const Assembly&, bool) { return true; });
    bool found = out.status == SolveStatus::Found;
    feasible += found;
    if (found != hsurf::testing::brute_force_feasible(pb)) o.fail("random problem " + std::to_string(i) + " disagrees");
    if (found && !hsurf::testing::assembly_arithmetic_ok(pb, out.assembly))
      o.fail("random problem " + std::to_string(i) + " arithmetic");
  }
  if (o.pass)
    o.detail = std::to_string(certs) + " certificates; " + std::to_string(kRandomAssemblies) + " random problems (" +
               std::to_string(feasible) + " feasible) match brute force";
  return o;
}

Outcome reduction_monotone() {
  Outcome o;
  std::vector<SurfaceComplex> work;
  for (auto& [name, s] : full_corpus()) work.push_back(s);
  auto muts = hsurf::testing::random_mutations(kRandomMutations, kSeed);
  if (static_cast<int>(muts.size()) < kRandomMutations) o.fail("only " + std::to_string(muts.size()) + " mutations");
  for (auto& s : muts) work.push_back(s);
  int moves = 0, compressions = 0;
  for (const auto& s : work) {
    Reduction r;
    try {
      r = reduce_to_standard(s);
    } catch (const MoveError& e) {
      o.fail(std::string("reduction failed: ") + e.what());
      continue;
    }
    SurfaceComplex cur = s;
    for (const auto& m : r.log.moves) {
      auto before = complexity(cur);
      cur = apply_move(cur, m);
      if (!(complexity(cur) < before)) o.fail(m.kind + " on " + m.piece + " did not lower the complexity");
      ++moves;
    }
    for (const auto& w : find_movable_saddles(s)) {
      SurfaceComplex t;
      try {
        t = boundary_compress(s, w);
      } catch (const MoveError&) {
        continue;
      }
      ++compressions;
      if (disk_intersection_count(t) != disk_intersection_count(s) || euler_characteristic(t) != euler_characteristic(s))
        o.fail("boundary compression changed |S.D| or chi");
    }
  }
  if (o.pass)
    o.detail = std::to_string(work.size()) + " surfaces, " + std::to_string(moves) + " moves, " +
               std::to_string(compressions) + " compressions checked";
  return o;
}

Outcome collar_check() {
  Outcome o;
  auto c = collar_annulus();
  auto tc = is_trivial(c, build_graph(c));
  if (tc.trivial) o.fail("collar graph trivial");
  if (decide(c).kind != VerdictKind::Incompressible) o.fail("collar not Incompressible");
  auto m = mutated_collar();
  auto v = decide(m);
  if (v.kind != VerdictKind::Compressible || !v.cycle || !v.cycle->trivial || v.cycle->cycle_pieces.empty())
    o.fail("mutated collar: " + std::string(verdict_name(v.kind)) + " without cycle witness");
  if (o.pass) o.detail = "collar nontrivial and Incompressible; mutated collar cycle in ball " + std::to_string(v.cycle->ball);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"qiu-family", qiu_family},
      {"qiu-bigon-census", qiu_bigon},
      {"qiu-variants", qiu_variants},
      {"jaco-family", jaco_family},
      {"oracle-agreement", oracle_agreement},
      {"certificate-arithmetic", certificate_arithmetic},
      {"reduction-monotone", reduction_monotone},
      {"collar-check", collar_check}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %-24s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
