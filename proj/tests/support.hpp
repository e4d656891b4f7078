#ifndef HSURF_TEST_SUPPORT_HPP
#define HSURF_TEST_SUPPORT_HPP

// Shared helpers for the unit tests and the acceptance binary: fixture loading,
// random diagram mutations and a brute-force feasibility oracle for abstract
// polygon assemblies.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsurf/corpus.hpp"
#include "hsurf/document.hpp"
#include "hsurf/solver.hpp"

#ifndef HSURF_DATA_DIR
#define HSURF_DATA_DIR "examples/surfaces"
#endif

namespace hsurf::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SurfaceComplex fixture(const std::string& name) {
  return parse_surface(read_file(std::string(HSURF_DATA_DIR) + "/" + name));
}

/// Every .hs file under the fixture directory, sorted by name.
inline std::vector<std::pair<std::string, SurfaceComplex>> corpus() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(HSURF_DATA_DIR))
    if (e.path().extension() == ".hs") names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  std::vector<std::pair<std::string, SurfaceComplex>> out;
  for (const auto& n : names) out.emplace_back(n, fixture(n));
  return out;
}

/// Diagrams of the generated families, used as seeds for mutation.
inline std::vector<Diagram> seed_diagrams() {
  std::vector<Diagram> out;
  for (int n = 1; n <= 3; ++n) {
    out.push_back(qiu_diagram(n));
    out.push_back(qiu_diagram(n, QiuVariant::Fig12b));
    out.push_back(jaco_diagram(n));
  }
  return out;
}

/// One random edit: a rotation change, a re-parented arc, an added or a
/// dropped arc. Returns false when the result is not a connected valid
/// surface.
inline bool mutate(Diagram& d, std::mt19937& rng, SurfaceComplex& out) {
  std::uniform_int_distribution<int> pick(0, 3);
  const int disk = std::uniform_int_distribution<int>(0, 2)(rng);
  auto& arcs = d.arcs[static_cast<std::size_t>(disk)];
  switch (pick(rng)) {
    case 0: {
      const int b = std::uniform_int_distribution<int>(0, 1)(rng);
      const int i = std::uniform_int_distribution<int>(0, 2)(rng);
      d.twist[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)] += 1 + std::uniform_int_distribution<int>(0, 3)(rng);
      break;
    }
    case 1:
      if (arcs.size() > 1) {
        const int i = std::uniform_int_distribution<int>(1, static_cast<int>(arcs.size()) - 1)(rng);
        arcs[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(-1, i - 1)(rng);
      }
      break;
    case 2:
      if (arcs.size() < 6) arcs.push_back(std::uniform_int_distribution<int>(-1, static_cast<int>(arcs.size()) - 1)(rng));
      break;
    default:
      if (arcs.size() > 1) arcs.pop_back();
      break;
  }
  try {
    out = build_diagram(d);
  } catch (const DiagramError&) {
    return false;
  }
  return validate(out).ok() && component_count(out) == 1 && orientable(out);
}

/// `count` valid surfaces obtained by chains of random edits of the seeds.
inline std::vector<SurfaceComplex> random_mutations(int count, unsigned seed) {
  std::mt19937 rng(seed);
  auto seeds = seed_diagrams();
  std::vector<SurfaceComplex> out;
  for (int guard = 0; static_cast<int>(out.size()) < count && guard < 100000; ++guard) {
    Diagram d = seeds[static_cast<std::size_t>(guard) % seeds.size()];
    const int steps = 1 + static_cast<int>(rng() % 3);
    SurfaceComplex s;
    bool ok = false;
    for (int k = 0; k < steps; ++k) ok = mutate(d, rng, s);
    if (ok) out.push_back(s);
  }
  return out;
}

/// Brute-force feasibility of an abstract assembly problem: some multiset of
/// types within the caps admits a gluing of all its edges (key k to k ^ 1)
/// whose dual graph is a tree. Enumerates multisets and then all perfect
/// matchings of their edges, so only usable on small problems.
inline bool brute_force_feasible(const AssemblyProblem& pb) {
  const int T = static_cast<int>(pb.types.size());
  std::vector<int> count(static_cast<std::size_t>(T), 0);
  auto cap = [&](int cls) {
    return cls < static_cast<int>(pb.class_cap.size()) ? pb.class_cap[static_cast<std::size_t>(cls)] : 0;
  };

  auto realizable = [&]() {
    std::vector<int> owner, key;
    int F = 0;
    for (int t = 0; t < T; ++t)
      for (int c = 0; c < count[static_cast<std::size_t>(t)]; ++c) {
        for (int k : pb.types[static_cast<std::size_t>(t)].keys) {
          owner.push_back(F);
          key.push_back(k);
        }
        ++F;
      }
    const int E = static_cast<int>(owner.size());
    if (F < 2 || E != 2 * (F - 1)) return false;
    std::vector<bool> used(static_cast<std::size_t>(E), false);
    std::vector<std::pair<int, int>> glue;
    std::function<bool()> rec = [&]() -> bool {
      int i = 0;
      while (i < E && used[static_cast<std::size_t>(i)]) ++i;
      if (i == E) {
        std::vector<int> parent(static_cast<std::size_t>(F));
        for (int f = 0; f < F; ++f) parent[static_cast<std::size_t>(f)] = f;
        std::function<int(int)> find = [&](int x) {
          return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
        };
        for (auto [a, b] : glue) {
          int ra = find(a), rb = find(b);
          if (ra == rb) return false;
          parent[static_cast<std::size_t>(ra)] = rb;
        }
        return true;
      }
      used[static_cast<std::size_t>(i)] = true;
      for (int j = i + 1; j < E; ++j) {
        if (used[static_cast<std::size_t>(j)] || key[static_cast<std::size_t>(j)] != (key[static_cast<std::size_t>(i)] ^ 1)) continue;
        used[static_cast<std::size_t>(j)] = true;
        glue.push_back({owner[static_cast<std::size_t>(i)], owner[static_cast<std::size_t>(j)]});
        bool ok = rec();
        glue.pop_back();
        used[static_cast<std::size_t>(j)] = false;
        if (ok) return true;
      }
      used[static_cast<std::size_t>(i)] = false;
      return false;
    };
    return rec();
  };

  std::function<bool(int, int)> choose = [&](int t, int total) -> bool {
    if (t == T) return realizable();
    std::map<int, int> per_class;
    for (int u = 0; u < t; ++u) per_class[pb.types[static_cast<std::size_t>(u)].cls] += count[static_cast<std::size_t>(u)];
    const int cls = pb.types[static_cast<std::size_t>(t)].cls;
    for (int c = 0; total + c <= pb.max_polygons && per_class[cls] + c <= cap(cls); ++c) {
      count[static_cast<std::size_t>(t)] = c;
      if (choose(t + 1, total + c)) return true;
    }
    count[static_cast<std::size_t>(t)] = 0;
    return false;
  };
  return choose(0, 0);
}

/// Small random abstract problems: up to five types of one to three edges on
/// up to three key pairs.
inline AssemblyProblem random_problem(std::mt19937& rng) {
  AssemblyProblem pb;
  const int types = 2 + static_cast<int>(rng() % 4);
  const int pairs = 1 + static_cast<int>(rng() % 3);
  const int classes = 1 + static_cast<int>(rng() % types);
  for (int t = 0; t < types; ++t) {
    AssemblyType at;
    at.cls = static_cast<int>(rng() % static_cast<unsigned>(classes));
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < m; ++e) at.keys.push_back(static_cast<int>(rng() % static_cast<unsigned>(2 * pairs)));
    pb.types.push_back(at);
  }
  for (int c = 0; c < classes; ++c) pb.class_cap.push_back(1 + static_cast<int>(rng() % 3));
  pb.max_polygons = 2 + static_cast<int>(rng() % 4);
  return pb;
}

/// Edge balance and χ = 1 of an assembly, counted directly.
inline bool assembly_arithmetic_ok(const AssemblyProblem& pb, const Assembly& a) {
  const int F = static_cast<int>(a.instances.size());
  int E = 0;
  std::map<int, int> balance;
  for (int t : a.instances)
    for (int k : pb.types[static_cast<std::size_t>(t)].keys) {
      ++E;
      balance[k >> 1] += (k & 1) ? -1 : 1;
    }
  for (auto [k, b] : balance)
    if (b != 0) return false;
  return E % 2 == 0 && F - E / 2 == 1 && static_cast<int>(a.matches.size()) == E / 2;
}

}  // namespace hsurf::testing

#endif  // HSURF_TEST_SUPPORT_HPP
