#ifndef HSURF_SOLVER_HPP
#define HSURF_SOLVER_HPP

// Search for a compressing disk assembled from polygon types, certificate
// checking, and the full decision pipeline.
//
// Polygons are glued along D-edges with complementary keys. Growing the
// assembly only by attaching new polygons to open D-edges keeps its dual graph
// a tree, so every complete assembly is a disk (χ = 1) whose leaves are bigons;
// the search is therefore seeded at bigons.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsurf/free_group.hpp"
#include "hsurf/polygons.hpp"
#include "hsurf/regions.hpp"
#include "hsurf/retract_graph.hpp"
#include "hsurf/standard_position.hpp"
#include "hsurf/surface.hpp"

namespace hsurf {

// ---------------------------------------------------------------------------
// Abstract assembly search

/// A polygon type reduced to what the search needs: its class and the gluing
/// key of every D-edge. Keys k and k ^ 1 glue to each other.
struct AssemblyType {
  int cls = 0;
  std::vector<int> keys;
  int m() const { return static_cast<int>(keys.size()); }
};

struct AssemblyProblem {
  std::vector<AssemblyType> types;
  std::vector<int> class_cap;  // per class
  int max_polygons = 0;
};

struct Assembly {
  struct Match {
    int a = -1, ea = -1, b = -1, eb = -1;  // instance, edge; instance, edge
  };
  std::vector<int> instances;  // type per instance
  std::vector<Match> matches;
};

/// Accepts or rejects an assembly; `complete` is false for partial assemblies
/// whose last instance was just added.
using AssemblyCheck = std::function<bool(const Assembly&, bool complete)>;

enum class SolveStatus { Found, Infeasible, BudgetExhausted };

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  Assembly assembly;
  long nodes = 0;
  int explored_bound = 0;  // largest polygon count fully explored
};

inline SolveOutcome solve_assembly(const AssemblyProblem& pb, const AssemblyCheck& check, long node_budget = 2000000) {
  SolveOutcome out;
  std::map<int, std::vector<std::pair<int, int>>> by_key;  // key -> (type, edge)
  for (int t = 0; t < static_cast<int>(pb.types.size()); ++t)
    for (int e = 0; e < pb.types[static_cast<std::size_t>(t)].m(); ++e)
      by_key[pb.types[static_cast<std::size_t>(t)].keys[static_cast<std::size_t>(e)]].push_back({t, e});
  auto cap = [&](int cls) {
    return cls < static_cast<int>(pb.class_cap.size()) ? pb.class_cap[static_cast<std::size_t>(cls)] : 0;
  };

  Assembly cur;
  std::vector<std::pair<int, int>> open;  // (instance, edge), front first
  std::map<int, int> class_count;
  bool aborted = false;
  int limit = 0;

  std::function<bool()> rec = [&]() -> bool {
    if (++out.nodes > node_budget) {
      aborted = true;
      return false;
    }
    if (open.empty()) return check(cur, true);
    if (static_cast<int>(cur.instances.size() + open.size()) > limit) return false;
    const auto [i, k] = open.front();
    const int key = pb.types[static_cast<std::size_t>(cur.instances[static_cast<std::size_t>(i)])]
                        .keys[static_cast<std::size_t>(k)];
    auto it = by_key.find(key ^ 1);
    if (it == by_key.end()) return false;
    for (auto [t, l] : it->second) {
      const auto& type = pb.types[static_cast<std::size_t>(t)];
      if (class_count[type.cls] >= cap(type.cls)) continue;
      const int j = static_cast<int>(cur.instances.size());
      cur.instances.push_back(t);
      cur.matches.push_back({i, k, j, l});
      ++class_count[type.cls];
      auto saved = open;
      open.erase(open.begin());
      for (int e = 0; e < type.m(); ++e)
        if (e != l) open.push_back({j, e});
      bool ok = check(cur, false) && rec();
      if (ok) return true;
      open = saved;
      --class_count[type.cls];
      cur.matches.pop_back();
      cur.instances.pop_back();
      if (aborted) return false;
    }
    return false;
  };

  for (limit = 2; limit <= pb.max_polygons; ++limit) {
    for (int t = 0; t < static_cast<int>(pb.types.size()); ++t) {
      const auto& type = pb.types[static_cast<std::size_t>(t)];
      if (type.m() != 1 || cap(type.cls) < 1) continue;
      cur = Assembly{{t}, {}};
      class_count.clear();
      class_count[type.cls] = 1;
      open = {{0, 0}};
      if (check(cur, false) && rec()) {
        out.status = SolveStatus::Found;
        out.assembly = cur;
        return out;
      }
      if (aborted) {
        out.status = SolveStatus::BudgetExhausted;
        return out;
      }
    }
    out.explored_bound = limit;
  }
  out.status = SolveStatus::Infeasible;
  return out;
}

// ---------------------------------------------------------------------------
// Concrete problem built from polygon classes

struct PolygonCensus {
  std::vector<BallPolygons> balls;
  PolygonClasses classes;
  int saddle_bound = 0;
};

inline PolygonCensus polygon_census(const SurfaceComplex& s, const PolygonOptions& opt = {}) {
  PolygonCensus c;
  c.balls = enumerate_all_polygons(s, opt);
  c.classes = parallelism_classes(c.balls);
  c.saddle_bound = saddle_bound(s);
  return c;
}

inline const PolygonType& type_polygon(const PolygonCensus& c, int type) {
  const auto& g = c.classes.types.at(static_cast<std::size_t>(type));
  return c.balls[static_cast<std::size_t>(g.ball)].polygons[static_cast<std::size_t>(g.index)];
}

/// Multiplicity caps per class: bigons by the saddle bound; m >= 3 by the χ
/// equation (m-2)·n ≤ n_2 - 2; rectangles by the bigon total.
inline std::vector<int> class_caps(const PolygonCensus& c) {
  const int bigon_total = c.saddle_bound * c.classes.bigon_classes();
  std::vector<int> caps;
  for (std::size_t k = 0; k < c.classes.by_class.size(); ++k) {
    const int m = c.classes.class_size[k] / 2;
    if (m == 1) caps.push_back(c.saddle_bound);
    else if (m == 2) caps.push_back(bigon_total);
    else caps.push_back(std::max(0, (bigon_total - 2) / (m - 2)));
  }
  return caps;
}

inline AssemblyProblem assembly_problem(const PolygonCensus& c) {
  AssemblyProblem pb;
  std::map<DEdgeKey, int> key_id;
  auto id_of = [&](const DEdgeKey& k) {
    DEdgeKey base = k;
    base.side = Side::A;
    auto [it, fresh] = key_id.try_emplace(base, static_cast<int>(key_id.size()));
    return 2 * it->second + (k.side == Side::B ? 1 : 0);
  };
  for (std::size_t t = 0; t < c.classes.types.size(); ++t) {
    const auto& p = type_polygon(c, static_cast<int>(t));
    AssemblyType at;
    at.cls = c.classes.types[t].cls;
    for (const auto& d : p.d_edges) at.keys.push_back(id_of(d.key));
    pb.types.push_back(at);
  }
  pb.class_cap = class_caps(c);
  const int n2 = c.saddle_bound * c.classes.bigon_classes();
  int rect = 0;
  for (std::size_t k = 0; k < c.classes.by_class.size(); ++k)
    if (c.classes.class_size[k] == 4) rect += pb.class_cap[k];
  pb.max_polygons = n2 + rect + std::max(0, n2 - 2);
  return pb;
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  Assembly assembly;
  std::map<int, int> n_by_size;  // 2m -> number of instances
  int e_d = 0;                   // D-edge sides over all instances
  int e_s = 0;                   // S-edges over all instances
  FreeWord boundary_in_surface;
  FreeWord boundary_in_handlebody;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
  int chi_formula_twice = 0;  // 2χ from the polygon counts
  int chi_complex = 0;        // V - E + F of the glued pull-back complex
  int pullback_v = 0, pullback_e = 0, pullback_f = 0;
  FreeWord boundary_in_surface, boundary_in_handlebody;
  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

namespace detail {

struct ChordData {
  std::vector<std::array<int, 3>> d;  // (face id, lo pos, hi pos)
  std::vector<std::array<int, 3>> s;  // (surface id, pos, pos)
};

inline ChordData chord_data(const SurfaceComplex& s, const PolygonCensus& c, int type) {
  ChordData out;
  const auto& g = c.classes.types[static_cast<std::size_t>(type)];
  const auto& br = c.balls[static_cast<std::size_t>(g.ball)].regions;
  const auto& p = type_polygon(c, type);
  const auto forest = NestingForest::of(s);
  for (const auto& d : p.d_edges) {
    auto fb = face_boundary(s, forest, d.face);
    auto pos = [&](int arc) { return static_cast<int>(std::find(fb.begin(), fb.end(), arc) - fb.begin()); };
    int face_id = d.face.disk * (s.num_arcs() + 2) + (d.face.face + 1);
    out.d.push_back({face_id, pos(d.key.arc_lo), pos(d.key.arc_hi)});
  }
  auto curve_pos = [&](int arc_side) {
    const auto& as = br.arc_sides[static_cast<std::size_t>(arc_side)];
    for (const auto& curve : br.curves)
      for (std::size_t k = 0; k < curve.size(); ++k) {
        const auto& cs = br.arc_sides[static_cast<std::size_t>(curve[k])];
        if (cs.arc == as.arc && cs.slot == as.slot) return static_cast<int>(k);
      }
    return -1;
  };
  const int n = static_cast<int>(p.corners.size());
  for (int k = 0; k < p.m(); ++k) {
    int surface_id = g.ball * (s.num_pieces() + 1) + p.s_edges[static_cast<std::size_t>(k)].surface;
    out.s.push_back({surface_id, curve_pos(p.corners[static_cast<std::size_t>(2 * k + 1)]),
                     curve_pos(p.corners[static_cast<std::size_t>((2 * k + 2) % n)])});
  }
  return out;
}

inline bool chords_cross(const std::vector<std::array<int, 3>>& a, const std::vector<std::array<int, 3>>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (x[0] == y[0] && interleave(x[1], x[2], y[1], y[2])) return true;
  return false;
}

}  // namespace detail

/// Independent re-check of an assembly: counts, χ both ways, connectivity,
/// matching, embeddedness, the per-polygon arc rule and the boundary curve.
inline CertificateCheck verify_certificate(const SurfaceComplex& s, const PolygonCensus& c, const Assembly& a) {
  CertificateCheck r;
  const int F = static_cast<int>(a.instances.size());
  if (F == 0) {
    r.fail("empty assembly");
    return r;
  }
  std::vector<const PolygonType*> poly;
  for (int t : a.instances) {
    if (t < 0 || t >= static_cast<int>(c.classes.types.size())) {
      r.fail("unknown polygon type");
      return r;
    }
    poly.push_back(&type_polygon(c, t));
  }
  // Counting formulas.
  int sum_m = 0, twice_chi = 0;
  for (const auto* p : poly) {
    sum_m += p->m();
    twice_chi += 2 - p->m();
  }
  r.chi_formula_twice = twice_chi;
  if (twice_chi != 2) r.fail("Euler equation: sum (2-m) n = " + std::to_string(twice_chi) + ", expected 2");

  // Matching: perfect, no self-match, complementary keys.
  std::map<std::pair<int, int>, std::pair<int, int>> partner;
  for (const auto& mt : a.matches) {
    if (mt.a < 0 || mt.a >= F || mt.b < 0 || mt.b >= F || mt.ea < 0 || mt.eb < 0 ||
        mt.ea >= poly[static_cast<std::size_t>(mt.a)]->m() || mt.eb >= poly[static_cast<std::size_t>(mt.b)]->m()) {
      r.fail("match references a missing D-edge");
      return r;
    }
    if (mt.a == mt.b && mt.ea == mt.eb) r.fail("D-edge matched to itself");
    if (!partner.try_emplace({mt.a, mt.ea}, std::pair{mt.b, mt.eb}).second ||
        !partner.try_emplace({mt.b, mt.eb}, std::pair{mt.a, mt.ea}).second)
      r.fail("D-edge matched twice");
    const auto& ka = poly[static_cast<std::size_t>(mt.a)]->d_edges[static_cast<std::size_t>(mt.ea)].key;
    const auto& kb = poly[static_cast<std::size_t>(mt.b)]->d_edges[static_cast<std::size_t>(mt.eb)].key;
    if (ka.partner() != kb) r.fail("matched D-edges are not opposite sides of one chord");
  }
  if (static_cast<int>(partner.size()) != sum_m) r.fail("D-edges left unmatched");
  if (!r.ok) return r;

  // Connectivity of the glued disk.
  std::vector<int> parent(static_cast<std::size_t>(F));
  for (int i = 0; i < F; ++i) parent[static_cast<std::size_t>(i)] = i;
  for (const auto& mt : a.matches) {
    int x = detail::find_root(parent, mt.a), y = detail::find_root(parent, mt.b);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }
  std::set<int> roots;
  for (int i = 0; i < F; ++i) roots.insert(detail::find_root(parent, i));
  if (roots.size() != 1) r.fail("glued polygons form " + std::to_string(roots.size()) + " components");

  // Pull-back complex: corners identified across matched D-edges.
  std::vector<int> corner_base(static_cast<std::size_t>(F) + 1, 0);
  for (int i = 0; i < F; ++i)
    corner_base[static_cast<std::size_t>(i) + 1] = corner_base[static_cast<std::size_t>(i)] + 2 * poly[static_cast<std::size_t>(i)]->m();
  const int total_corners = corner_base.back();
  std::vector<int> cp(static_cast<std::size_t>(total_corners));
  for (int i = 0; i < total_corners; ++i) cp[static_cast<std::size_t>(i)] = i;
  auto corner_arc = [&](int inst, int corner) {
    const auto* p = poly[static_cast<std::size_t>(inst)];
    const auto& br = c.balls[static_cast<std::size_t>(p->ball)].regions;
    return br.arc_sides[static_cast<std::size_t>(p->corners[static_cast<std::size_t>(corner)])].arc;
  };
  // For a matched D-edge (inst, e), the corner of the partner on the same arc.
  auto glued_corner = [&](int inst, int corner) -> std::pair<int, int> {
    auto [q, l] = partner.at({inst, corner / 2});
    int arc = corner_arc(inst, corner);
    if (corner_arc(q, 2 * l) == arc) return {q, 2 * l};
    return {q, 2 * l + 1};
  };
  for (const auto& mt : a.matches)
    for (int side = 0; side < 2; ++side) {
      int corner = 2 * mt.ea + side;
      auto [q, qc] = glued_corner(mt.a, corner);
      if (corner_arc(q, qc) != corner_arc(mt.a, corner)) r.fail("glued corners lie on different arcs");
      int x = detail::find_root(cp, corner_base[static_cast<std::size_t>(mt.a)] + corner);
      int y = detail::find_root(cp, corner_base[static_cast<std::size_t>(q)] + qc);
      if (x != y) cp[static_cast<std::size_t>(x)] = y;
    }
  std::set<int> vertices;
  for (int i = 0; i < total_corners; ++i) vertices.insert(detail::find_root(cp, i));
  r.pullback_v = static_cast<int>(vertices.size());
  r.pullback_e = static_cast<int>(a.matches.size()) + sum_m;
  r.pullback_f = F;
  r.chi_complex = r.pullback_v - r.pullback_e + r.pullback_f;
  if (r.chi_complex != 1) r.fail("glued complex has chi " + std::to_string(r.chi_complex));
  // Three-valent pull-back: V = sum m n, E = 3/2 sum m n.
  if (r.pullback_v != sum_m || 2 * r.pullback_e != 3 * sum_m) r.fail("pull-back graph is not 3-valent");

  // Embeddedness across instances and the arc rule per polygon.
  const auto essential = essential_arcs(s);
  std::set<int> movable;
  for (const auto& w : find_movable_saddles(s)) movable.insert(w.piece);
  std::vector<detail::ChordData> chords;
  for (int t : a.instances) chords.push_back(detail::chord_data(s, c, t));
  for (int i = 0; i < F; ++i) {
    const auto* p = poly[static_cast<std::size_t>(i)];
    auto defect = polygon_defect(s, c.balls[static_cast<std::size_t>(p->ball)].regions, *p, essential, movable);
    if (!defect.empty()) r.fail("polygon " + std::to_string(i) + ": " + defect);
    for (int j = i + 1; j < F; ++j) {
      if (detail::chords_cross(chords[static_cast<std::size_t>(i)].d, chords[static_cast<std::size_t>(j)].d))
        r.fail("D-edges of polygons " + std::to_string(i) + " and " + std::to_string(j) + " cross");
      if (detail::chords_cross(chords[static_cast<std::size_t>(i)].s, chords[static_cast<std::size_t>(j)].s))
        r.fail("S-edges of polygons " + std::to_string(i) + " and " + std::to_string(j) + " cross");
    }
  }
  if (!r.ok) return r;

  // Trace the boundary: S-edges joined at corners through glued D-edges.
  const auto uses = arc_uses(s);
  auto corner_side = [&](int inst, int corner) -> const ArcSide& {
    const auto* p = poly[static_cast<std::size_t>(inst)];
    const auto& br = c.balls[static_cast<std::size_t>(p->ball)].regions;
    return br.arc_sides[static_cast<std::size_t>(p->corners[static_cast<std::size_t>(corner)])];
  };
  std::set<std::pair<int, int>> unvisited;
  for (int i = 0; i < F; ++i)
    for (int k = 0; k < poly[static_cast<std::size_t>(i)]->m(); ++k) unvisited.insert({i, k});
  std::vector<ArcCrossing> walk;
  int inst = 0, sedge = 0;
  bool forward = true;
  for (int guard = 0; guard <= sum_m; ++guard) {
    if (!unvisited.erase({inst, sedge})) break;
    const auto* p = poly[static_cast<std::size_t>(inst)];
    const int n = 2 * p->m();
    const auto& se = p->s_edges[static_cast<std::size_t>(sedge)];
    int from = 2 * sedge + 1, to = (2 * sedge + 2) % n;
    if (forward) {
      walk.insert(walk.end(), se.crossings.begin(), se.crossings.end());
    } else {
      std::swap(from, to);
      for (auto it = se.crossings.rbegin(); it != se.crossings.rend(); ++it) walk.push_back({it->arc, 1 - it->from_use});
    }
    // Cross the disk arc at corner `to` into the glued polygon.
    const auto& here = corner_side(inst, to);
    const auto& u = uses[static_cast<std::size_t>(here.arc)];
    int use = (u[0].piece == here.piece && u[0].index == here.word_index) ? 0 : 1;
    walk.push_back({here.arc, use});
    auto [q, qc] = glued_corner(inst, to);
    const auto& there = corner_side(q, qc);
    if (there.piece != u[static_cast<std::size_t>(1 - use)].piece) r.fail("boundary does not continue across arc " + s.arc(here.arc).name);
    inst = q;
    if (qc % 2 == 1) {
      sedge = qc / 2;
      forward = true;
    } else {
      const int qm = poly[static_cast<std::size_t>(q)]->m();
      sedge = (qc / 2 + qm - 1) % qm;
      forward = false;
    }
  }
  if (!unvisited.empty()) r.fail("boundary of the glued disk is not a single curve");
  if (!r.ok) return r;
  auto loops = surface_loops(s);
  r.boundary_in_surface = cyclic_reduce(surface_word(loops, walk));
  r.boundary_in_handlebody = loop_word(s, walk);
  if (r.boundary_in_surface.empty()) r.fail("boundary bounds a disk in the surface");
  if (!cyclic_reduce(r.boundary_in_handlebody).empty()) r.fail("boundary is not null-homotopic in the handlebody");
  return r;
}

inline Certificate make_certificate(const SurfaceComplex& s, const PolygonCensus& c, const Assembly& a) {
  Certificate cert;
  cert.assembly = a;
  for (int t : a.instances) {
    const auto& p = type_polygon(c, t);
    ++cert.n_by_size[p.size()];
    cert.e_d += p.m();
    cert.e_s += static_cast<int>(p.s_edges.size());
  }
  auto chk = verify_certificate(s, c, a);
  cert.boundary_in_surface = chk.boundary_in_surface;
  cert.boundary_in_handlebody = chk.boundary_in_handlebody;
  return cert;
}

inline nlohmann::json certificate_json(const SurfaceComplex& s, const PolygonCensus& c, const Certificate& cert) {
  nlohmann::json inst = nlohmann::json::array();
  for (int t : cert.assembly.instances) {
    const auto& p = type_polygon(c, t);
    const auto& br = c.balls[static_cast<std::size_t>(p.ball)].regions;
    std::vector<std::string> corners;
    for (int k : p.corners) corners.push_back(s.arc(br.arc_sides[static_cast<std::size_t>(k)].arc).name);
    inst.push_back({{"type", t}, {"class", c.classes.types[static_cast<std::size_t>(t)].cls}, {"ball", p.ball},
                    {"size", p.size()}, {"corners", corners}});
  }
  nlohmann::json matches = nlohmann::json::array();
  for (const auto& m : cert.assembly.matches) matches.push_back({m.a, m.ea, m.b, m.eb});
  nlohmann::json counts;
  for (auto [size, n] : cert.n_by_size) counts[std::to_string(size)] = n;
  return {{"instances", inst},
          {"matching", matches},
          {"counts", counts},
          {"E_D", cert.e_d},
          {"E_S", cert.e_s},
          {"boundary_in_surface", word_string(cert.boundary_in_surface)},
          {"boundary_in_handlebody", word_string(cert.boundary_in_handlebody)}};
}

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Certificate> certificate;
  long nodes = 0;
  int explored_bound = 0;
  int max_polygons = 0;
};

/// Exhaustive bounded search for a verified compressing disk.
inline SolveResult solve(const SurfaceComplex& s, const PolygonCensus& c, long node_budget = 2000000) {
  SolveResult res;
  if (c.classes.bigon_classes() == 0) return res;
  auto pb = assembly_problem(c);
  res.max_polygons = pb.max_polygons;
  std::vector<detail::ChordData> chords;
  for (std::size_t t = 0; t < c.classes.types.size(); ++t) chords.push_back(detail::chord_data(s, c, static_cast<int>(t)));
  AssemblyCheck check = [&](const Assembly& a, bool complete) {
    if (complete) return verify_certificate(s, c, a).ok;
    const auto& last = chords[static_cast<std::size_t>(a.instances.back())];
    for (std::size_t i = 0; i + 1 < a.instances.size(); ++i) {
      const auto& other = chords[static_cast<std::size_t>(a.instances[i])];
      if (detail::chords_cross(last.d, other.d) || detail::chords_cross(last.s, other.s)) return false;
    }
    return true;
  };
  auto out = solve_assembly(pb, check, node_budget);
  res.status = out.status;
  res.nodes = out.nodes;
  res.explored_bound = out.explored_bound;
  if (out.status == SolveStatus::Found) res.certificate = make_certificate(s, c, out.assembly);
  return res;
}

// ---------------------------------------------------------------------------
// Decision pipeline

enum class VerdictKind { Compressible, Incompressible, Indeterminate };

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Compressible: return "Compressible";
    case VerdictKind::Incompressible: return "Incompressible";
    case VerdictKind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::Indeterminate;
  std::string reason;
  std::string stage;
  Reduction reduction;
  std::optional<TrivialityResult> cycle;
  std::optional<StandardReport> standard;
  std::optional<PolygonCensus> census;
  std::optional<SolveResult> solve;
};

struct DecideOptions {
  PolygonOptions polygons;
  long node_budget = 2000000;
};

inline Verdict decide(const SurfaceComplex& input, const DecideOptions& opt = {}) {
  Verdict v;
  auto rep = validate(input);
  if (!rep.ok()) {
    v.stage = "validate";
    v.reason = "invalid complex: " + rep.errors().front();
    return v;
  }
  if (component_count(input) != 1) {
    v.stage = "validate";
    v.reason = "surface must be connected";
    return v;
  }
  try {
    v.reduction = reduce_to_standard(input);
  } catch (const MoveError& e) {
    v.stage = "reduce";
    v.reason = e.what();
    return v;
  }
  const auto& s = v.reduction.surface;
  auto g = build_graph(s);
  auto triv = is_trivial(s, g);
  if (triv.trivial) {
    v.kind = VerdictKind::Compressible;
    v.stage = "graph";
    v.reason = "retract graph has a cycle inside ps-ball " + std::to_string(triv.ball);
    v.cycle = triv;
    return v;
  }
  v.standard = check_standard_properties(s);
  if (!v.standard->property(2).pass) {
    v.stage = "standard";
    v.reason = "not reducible to movable-saddle-free form";
    return v;
  }
  for (const auto& c : v.standard->checks)
    if (!c.pass) {
      v.stage = "standard";
      v.reason = "standard position property " + std::to_string(c.property) + " fails: " + c.failures.front();
      return v;
    }
  try {
    for (const auto& br : complement_regions(s)) {
      auto parallel = disk_parallel_curves(br);
      if (parallel.empty()) continue;
      int piece = br.arc_sides[static_cast<std::size_t>(br.curves[static_cast<std::size_t>(parallel.front())].front())].piece;
      v.stage = "standard";
      v.reason = "piece " + s.piece(piece).name + " is parallel into a disk of the system";
      return v;
    }
    v.census = polygon_census(s, opt.polygons);
  } catch (const RegionError& e) {
    v.stage = "regions";
    v.reason = std::string("encoding not realizable: ") + e.what();
    return v;
  }
  if (v.census->classes.bigon_classes() == 0) {
    v.kind = VerdictKind::Incompressible;
    v.stage = "bigons";
    v.reason = "no bigon in any ps-ball";
    return v;
  }
  v.solve = solve(s, *v.census, opt.node_budget);
  v.stage = "solve";
  switch (v.solve->status) {
    case SolveStatus::Found:
      v.kind = VerdictKind::Compressible;
      v.reason = "compressing disk assembled from polygons";
      break;
    case SolveStatus::Infeasible:
      v.kind = VerdictKind::Incompressible;
      v.reason = "no polygon assembly within " + std::to_string(v.solve->max_polygons) + " polygons";
      break;
    case SolveStatus::BudgetExhausted:
      v.reason = "search budget exhausted after " + std::to_string(v.solve->nodes) + " nodes";
      break;
  }
  return v;
}

}  // namespace hsurf

#endif  // HSURF_SOLVER_HPP
