#ifndef HSURF_POLYGONS_HPP
#define HSURF_POLYGONS_HPP

// Polygons in the complement of a surface inside one ps-ball.
//
// A polygon is a simple closed curve on a region's boundary sphere that
// alternates D-edges (chords of one disk face between two arcs) and S-edges
// (paths across one ball-surface between two arcs). Corners sit on arcs.
// Since every region is a ball, each such curve bounds a disk in it.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsurf/free_group.hpp"
#include "hsurf/regions.hpp"
#include "hsurf/standard_position.hpp"

namespace hsurf {

/// Gluing key of a D-edge: the chord of disk face `face` between two arcs,
/// approached from disk side `side`.
struct DEdgeKey {
  int disk = -1;
  Side side = Side::A;
  int face = kRootFace;
  int arc_lo = -1, arc_hi = -1;

  DEdgeKey partner() const { return {disk, opposite(side), face, arc_lo, arc_hi}; }
  friend auto operator<=>(const DEdgeKey&, const DEdgeKey&) = default;
};

struct PolygonDEdge {
  int slot = -1;
  FaceRef face;
  DEdgeKey key;
};

struct PolygonSEdge {
  int surface = -1;
  std::vector<int> pieces;              // path across the ball-surface, first to last corner
  std::vector<ArcCrossing> crossings;   // internal arcs crossed along the way
};

struct PolygonType {
  int id = -1;
  int ball = -1;
  int region = -1;
  /// Arc sides (indices into BallRegions::arc_sides). D-edge k joins corners
  /// 2k and 2k+1; S-edge k joins corners 2k+1 and 2k+2 (cyclically).
  std::vector<int> corners;
  std::vector<PolygonDEdge> d_edges;
  std::vector<PolygonSEdge> s_edges;
  bool bigon = false;
  bool saddle_polygon = false;
  std::string parallel_key;
  int parallel_class = -1;

  int m() const { return static_cast<int>(d_edges.size()); }
  int size() const { return 2 * m(); }
};

/// Everything the solver needs about one ps-ball.
struct BallPolygons {
  BallRegions regions;
  std::vector<PolygonType> polygons;
};

struct PolygonOptions {
  int max_m = 0;  // 0: number of disk faces in the region
  int max_polygons_per_region = 20000;
};

namespace detail {

inline bool interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

/// Path between two pieces of one ball-surface across internal arcs.
inline bool surface_path(const SurfaceComplex& s, const std::vector<std::vector<ArcUse>>& uses, int from, int to,
                         std::vector<int>& pieces, std::vector<ArcCrossing>& crossings) {
  std::map<int, std::pair<int, ArcCrossing>> prev;
  std::deque<int> q{from};
  prev[from] = {-1, {}};
  while (!q.empty()) {
    int p = q.front();
    q.pop_front();
    if (p == to) break;
    for (int i = 0; i < s.piece(p).n(); ++i) {
      const auto& e = s.piece(p).word[static_cast<std::size_t>(i)];
      if (e.free() || !s.arc(e.arc).internal()) continue;
      const auto& u = uses[static_cast<std::size_t>(e.arc)];
      if (u.size() != 2) continue;
      int here = (u[0].piece == p && u[0].index == i) ? 0 : 1;
      int next = u[static_cast<std::size_t>(1 - here)].piece;
      if (prev.count(next)) continue;
      prev[next] = {p, ArcCrossing{e.arc, here}};
      q.push_back(next);
    }
  }
  if (!prev.count(to)) return false;
  pieces.clear();
  crossings.clear();
  for (int cur = to; cur != -1; cur = prev[cur].first) {
    pieces.push_back(cur);
    if (prev[cur].first != -1) crossings.push_back(prev[cur].second);
  }
  std::reverse(pieces.begin(), pieces.end());
  std::reverse(crossings.begin(), crossings.end());
  return true;
}

}  // namespace detail

/// Condition-1 check and embeddedness of a single closed corner cycle.
/// Returns an empty string when the polygon is admissible.
inline std::string polygon_defect(const SurfaceComplex& s, const BallRegions& br, const PolygonType& p,
                                  const std::vector<bool>& essential, const std::set<int>& movable_pieces) {
  const int m = p.m();
  if (m < 1 || static_cast<int>(p.corners.size()) != 2 * m || static_cast<int>(p.s_edges.size()) != m)
    return "malformed polygon";
  // An essential arc may carry one corner on each of its two disk sides, but
  // never two corners on the same side.
  std::map<int, int> hits;
  std::set<std::pair<int, int>> corner_sides;
  for (int c : p.corners) {
    const auto& as = br.arc_sides[static_cast<std::size_t>(c)];
    if (!corner_sides.insert({as.arc, as.slot}).second) return "meets arc " + s.arc(as.arc).name + " twice on one side";
    ++hits[as.arc];
  }
  for (const auto& se : p.s_edges)
    for (const auto& x : se.crossings) ++hits[x.arc];
  for (auto [arc, n] : hits) {
    if (!essential[static_cast<std::size_t>(arc)] && n == 1) return "crosses inessential arc " + s.arc(arc).name + " once";
    if (essential[static_cast<std::size_t>(arc)] && n > 2) return "meets essential arc " + s.arc(arc).name + " " + std::to_string(n) + " times";
  }
  // D-chords in one face and S-chords on one ball-surface must not cross.
  const auto forest = NestingForest::of(s);
  auto face_index = [&](const PolygonDEdge& d, int arc) {
    auto fb = face_boundary(s, forest, d.face);
    return static_cast<int>(std::find(fb.begin(), fb.end(), arc) - fb.begin());
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = p.d_edges[static_cast<std::size_t>(i)];
      const auto& b = p.d_edges[static_cast<std::size_t>(j)];
      if (a.slot != b.slot || a.face != b.face) continue;
      if (detail::interleave(face_index(a, a.key.arc_lo), face_index(a, a.key.arc_hi), face_index(b, b.key.arc_lo),
                             face_index(b, b.key.arc_hi)))
        return "D-edges cross in one disk face";
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
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = p.s_edges[static_cast<std::size_t>(i)];
      const auto& b = p.s_edges[static_cast<std::size_t>(j)];
      if (a.surface != b.surface) continue;
      const int n = 2 * m;
      if (detail::interleave(curve_pos(p.corners[static_cast<std::size_t>(2 * i + 1)]),
                             curve_pos(p.corners[static_cast<std::size_t>((2 * i + 2) % n)]),
                             curve_pos(p.corners[static_cast<std::size_t>(2 * j + 1)]),
                             curve_pos(p.corners[static_cast<std::size_t>((2 * j + 2) % n)])))
        return "S-edges cross on one ball-surface";
    }
  if (m == 1) {
    bool saddle = false;
    for (int piece : p.s_edges[0].pieces)
      if (s.piece(piece).kind == PieceKind::Saddle && !movable_pieces.count(piece)) saddle = true;
    if (!saddle) return "bigon misses every essential saddle";
  }
  return "";
}

namespace detail {

inline bool alternating_disks(const std::vector<int>& disks) {
  const int n = static_cast<int>(disks.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (disks[static_cast<std::size_t>(i)] == disks[static_cast<std::size_t>(k)] &&
              disks[static_cast<std::size_t>(j)] == disks[static_cast<std::size_t>(l)] &&
              disks[static_cast<std::size_t>(i)] != disks[static_cast<std::size_t>(j)])
            return true;
  return false;
}

/// Cyclic (face, surface) pattern up to rotation and reflection.
inline std::string pattern_key(const std::vector<std::string>& steps) {
  const int n = static_cast<int>(steps.size());
  std::string best;
  bool first = true;
  for (int dir = 0; dir < 2; ++dir)
    for (int start = 0; start < n; start += 2) {
      std::string key;
      for (int k = 0; k < n; ++k) {
        // Read backwards from a D step for the reflection; parity stays aligned.
        int idx = dir == 0 ? (start + k) % n : ((start - k) % n + n) % n;
        key += steps[static_cast<std::size_t>(idx)] + "|";
      }
      if (first || key < best) best = key;
      first = false;
    }
  return best;
}

}  // namespace detail

/// Enumerates admissible polygons of every region of one ps-ball.
inline BallPolygons enumerate_polygons(const SurfaceComplex& s, BallRegions br, const PolygonOptions& opt = {}) {
  BallPolygons out;
  const auto uses = arc_uses(s);
  const auto essential = essential_arcs(s);
  std::set<int> movable;
  for (const auto& w : find_movable_saddles(s)) movable.insert(w.piece);
  const auto forest = NestingForest::of(s);

  for (const auto& reg : br.regions) {
    const auto& nodes = reg.arc_sides;  // candidate corners
    const int N = static_cast<int>(nodes.size());
    int max_m = opt.max_m > 0 ? opt.max_m : static_cast<int>(reg.disk_faces.size());
    max_m = std::min(max_m, N / 2);
    auto side = [&](int local) -> const ArcSide& {
      return br.arc_sides[static_cast<std::size_t>(nodes[static_cast<std::size_t>(local)])];
    };
    auto d_adj = [&](int x, int y) {
      const auto& a = side(x);
      const auto& b = side(y);
      return a.slot == b.slot && a.face == b.face && a.arc != b.arc;
    };
    auto s_adj = [&](int x, int y) { return side(x).surface == side(y).surface && x != y; };

    std::vector<int> path;  // local node indices
    std::vector<bool> on_path(static_cast<std::size_t>(N), false);
    int produced = 0;
    auto emit = [&]() {
      PolygonType p;
      p.ball = br.ball;
      p.region = reg.id;
      for (int x : path) p.corners.push_back(nodes[static_cast<std::size_t>(x)]);
      const int n = static_cast<int>(path.size());
      for (int k = 0; k < n; k += 2) {
        const auto& a = side(path[static_cast<std::size_t>(k)]);
        const auto& b = side(path[static_cast<std::size_t>(k + 1)]);
        const auto ds = br.slots[static_cast<std::size_t>(a.slot)].side;
        PolygonDEdge d{a.slot, a.face, {ds.disk, ds.side, a.face.face, std::min(a.arc, b.arc), std::max(a.arc, b.arc)}};
        p.d_edges.push_back(d);
        const auto& u = side(path[static_cast<std::size_t>(k + 1)]);
        const auto& v = side(path[static_cast<std::size_t>((k + 2) % n)]);
        PolygonSEdge se;
        se.surface = u.surface;
        if (!detail::surface_path(s, uses, u.piece, v.piece, se.pieces, se.crossings)) return;
        p.s_edges.push_back(se);
      }
      if (!polygon_defect(s, br, p, essential, movable).empty()) return;
      p.bigon = p.m() == 1;
      std::vector<int> disks;
      for (const auto& d : p.d_edges) disks.push_back(d.key.disk);
      p.saddle_polygon = detail::alternating_disks(disks);
      std::vector<std::string> steps;
      for (int k = 0; k < p.m(); ++k) {
        const auto& d = p.d_edges[static_cast<std::size_t>(k)];
        steps.push_back("D" + std::to_string(d.slot) + ":" + std::to_string(d.face.face));
        steps.push_back("S" + std::to_string(p.s_edges[static_cast<std::size_t>(k)].surface));
      }
      p.parallel_key = "b" + std::to_string(br.ball) + "r" + std::to_string(reg.id) + "/" + detail::pattern_key(steps);
      p.id = static_cast<int>(out.polygons.size());
      out.polygons.push_back(std::move(p));
      ++produced;
    };
    std::function<void(int)> extend = [&](int start) {
      if (produced >= opt.max_polygons_per_region) return;
      const int len = static_cast<int>(path.size());
      const int last = path.back();
      if (len % 2 == 1) {
        // Next step is a D-edge.
        for (int y = start + 1; y < N; ++y)
          if (!on_path[static_cast<std::size_t>(y)] && d_adj(last, y)) {
            path.push_back(y);
            on_path[static_cast<std::size_t>(y)] = true;
            extend(start);
            on_path[static_cast<std::size_t>(y)] = false;
            path.pop_back();
          }
        return;
      }
      // Next step is an S-edge: close the cycle or continue.
      if (s_adj(last, start)) emit();
      if (len / 2 >= max_m) return;
      for (int y = start + 1; y < N; ++y)
        if (!on_path[static_cast<std::size_t>(y)] && s_adj(last, y)) {
          path.push_back(y);
          on_path[static_cast<std::size_t>(y)] = true;
          extend(start);
          on_path[static_cast<std::size_t>(y)] = false;
          path.pop_back();
        }
    };
    for (int s0 = 0; s0 < N; ++s0) {
      path = {s0};
      on_path.assign(static_cast<std::size_t>(N), false);
      on_path[static_cast<std::size_t>(s0)] = true;
      extend(s0);
    }
  }
  (void)forest;
  // Parallel classes, numbered per ball in order of first appearance.
  std::map<std::string, int> cls;
  for (auto& p : out.polygons) {
    auto [it, fresh] = cls.try_emplace(p.parallel_key, static_cast<int>(cls.size()));
    p.parallel_class = it->second;
  }
  out.regions = std::move(br);
  return out;
}

inline std::vector<BallPolygons> enumerate_all_polygons(const SurfaceComplex& s, const PolygonOptions& opt = {}) {
  std::vector<BallPolygons> out;
  for (auto& br : complement_regions(s)) out.push_back(enumerate_polygons(s, std::move(br), opt));
  return out;
}

/// A polygon type across all balls.
struct GlobalPolygon {
  int ball = -1;
  int index = -1;  // into BallPolygons::polygons
  int cls = -1;    // global parallel class
};

struct PolygonClasses {
  std::vector<GlobalPolygon> types;
  std::vector<std::vector<int>> by_class;        // class -> type indices
  std::vector<int> class_size;                   // 2m per class
  std::vector<bool> class_bigon;
  std::map<int, std::vector<int>> by_size;       // 2m -> classes (the sets 𝒫_2m)
  std::vector<std::set<int>> shares_edge;        // type -> types sharing a gluable D-edge
  std::map<DEdgeKey, std::vector<std::pair<int, int>>> d_edge_index;  // key -> (type, edge)

  int bigon_classes() const {
    auto it = by_size.find(2);
    return it == by_size.end() ? 0 : static_cast<int>(it->second.size());
  }
  /// 𝒫^J_I: classes of I-gons sharing an edge with some J-gon.
  std::vector<int> sharing(int I, int J) const {
    std::set<int> out;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (class_size[static_cast<std::size_t>(types[t].cls)] != I) continue;
      for (int u : shares_edge[t])
        if (class_size[static_cast<std::size_t>(types[static_cast<std::size_t>(u)].cls)] == J) out.insert(types[t].cls);
    }
    return {out.begin(), out.end()};
  }
};

inline PolygonClasses parallelism_classes(const std::vector<BallPolygons>& balls) {
  PolygonClasses pc;
  std::map<std::pair<int, int>, int> global_class;
  for (const auto& bp : balls)
    for (const auto& p : bp.polygons) {
      auto [it, fresh] =
          global_class.try_emplace({bp.regions.ball, p.parallel_class}, static_cast<int>(pc.by_class.size()));
      if (fresh) {
        pc.by_class.emplace_back();
        pc.class_size.push_back(p.size());
        pc.class_bigon.push_back(p.bigon);
        pc.by_size[p.size()].push_back(it->second);
      }
      pc.by_class[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(pc.types.size()));
      pc.types.push_back({bp.regions.ball, p.id, it->second});
    }
  pc.shares_edge.resize(pc.types.size());
  for (std::size_t t = 0; t < pc.types.size(); ++t) {
    const auto& p = balls[static_cast<std::size_t>(pc.types[t].ball)].polygons[static_cast<std::size_t>(pc.types[t].index)];
    for (int k = 0; k < p.m(); ++k) pc.d_edge_index[p.d_edges[static_cast<std::size_t>(k)].key].push_back({static_cast<int>(t), k});
  }
  for (const auto& [key, list] : pc.d_edge_index) {
    auto it = pc.d_edge_index.find(key.partner());
    if (it == pc.d_edge_index.end()) continue;
    for (auto [t, k] : list)
      for (auto [u, l] : it->second) pc.shares_edge[static_cast<std::size_t>(t)].insert(u);
  }
  return pc;
}

/// Bigon bound: half the sum of x * C_2x over critical pieces with x >= 3, rounded down.
inline int saddle_bound(const SurfaceComplex& s) {
  int twice = 0;
  for (const auto& p : s.pieces)
    if (p.kind != PieceKind::Trivial && p.n() >= 3) twice += p.n();
  return twice / 2;
}

inline nlohmann::json polygon_census_json(const SurfaceComplex& s, const std::vector<BallPolygons>& balls,
                                          const PolygonClasses& pc) {
  nlohmann::json out;
  out["saddle_bound"] = saddle_bound(s);
  out["bigon_classes"] = pc.bigon_classes();
  nlohmann::json cls = nlohmann::json::array();
  for (std::size_t c = 0; c < pc.by_class.size(); ++c) {
    const auto& rep = pc.types[static_cast<std::size_t>(pc.by_class[c][0])];
    const auto& p = balls[static_cast<std::size_t>(rep.ball)].polygons[static_cast<std::size_t>(rep.index)];
    std::set<int> adj;
    for (int t : pc.by_class[c])
      for (int u : pc.shares_edge[static_cast<std::size_t>(t)]) adj.insert(pc.types[static_cast<std::size_t>(u)].cls);
    nlohmann::json corners = nlohmann::json::array();
    for (int c2 : p.corners) {
      const auto& as = balls[static_cast<std::size_t>(rep.ball)].regions.arc_sides[static_cast<std::size_t>(c2)];
      corners.push_back(s.arc(as.arc).name + (as.inner ? ":in" : ":out"));
    }
    cls.push_back({{"class", c},
                   {"ball", rep.ball},
                   {"region", p.region},
                   {"size", p.size()},
                   {"bigon", p.bigon},
                   {"saddle_polygon", p.saddle_polygon},
                   {"members", pc.by_class[c].size()},
                   {"corners", corners},
                   {"adjacent_classes", std::vector<int>(adj.begin(), adj.end())}});
  }
  out["classes"] = cls;
  return out;
}

inline std::string polygon_census_text(const SurfaceComplex& s, const std::vector<BallPolygons>& balls,
                                       const PolygonClasses& pc) {
  std::ostringstream out;
  auto j = polygon_census_json(s, balls, pc);
  out << "saddle_bound " << j["saddle_bound"].get<int>() << "\n";
  out << "bigon_classes " << j["bigon_classes"].get<int>() << "\n";
  for (const auto& c : j["classes"]) {
    out << "class " << c["class"].get<int>() << " ball " << c["ball"].get<int>() << " region "
        << c["region"].get<int>() << " size " << c["size"].get<int>() << (c["bigon"].get<bool>() ? " bigon" : "")
        << (c["saddle_polygon"].get<bool>() ? " saddle" : "") << " members " << c["members"].get<std::size_t>()
        << " corners";
    for (const auto& x : c["corners"]) out << " " << x.get<std::string>();
    out << " adj";
    for (const auto& x : c["adjacent_classes"]) out << " " << x.get<int>();
    out << "\n";
  }
  return out.str();
}

}  // namespace hsurf

#endif  // HSURF_POLYGONS_HPP
