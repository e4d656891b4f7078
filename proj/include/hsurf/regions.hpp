#ifndef HSURF_REGIONS_HPP
#define HSURF_REGIONS_HPP

// Complement regions of the surface inside each ps-ball.
//
// The boundary sphere of a ps-ball is encoded as a planar map: every disk-side
// circle carries the endpoints of its arcs in nesting order (side B reversed),
// chords are the arcs themselves and B-edges join consecutive D-edges of a
// ball-surface through the pants part. Tracing faces of that map yields the
// disk faces and pants faces; unions across circle segments give the regions.
// When the map is disconnected, every component's base segment (the stretch
// just before the first endpoint of its lowest slot) faces one common pants face.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsurf/surface.hpp"

namespace hsurf {

class RegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Face of a disk cut along its arcs: the face just inside an arc, or the
/// outer face (kRootFace) that contains the spine crossing.
inline constexpr int kRootFace = -1;

struct FaceRef {
  int disk = -1;
  int face = kRootFace;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Arcs around a disk face, in cyclic order.
inline std::vector<int> face_boundary(const SurfaceComplex& s, const NestingForest& f, FaceRef face) {
  if (face.face == kRootFace) return f.roots.at(static_cast<std::size_t>(face.disk));
  std::vector<int> out{face.face};
  const auto& ch = f.children.at(static_cast<std::size_t>(face.face));
  out.insert(out.end(), ch.begin(), ch.end());
  (void)s;
  return out;
}

struct SlotEndpoint {
  int arc = -1;
  bool first = true;  // first endpoint of the arc in side-A order
};

struct SlotLayout {
  DiskSide side;
  std::vector<SlotEndpoint> order;  // circle order seen from this ball
  std::vector<int> face_after;      // disk face of segment order[j] -> order[j+1]
};

/// One side of an arc as seen from inside a ps-ball.
struct ArcSide {
  int arc = -1;
  int slot = -1;       // slot index within the ball
  bool inner = false;  // faces the disk face just inside the arc
  int surface = -1;    // ball-surface containing the arc on this slot
  int piece = -1;
  int word_index = -1;
  FaceRef face;        // disk face this side looks into
};

struct ComplementRegion {
  int ball = -1;
  int id = -1;
  std::vector<std::pair<int, FaceRef>> disk_faces;  // (slot, face)
  std::vector<int> arc_sides;                       // indices into BallRegions::arc_sides
  std::vector<int> surfaces;                        // ball-surfaces bounding the region
  int euler = 0;                                    // χ of the region boundary
};

struct BallRegions {
  int ball = -1;
  std::vector<SlotLayout> slots;
  std::vector<ArcSide> arc_sides;
  std::vector<ComplementRegion> regions;
  /// Boundary curves of ball-surfaces: cyclic lists of arc-side pairs (chords).
  std::vector<std::vector<int>> curves;  // entries: arc_side index of the inner side
  std::vector<int> curve_surface;
  int map_components = 0;

  int region_of(int arc_side) const {
    for (const auto& r : regions)
      if (std::find(r.arc_sides.begin(), r.arc_sides.end(), arc_side) != r.arc_sides.end()) return r.id;
    return -1;
  }
};

namespace detail {

inline void dfs_order(const NestingForest& f, int arc, std::vector<SlotEndpoint>& out, std::vector<int>& face_after,
                      int parent_face) {
  out.push_back({arc, true});
  face_after.push_back(arc);
  for (int c : f.children[static_cast<std::size_t>(arc)]) dfs_order(f, c, out, face_after, arc);
  out.push_back({arc, false});
  face_after.push_back(parent_face);
}

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) { return find_root(parent, x); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

}  // namespace detail

inline SlotLayout slot_layout(const SurfaceComplex& s, const NestingForest& f, DiskSide ds) {
  SlotLayout L;
  L.side = ds;
  std::vector<int> face_after;
  for (int r : f.roots[static_cast<std::size_t>(ds.disk)]) detail::dfs_order(f, r, L.order, face_after, kRootFace);
  if (ds.side == Side::A) {
    L.face_after = face_after;
  } else {
    // Reversed traversal: the segment from order'[j] to order'[j+1] is the
    // side-A segment ending at order'[j].
    const std::size_t n = L.order.size();
    std::reverse(L.order.begin(), L.order.end());
    L.face_after.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t a_index = n - 1 - j;  // position of order'[j] in side-A order
      L.face_after[j] = face_after[(a_index + n - 1) % n];
    }
  }
  (void)s;
  return L;
}

/// Builds the region structure of one ps-ball. Throws RegionError when the
/// encoding is not realizable as disjoint curves on the boundary sphere.
inline BallRegions ball_regions(const SurfaceComplex& s, int ball) {
  const auto& hb = s.handlebody;
  const auto forest = NestingForest::of(s);
  const auto uses = arc_uses(s);
  const auto sigma = ball_surfaces(s);
  BallRegions out;
  out.ball = ball;

  // Vertices.
  struct Vertex {
    int slot, pos;  // pos -1 for the dummy vertex of an empty slot
  };
  std::vector<Vertex> verts;
  std::vector<std::vector<int>> vid(3);
  std::map<std::pair<int, std::pair<int, bool>>, int> endpoint_vertex;  // (slot,(arc,first)) -> vertex
  for (int i = 0; i < 3; ++i) {
    out.slots.push_back(slot_layout(s, forest, hb.ball(ball).slots[static_cast<std::size_t>(i)]));
    const auto& L = out.slots.back();
    if (L.order.empty()) {
      vid[static_cast<std::size_t>(i)].push_back(static_cast<int>(verts.size()));
      verts.push_back({i, -1});
      continue;
    }
    for (int j = 0; j < static_cast<int>(L.order.size()); ++j) {
      endpoint_vertex[{i, {L.order[static_cast<std::size_t>(j)].arc, L.order[static_cast<std::size_t>(j)].first}}] =
          static_cast<int>(verts.size());
      vid[static_cast<std::size_t>(i)].push_back(static_cast<int>(verts.size()));
      verts.push_back({i, j});
    }
  }

  // Arc sides: for every disk arc on each slot of this ball, its inner and outer sides.
  std::map<std::pair<int, int>, int> slot_arc_use;  // (slot, arc) -> use index into uses[arc]
  for (int i = 0; i < 3; ++i) {
    const auto ds = out.slots[static_cast<std::size_t>(i)].side;
    for (const auto& ep : out.slots[static_cast<std::size_t>(i)].order) {
      if (!ep.first) continue;
      const auto& u = uses[static_cast<std::size_t>(ep.arc)];
      int which = -1;
      for (int k = 0; k < static_cast<int>(u.size()); ++k)
        if (s.piece(u[static_cast<std::size_t>(k)].piece).word[static_cast<std::size_t>(u[static_cast<std::size_t>(k)].index)].side == ds.side)
          which = k;
      if (which < 0) throw RegionError("arc " + s.arc(ep.arc).name + " has no piece on side " + side_char(ds.side));
      slot_arc_use[{i, ep.arc}] = which;
      const auto& use = u[static_cast<std::size_t>(which)];
      int parent = s.arc(ep.arc).parent;
      out.arc_sides.push_back({ep.arc, i, true, sigma[static_cast<std::size_t>(use.piece)], use.piece, use.index,
                               FaceRef{ds.disk, ep.arc}});
      out.arc_sides.push_back({ep.arc, i, false, sigma[static_cast<std::size_t>(use.piece)], use.piece, use.index,
                               FaceRef{ds.disk, parent < 0 ? kRootFace : parent}});
    }
  }

  // Edges: segments, chords, merged B-edges.
  enum class EType { Seg, Chord, B };
  struct Edge {
    int tail, head;
    EType type;
    int slot = -1, index = -1, surface = -1;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> seg_edge(3);
  for (int i = 0; i < 3; ++i) {
    const auto& v = vid[static_cast<std::size_t>(i)];
    const int n = static_cast<int>(v.size());
    for (int j = 0; j < n; ++j) {
      seg_edge[static_cast<std::size_t>(i)].push_back(static_cast<int>(edges.size()));
      edges.push_back({v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>((j + 1) % n)], EType::Seg, i, j});
    }
  }
  std::map<int, int> chord_edge_of_vertex;
  for (int i = 0; i < 3; ++i)
    for (const auto& ep : out.slots[static_cast<std::size_t>(i)].order) {
      if (!ep.first) continue;
      int e = static_cast<int>(edges.size());
      int t = endpoint_vertex.at({i, {ep.arc, true}}), h = endpoint_vertex.at({i, {ep.arc, false}});
      edges.push_back({t, h, EType::Chord, i, ep.arc});
      chord_edge_of_vertex[t] = e;
      chord_edge_of_vertex[h] = e;
    }

  // B-edge fragments between boundary points; internal arc endpoints are pass-through.
  // Point keys: disk endpoints map to vertices (>= 0); internal endpoints to -(1 + 2*arc + end).
  auto point_of = [&](const DEdge& e, bool exit) -> int {
    const auto& arc = s.arc(e.arc);
    bool first = (e.forward == exit) ? false : true;  // forward: enter at first, exit at second
    if (arc.internal()) return -(1 + 2 * e.arc + (first ? 0 : 1));
    int slot = hb.slot_of({arc.disk, e.side});
    return endpoint_vertex.at({slot, {e.arc, first}});
  };
  struct Frag {
    int a, b, surface;
  };
  std::vector<Frag> frags;
  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& pc = s.piece(p);
    if (pc.ball != ball) continue;
    const int n = pc.n();
    if (n == 1 && pc.word[0].free()) continue;  // cap: closed curve in the pants part
    for (int i = 0; i < n; ++i) {
      const auto& cur = pc.word[static_cast<std::size_t>(i)];
      const auto& nxt = pc.word[static_cast<std::size_t>((i + 1) % n)];
      frags.push_back({point_of(cur, true), point_of(nxt, false), sigma[static_cast<std::size_t>(p)]});
    }
  }
  std::map<int, std::vector<int>> at_point;
  for (int f = 0; f < static_cast<int>(frags.size()); ++f) {
    at_point[frags[static_cast<std::size_t>(f)].a].push_back(f);
    at_point[frags[static_cast<std::size_t>(f)].b].push_back(f);
  }
  std::vector<bool> used(frags.size(), false);
  std::map<int, int> b_edge_of_vertex;
  for (int f = 0; f < static_cast<int>(frags.size()); ++f) {
    if (used[static_cast<std::size_t>(f)]) continue;
    // Only start from a fragment touching a disk endpoint.
    int start_pt = frags[static_cast<std::size_t>(f)].a >= 0 ? frags[static_cast<std::size_t>(f)].a
                   : frags[static_cast<std::size_t>(f)].b >= 0 ? frags[static_cast<std::size_t>(f)].b
                                                               : 1 << 30;
    if (start_pt == 1 << 30) continue;
    int cur = f, pt = start_pt;
    while (true) {
      used[static_cast<std::size_t>(cur)] = true;
      const auto& fr = frags[static_cast<std::size_t>(cur)];
      int other = fr.a == pt ? fr.b : fr.a;
      if (fr.a == fr.b) other = fr.a;
      if (other >= 0) {
        int e = static_cast<int>(edges.size());
        edges.push_back({start_pt, other, EType::B, -1, -1, fr.surface});
        if (b_edge_of_vertex.count(start_pt) || b_edge_of_vertex.count(other))
          throw RegionError("boundary point used by two B-edges");
        b_edge_of_vertex[start_pt] = e;
        b_edge_of_vertex[other] = e;
        break;
      }
      const auto& nb = at_point[other];
      int next = -1;
      for (int g : nb)
        if (!used[static_cast<std::size_t>(g)]) next = g;
      if (next < 0) throw RegionError("unterminated boundary walk at an internal arc");
      cur = next;
      pt = other;
    }
  }

  // Rotation systems and face tracing.
  const int V = static_cast<int>(verts.size());
  const int E = static_cast<int>(edges.size());
  std::vector<int> succ(static_cast<std::size_t>(2 * E), -1);
  auto dart_from = [&](int e, int v) { return edges[static_cast<std::size_t>(e)].tail == v ? 2 * e : 2 * e + 1; };
  for (int v = 0; v < V; ++v) {
    const auto& vx = verts[static_cast<std::size_t>(v)];
    const auto& segs = seg_edge[static_cast<std::size_t>(vx.slot)];
    std::vector<int> rot;
    if (vx.pos < 0) {
      rot = {2 * segs[0], 2 * segs[0] + 1};
    } else {
      const int n = static_cast<int>(segs.size());
      int next_seg = segs[static_cast<std::size_t>(vx.pos)];
      int prev_seg = segs[static_cast<std::size_t>((vx.pos + n - 1) % n)];
      if (!b_edge_of_vertex.count(v)) throw RegionError("arc endpoint without a B-edge");
      rot = {2 * next_seg, dart_from(chord_edge_of_vertex.at(v), v), 2 * prev_seg + 1,
             dart_from(b_edge_of_vertex.at(v), v)};
    }
    for (std::size_t k = 0; k < rot.size(); ++k) succ[static_cast<std::size_t>(rot[k])] = rot[(k + 1) % rot.size()];
  }
  for (int d = 0; d < 2 * E; ++d)
    if (succ[static_cast<std::size_t>(d)] < 0) throw RegionError("dangling dart in boundary map");
  std::vector<int> orbit(static_cast<std::size_t>(2 * E), -1);
  int W = 0;
  for (int d = 0; d < 2 * E; ++d) {
    if (orbit[static_cast<std::size_t>(d)] >= 0) continue;
    for (int x = d; orbit[static_cast<std::size_t>(x)] < 0; x = succ[static_cast<std::size_t>(x ^ 1)])
      orbit[static_cast<std::size_t>(x)] = W;
    ++W;
  }

  // Map components.
  detail::UnionFind comp;
  for (int v = 0; v < V; ++v) comp.make();
  for (const auto& e : edges) comp.unite(e.tail, e.head);
  std::set<int> roots;
  for (int v = 0; v < V; ++v) roots.insert(comp.find(v));
  const int C = static_cast<int>(roots.size());
  out.map_components = C;
  if (V - E + W != 2 * C)
    throw RegionError("ball " + std::to_string(ball) + ": B-edges are not realizable on the boundary sphere (V-E+F=" +
                      std::to_string(V - E + W) + ", expected " + std::to_string(2 * C) + ")");

  // Region items: disk faces and pants walks.
  detail::UnionFind uf;
  std::map<std::pair<int, int>, int> dface_item;  // (slot, face) -> item
  auto dface = [&](int slot, int face) {
    auto [it, fresh] = dface_item.try_emplace({slot, face}, -1);
    if (fresh) it->second = uf.make();
    return it->second;
  };
  std::vector<int> walk_item(static_cast<std::size_t>(W));
  for (int w = 0; w < W; ++w) walk_item[static_cast<std::size_t>(w)] = uf.make();
  detail::UnionFind pants;  // pants walks joined into true faces
  for (int w = 0; w < W; ++w) pants.make();
  std::vector<bool> is_pants(static_cast<std::size_t>(W), false);
  for (int e = 0; e < E; ++e) {
    const auto& ed = edges[static_cast<std::size_t>(e)];
    if (ed.type == EType::B) {
      is_pants[static_cast<std::size_t>(orbit[static_cast<std::size_t>(2 * e)])] = true;
      is_pants[static_cast<std::size_t>(orbit[static_cast<std::size_t>(2 * e + 1)])] = true;
    }
    if (ed.type != EType::Seg) continue;
    is_pants[static_cast<std::size_t>(orbit[static_cast<std::size_t>(2 * e)])] = true;
    int face = out.slots[static_cast<std::size_t>(ed.slot)].order.empty()
                   ? kRootFace
                   : out.slots[static_cast<std::size_t>(ed.slot)].face_after[static_cast<std::size_t>(ed.index)];
    uf.unite(dface(ed.slot, face), walk_item[static_cast<std::size_t>(orbit[static_cast<std::size_t>(2 * e)])]);
  }
  for (int i = 0; i < 3; ++i) dface(i, kRootFace);  // the root face exists on every slot
  if (C > 1) {
    std::map<int, int> base_walk;  // component root -> walk of its base segment
    for (int i = 0; i < 3; ++i) {
      const auto& segs = seg_edge[static_cast<std::size_t>(i)];
      int base = segs.back();
      int root = comp.find(edges[static_cast<std::size_t>(base)].tail);
      base_walk.try_emplace(root, orbit[static_cast<std::size_t>(2 * base)]);
    }
    int first = base_walk.begin()->second;
    for (auto [root, w] : base_walk) {
      uf.unite(walk_item[static_cast<std::size_t>(first)], walk_item[static_cast<std::size_t>(w)]);
      pants.unite(first, w);
    }
  }

  // Curves: chords and B-edges alternate around each vertex.
  std::map<int, int> inner_side_of;  // (slot*BIG + arc) -> arc_side index
  for (int k = 0; k < static_cast<int>(out.arc_sides.size()); ++k)
    if (out.arc_sides[static_cast<std::size_t>(k)].inner)
      inner_side_of[out.arc_sides[static_cast<std::size_t>(k)].slot * (s.num_arcs() + 1) +
                    out.arc_sides[static_cast<std::size_t>(k)].arc] = k;
  std::vector<int> vertex_curve(static_cast<std::size_t>(V), -1);
  for (int v0 = 0; v0 < V; ++v0) {
    if (verts[static_cast<std::size_t>(v0)].pos < 0 || vertex_curve[static_cast<std::size_t>(v0)] >= 0) continue;
    int c = static_cast<int>(out.curves.size());
    out.curves.emplace_back();
    out.curve_surface.push_back(edges[static_cast<std::size_t>(b_edge_of_vertex.at(v0))].surface);
    int v = v0;
    do {
      vertex_curve[static_cast<std::size_t>(v)] = c;
      const auto& ch = edges[static_cast<std::size_t>(chord_edge_of_vertex.at(v))];
      int w = ch.tail == v ? ch.head : ch.tail;
      vertex_curve[static_cast<std::size_t>(w)] = c;
      out.curves.back().push_back(inner_side_of.at(ch.slot * (s.num_arcs() + 1) + ch.index));
      const auto& b = edges[static_cast<std::size_t>(b_edge_of_vertex.at(w))];
      v = b.tail == w ? b.head : b.tail;
    } while (v != v0);
  }

  // Assemble regions.
  std::map<int, int> region_of_root;
  auto region_id = [&](int item) {
    auto [it, fresh] = region_of_root.try_emplace(uf.find(item), static_cast<int>(region_of_root.size()));
    if (fresh) {
      out.regions.emplace_back();
      out.regions.back().ball = ball;
      out.regions.back().id = it->second;
    }
    return it->second;
  };
  for (auto& [key, item] : dface_item) {
    int r = region_id(item);
    out.regions[static_cast<std::size_t>(r)].disk_faces.push_back(
        {key.first, FaceRef{out.slots[static_cast<std::size_t>(key.first)].side.disk, key.second}});
  }
  for (int w = 0; w < W; ++w)
    if (is_pants[static_cast<std::size_t>(w)]) region_id(walk_item[static_cast<std::size_t>(w)]);
  for (int k = 0; k < static_cast<int>(out.arc_sides.size()); ++k) {
    const auto& as = out.arc_sides[static_cast<std::size_t>(k)];
    int r = region_id(dface(as.slot, as.face.face));
    auto& reg = out.regions[static_cast<std::size_t>(r)];
    reg.arc_sides.push_back(k);
    if (std::find(reg.surfaces.begin(), reg.surfaces.end(), as.surface) == reg.surfaces.end())
      reg.surfaces.push_back(as.surface);
  }
  for (auto& reg : out.regions) std::sort(reg.surfaces.begin(), reg.surfaces.end());

  // Euler characteristic of every region boundary.
  for (auto& reg : out.regions) {
    std::set<int> curves_here;
    for (int k : reg.arc_sides) {
      const auto& as = out.arc_sides[static_cast<std::size_t>(k)];
      curves_here.insert(vertex_curve[static_cast<std::size_t>(endpoint_vertex.at({as.slot, {as.arc, true}}))]);
    }
    int v_count = 0, e_count = 0, f_count = 0;
    for (int v = 0; v < V; ++v) {
      const auto& vx = verts[static_cast<std::size_t>(v)];
      if (vx.pos < 0) {
        if (region_id(dface(vx.slot, kRootFace)) == reg.id) ++v_count;
      } else if (curves_here.count(vertex_curve[static_cast<std::size_t>(v)])) {
        ++v_count;
      }
    }
    for (int e = 0; e < E; ++e) {
      const auto& ed = edges[static_cast<std::size_t>(e)];
      if (ed.type == EType::Seg) {
        if (region_id(walk_item[static_cast<std::size_t>(orbit[static_cast<std::size_t>(2 * e)])]) == reg.id) ++e_count;
      } else if (curves_here.count(vertex_curve[static_cast<std::size_t>(ed.tail)])) {
        ++e_count;
      }
    }
    for (const auto& df : reg.disk_faces) {
      (void)df;
      ++f_count;
    }
    std::map<int, int> walks_per_face;
    for (int w = 0; w < W; ++w)
      if (is_pants[static_cast<std::size_t>(w)] && region_id(walk_item[static_cast<std::size_t>(w)]) == reg.id)
        ++walks_per_face[pants.find(w)];
    for (auto [face, walks] : walks_per_face) f_count += 2 - walks;
    reg.euler = v_count - e_count + f_count + static_cast<int>(curves_here.size());
    if (reg.euler != 2)
      throw RegionError("ball " + std::to_string(ball) + ": region " + std::to_string(reg.id) +
                        " boundary is not a sphere (chi=" + std::to_string(reg.euler) + ")");
  }
  if (static_cast<int>(out.regions.size()) != static_cast<int>(out.curves.size()) + 1)
    throw RegionError("ball " + std::to_string(ball) + ": " + std::to_string(out.curves.size()) + " curves but " +
                      std::to_string(out.regions.size()) + " regions");
  return out;
}

/// Regions on the side of curve c that contains the inner side of its first
/// chord. Regions and curves form a tree, so removing c splits it in two.
inline std::vector<bool> regions_beside(const BallRegions& br, int c) {
  const int R = static_cast<int>(br.regions.size());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(R));  // (region, curve)
  for (std::size_t k = 0; k < br.curves.size(); ++k) {
    int inner = br.curves[k].front();
    int r1 = br.region_of(inner), r2 = br.region_of(inner + 1);
    adj[static_cast<std::size_t>(r1)].push_back({r2, static_cast<int>(k)});
    adj[static_cast<std::size_t>(r2)].push_back({r1, static_cast<int>(k)});
  }
  int start = br.region_of(br.curves[static_cast<std::size_t>(c)].front());
  std::vector<bool> seen(static_cast<std::size_t>(R), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (auto [o, k] : adj[static_cast<std::size_t>(r)])
      if (k != c && !seen[static_cast<std::size_t>(o)]) {
        seen[static_cast<std::size_t>(o)] = true;
        stack.push_back(o);
      }
  }
  return seen;
}

/// Curves that cut off a part of the ball meeting a single slot. The surface
/// bounded by such a curve is parallel into that disk and can be pushed across
/// it, lowering |S∩𝒟|.
inline std::vector<int> disk_parallel_curves(const BallRegions& br) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(br.curves.size()); ++c) {
    auto side = regions_beside(br, c);
    std::array<std::set<int>, 2> slots;
    for (const auto& reg : br.regions)
      for (const auto& df : reg.disk_faces) slots[side[static_cast<std::size_t>(reg.id)] ? 0 : 1].insert(df.first);
    if (slots[0].size() <= 1 || slots[1].size() <= 1) out.push_back(c);
  }
  return out;
}

inline std::vector<BallRegions> complement_regions(const SurfaceComplex& s) {
  std::vector<BallRegions> out;
  for (int k = 0; k < s.handlebody.num_balls(); ++k) out.push_back(ball_regions(s, k));
  return out;
}

}  // namespace hsurf

#endif  // HSURF_REGIONS_HPP
