#ifndef HSURF_SURFACE_HPP
#define HSURF_SURFACE_HPP

// A surface in the handlebody as a complex of disk pieces. Each piece lies in
// one ps-ball and its boundary alternates D-edges (arcs on the disk system, or
// internal horizontal arcs inside a ps-ball) and B-edges on the handlebody
// boundary. Only the D-edges are stored; a B-edge follows every D-edge.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hsurf/handlebody.hpp"

namespace hsurf {

enum class PieceKind { Trivial, BoundaryCritical, Saddle };

inline const char* kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Trivial: return "trivial";
    case PieceKind::BoundaryCritical: return "boundary_critical";
    case PieceKind::Saddle: return "saddle";
  }
  return "?";
}

/// An arc of the surface on a disk of the system (disk >= 0), or an internal
/// horizontal arc inside one ps-ball (disk < 0, ball >= 0). Sibling order under
/// a common nesting parent is the order of the arcs in SurfaceComplex::arcs.
struct DiskArc {
  std::string name;
  int disk = -1;
  int ball = -1;
  int parent = -1;  // nesting parent on the same disk, -1 when outermost

  bool internal() const { return disk < 0; }
};

/// One D-edge of a piece boundary: which arc, which disk side (disk arcs only)
/// and whether the boundary runs from the arc's first to its second endpoint.
/// arc < 0 marks a free horizontal edge (only for a lone 2-disk cap).
struct DEdge {
  int arc = -1;
  Side side = Side::A;
  bool forward = true;

  bool free() const { return arc < 0; }
  friend bool operator==(const DEdge&, const DEdge&) = default;
};

struct DiskPiece {
  std::string name;
  int ball = -1;
  PieceKind kind = PieceKind::Trivial;
  int spine_crossings = 0;
  std::vector<DEdge> word;

  int n() const { return static_cast<int>(word.size()); }
  /// Valence of the critical vertex this piece contributes to the retract graph.
  int valence() const { return kind == PieceKind::Trivial ? 0 : n(); }
};

struct SurfaceComplex {
  Handlebody handlebody;
  std::vector<DiskArc> arcs;
  std::vector<DiskPiece> pieces;

  const DiskArc& arc(int i) const { return arcs.at(static_cast<std::size_t>(i)); }
  const DiskPiece& piece(int i) const { return pieces.at(static_cast<std::size_t>(i)); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  int num_pieces() const { return static_cast<int>(pieces.size()); }
};

/// Where an arc is used: piece index and position in that piece's word.
struct ArcUse {
  int piece = -1;
  int index = -1;
};

/// For every arc, the (up to two) piece edges referencing it. Disk arcs list
/// the side-A use first.
inline std::vector<std::vector<ArcUse>> arc_uses(const SurfaceComplex& s) {
  std::vector<std::vector<ArcUse>> uses(s.arcs.size());
  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& w = s.piece(p).word;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const auto& e = w[static_cast<std::size_t>(i)];
      if (e.free() || e.arc >= s.num_arcs()) continue;
      uses[static_cast<std::size_t>(e.arc)].push_back({p, i});
    }
  }
  for (std::size_t a = 0; a < uses.size(); ++a) {
    if (s.arcs[a].internal() || uses[a].size() != 2) continue;
    const auto& first = uses[a][0];
    if (s.piece(first.piece).word[static_cast<std::size_t>(first.index)].side == Side::B)
      std::swap(uses[a][0], uses[a][1]);
  }
  return uses;
}

/// Children of every arc and the outermost arcs of every disk, in sibling order.
struct NestingForest {
  std::vector<std::vector<int>> roots;     // per disk
  std::vector<std::vector<int>> children;  // per arc

  static NestingForest of(const SurfaceComplex& s) {
    NestingForest f;
    f.roots.resize(static_cast<std::size_t>(s.handlebody.num_disks()));
    f.children.resize(s.arcs.size());
    for (int a = 0; a < s.num_arcs(); ++a) {
      const auto& arc = s.arc(a);
      if (arc.internal() || arc.disk >= s.handlebody.num_disks()) continue;
      if (arc.parent < 0) f.roots[static_cast<std::size_t>(arc.disk)].push_back(a);
      else if (arc.parent < s.num_arcs()) f.children[static_cast<std::size_t>(arc.parent)].push_back(a);
    }
    return f;
  }
};

inline bool is_ancestor(const SurfaceComplex& s, int ancestor, int arc) {
  for (int cur = s.arc(arc).parent, guard = 0; cur >= 0 && guard <= s.num_arcs(); cur = s.arc(cur).parent, ++guard)
    if (cur == ancestor) return true;
  return false;
}

inline bool nested(const SurfaceComplex& s, int a, int b) { return is_ancestor(s, a, b) || is_ancestor(s, b, a); }

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Severity { Error, Note };
  Severity severity = Severity::Error;
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> entries;

  bool ok() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const Violation& v) { return v.severity == Violation::Severity::Error; });
  }
  std::vector<std::string> errors() const {
    std::vector<std::string> out;
    for (const auto& v : entries)
      if (v.severity == Violation::Severity::Error) out.push_back(v.where + ": " + v.message);
    return out;
  }
  bool has(const std::string& needle) const {
    return std::any_of(entries.begin(), entries.end(), [&](const Violation& v) {
      return v.message.find(needle) != std::string::npos;
    });
  }
};

/// Checks the complex against every structural invariant. Pure; never mutates.
inline ValidationReport validate(const SurfaceComplex& s) {
  ValidationReport r;
  auto err = [&](std::string where, std::string msg) {
    r.entries.push_back({Violation::Severity::Error, std::move(where), std::move(msg)});
  };
  auto note = [&](std::string where, std::string msg) {
    r.entries.push_back({Violation::Severity::Note, std::move(where), std::move(msg)});
  };
  const auto& hb = s.handlebody;
  if (s.pieces.empty()) {
    err("surface", "empty surface");
    return r;
  }

  for (int a = 0; a < s.num_arcs(); ++a) {
    const auto& arc = s.arc(a);
    std::string where = "arc " + arc.name;
    if (arc.internal()) {
      if (arc.ball < 0 || arc.ball >= hb.num_balls()) err(where, "internal arc in unknown ps-ball");
      if (arc.parent >= 0) err(where, "internal arc cannot be nested");
      continue;
    }
    if (arc.disk >= hb.num_disks()) {
      err(where, "unknown disk");
      continue;
    }
    if (arc.parent >= s.num_arcs() || (arc.parent >= 0 && (s.arc(arc.parent).internal() ||
                                                            s.arc(arc.parent).disk != arc.disk)))
      err(where, "nesting parent must be an arc on the same disk");
  }
  // Nesting cycles.
  for (int a = 0; a < s.num_arcs(); ++a) {
    int cur = a, steps = 0;
    while (cur >= 0 && cur < s.num_arcs() && steps <= s.num_arcs()) {
      cur = s.arc(cur).parent;
      ++steps;
    }
    if (steps > s.num_arcs()) err("arc " + s.arc(a).name, "nesting cycle");
  }

  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& pc = s.piece(p);
    std::string where = "piece " + pc.name;
    if (pc.ball < 0 || pc.ball >= hb.num_balls()) {
      err(where, "unknown ps-ball");
      continue;
    }
    if (pc.word.empty()) err(where, "boundary word has no D-edges");
    if (pc.spine_crossings < 0) err(where, "negative spine crossings");
    for (const auto& e : pc.word) {
      if (e.free()) {
        if (pc.n() != 1) err(where, "free horizontal edge only allowed on a lone 2-disk");
        continue;
      }
      if (e.arc >= s.num_arcs()) {
        err(where, "dangling arc reference");
        continue;
      }
      const auto& arc = s.arc(e.arc);
      if (arc.internal()) {
        if (arc.ball != pc.ball) err(where, "internal arc " + arc.name + " lies in another ps-ball");
      } else if (arc.disk < hb.num_disks() && hb.ball_of({arc.disk, e.side}) != pc.ball) {
        err(where, "arc " + arc.name + " side " + side_char(e.side) + " does not face this ps-ball");
      }
    }
    const int n = pc.n();
    switch (pc.kind) {
      case PieceKind::Trivial:
        if (n != 2) err(where, "trivial piece must be a 4-disk (n = 2)");
        break;
      case PieceKind::BoundaryCritical:
        if (n < 1 || n > 3) err(where, "boundary-critical piece must have n in {1,2,3}");
        break;
      case PieceKind::Saddle:
        if (n < 4 || n % 2 != 0) err(where, "saddle must have even n >= 4");
        break;
    }
    if (pc.kind == PieceKind::Saddle && n >= 5 && pc.spine_crossings == 0)
      note(where, "spine-avoiding saddle with N >= 5 (standard position requires a spine crossing)");
  }

  auto uses = arc_uses(s);
  for (int a = 0; a < s.num_arcs(); ++a) {
    const auto& arc = s.arc(a);
    const auto& u = uses[static_cast<std::size_t>(a)];
    std::string where = "arc " + arc.name;
    if (u.size() != 2) {
      err(where, "arc referenced by " + std::to_string(u.size()) + " piece edges (expected 2)");
      continue;
    }
    if (!arc.internal()) {
      const auto& e0 = s.piece(u[0].piece).word[static_cast<std::size_t>(u[0].index)];
      const auto& e1 = s.piece(u[1].piece).word[static_cast<std::size_t>(u[1].index)];
      if (e0.side == e1.side) err(where, "arc must be used once on each side of its disk");
    } else if (u[0].piece == u[1].piece && u[0].index == u[1].index) {
      err(where, "internal arc glued to itself");
    }
  }

  auto forest = NestingForest::of(s);
  for (int a = 0; a < s.num_arcs(); ++a)
    if (forest.children[static_cast<std::size_t>(a)].size() > 1)
      note("arc " + s.arc(a).name, "branching nesting: maximal arc sets taken as chains");
  return r;
}

inline int euler_characteristic(const SurfaceComplex& s) { return s.num_pieces() - s.num_arcs(); }

inline int disk_intersection_count(const SurfaceComplex& s) {
  return static_cast<int>(std::count_if(s.arcs.begin(), s.arcs.end(), [](const DiskArc& a) { return !a.internal(); }));
}

/// Component id per piece of the piece-adjacency graph (edge per arc).
inline std::vector<int> piece_components(const SurfaceComplex& s, bool internal_only = false) {
  std::vector<int> parent(s.pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto uses = arc_uses(s);
  for (int a = 0; a < s.num_arcs(); ++a) {
    if (internal_only && !s.arc(a).internal()) continue;
    const auto& u = uses[static_cast<std::size_t>(a)];
    if (u.size() != 2) continue;
    int x = detail::find_root(parent, u[0].piece), y = detail::find_root(parent, u[1].piece);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }
  std::map<int, int> relabel;
  std::vector<int> comp(s.pieces.size());
  for (int p = 0; p < s.num_pieces(); ++p) {
    int root = detail::find_root(parent, p);
    auto it = relabel.try_emplace(root, static_cast<int>(relabel.size())).first;
    comp[static_cast<std::size_t>(p)] = it->second;
  }
  return comp;
}

inline int component_count(const SurfaceComplex& s) {
  auto c = piece_components(s);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Ball-surface id per piece: components of S inside one ps-ball, i.e. pieces
/// joined through internal arcs only.
inline std::vector<int> ball_surfaces(const SurfaceComplex& s) { return piece_components(s, true); }

/// Orientability by co-orientation propagation: two pieces sharing an arc must
/// traverse it in opposite directions once one of them is flipped. The visit
/// order (a permutation of piece indices used to seed and expand the search)
/// does not affect the answer.
inline bool orientable(const SurfaceComplex& s, const std::vector<int>& visit_order = {}) {
  auto uses = arc_uses(s);
  std::vector<std::vector<std::pair<int, int>>> adj(s.pieces.size());  // (neighbour, parity)
  for (int a = 0; a < s.num_arcs(); ++a) {
    const auto& u = uses[static_cast<std::size_t>(a)];
    if (u.size() != 2) continue;
    bool f0 = s.piece(u[0].piece).word[static_cast<std::size_t>(u[0].index)].forward;
    bool f1 = s.piece(u[1].piece).word[static_cast<std::size_t>(u[1].index)].forward;
    int parity = (f0 == f1) ? 1 : 0;  // same direction: one of the two must flip
    adj[static_cast<std::size_t>(u[0].piece)].push_back({u[1].piece, parity});
    adj[static_cast<std::size_t>(u[1].piece)].push_back({u[0].piece, parity});
  }
  std::vector<int> order = visit_order;
  if (order.size() != s.pieces.size()) {
    order.resize(s.pieces.size());
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> flip(s.pieces.size(), -1);
  for (int start : order) {
    if (flip[static_cast<std::size_t>(start)] >= 0) continue;
    flip[static_cast<std::size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (auto [q, parity] : adj[static_cast<std::size_t>(p)]) {
        int want = flip[static_cast<std::size_t>(p)] ^ parity;
        if (flip[static_cast<std::size_t>(q)] < 0) {
          flip[static_cast<std::size_t>(q)] = want;
          stack.push_back(q);
        } else if (flip[static_cast<std::size_t>(q)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

struct Census {
  int disk_intersections = 0;       // |S ∩ D|
  std::map<int, int> critical_by_size;  // 2x -> number of critical 2x-disks
  int components = 0;
  bool orientable = true;

  int count(int edges) const {
    auto it = critical_by_size.find(edges);
    return it == critical_by_size.end() ? 0 : it->second;
  }
};

inline Census census(const SurfaceComplex& s) {
  Census c;
  c.disk_intersections = disk_intersection_count(s);
  for (const auto& p : s.pieces)
    if (p.kind != PieceKind::Trivial) ++c.critical_by_size[2 * p.n()];
  c.components = component_count(s);
  c.orientable = orientable(s);
  return c;
}

/// An arc is inessential when cutting the surface along it splits off a disk.
inline std::vector<bool> essential_arcs(const SurfaceComplex& s) {
  auto uses = arc_uses(s);
  std::vector<bool> out(s.arcs.size(), true);
  for (int cut = 0; cut < s.num_arcs(); ++cut) {
    const auto& cu = uses[static_cast<std::size_t>(cut)];
    if (cu.size() != 2) continue;
    // Flood from each endpoint piece without the cut arc; a side that does not
    // reach the other and is a tree (pieces - arcs = 1) is a disk.
    auto flood = [&](int start) {
      std::vector<bool> seen(s.pieces.size(), false);
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = true;
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const auto& e : s.piece(p).word) {
          if (e.free() || e.arc == cut) continue;
          for (const auto& u : uses[static_cast<std::size_t>(e.arc)])
            if (!seen[static_cast<std::size_t>(u.piece)]) {
              seen[static_cast<std::size_t>(u.piece)] = true;
              stack.push_back(u.piece);
            }
        }
      }
      return seen;
    };
    auto side = flood(cu[0].piece);
    if (side[static_cast<std::size_t>(cu[1].piece)]) continue;  // non-separating
    for (const auto& sd : {side, flood(cu[1].piece)}) {
      int pieces = 0, arcs = 0;
      for (int p = 0; p < s.num_pieces(); ++p)
        if (sd[static_cast<std::size_t>(p)]) ++pieces;
      for (int a = 0; a < s.num_arcs(); ++a) {
        if (a == cut) continue;
        const auto& u = uses[static_cast<std::size_t>(a)];
        if (!u.empty() && sd[static_cast<std::size_t>(u[0].piece)]) ++arcs;
      }
      if (pieces - arcs == 1) out[static_cast<std::size_t>(cut)] = false;
    }
  }
  return out;
}

inline int total_spine_crossings(const SurfaceComplex& s) {
  int t = 0;
  for (const auto& p : s.pieces) t += p.spine_crossings;
  return t;
}

/// Kind implied by a D-edge count when no critical annotation is forced.
inline std::optional<PieceKind> default_kind(int n) {
  if (n == 2) return PieceKind::Trivial;
  if (n == 1 || n == 3) return PieceKind::BoundaryCritical;
  if (n >= 4 && n % 2 == 0) return PieceKind::Saddle;
  return std::nullopt;
}

inline int find_arc(const SurfaceComplex& s, const std::string& name) {
  for (int a = 0; a < s.num_arcs(); ++a)
    if (s.arc(a).name == name) return a;
  return -1;
}

inline int find_piece(const SurfaceComplex& s, const std::string& name) {
  for (int p = 0; p < s.num_pieces(); ++p)
    if (s.piece(p).name == name) return p;
  return -1;
}

}  // namespace hsurf

#endif  // HSURF_SURFACE_HPP
