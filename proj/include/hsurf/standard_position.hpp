#ifndef HSURF_STANDARD_POSITION_HPP
#define HSURF_STANDARD_POSITION_HPP

// Complexity of a surface complex and the moves that lower it.
//
// Moves:
//   compress  band move across the strip between an outer arc and its only
//             child on one disk side, where one saddle touches both arcs
//   merge     join two pieces across an internal arc so that the result is a
//             saddle with such a pair, then compress
//   remove    split a spine-avoiding saddle with two sibling arcs on one disk
//             side along a new internal arc

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsurf/surface.hpp"

namespace hsurf {

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root-to-leaf chain in the nesting forest of one disk, seen from one slot.
struct MaximalArcSet {
  int ball = -1;
  int slot = -1;
  std::vector<int> arcs;  // outermost first
  int f() const { return static_cast<int>(arcs.size()); }
};

inline std::vector<MaximalArcSet> maximal_arc_sets(const SurfaceComplex& s) {
  const auto forest = NestingForest::of(s);
  std::vector<MaximalArcSet> out;
  std::function<void(int, std::vector<int>&, int, int)> walk = [&](int a, std::vector<int>& chain, int ball, int slot) {
    chain.push_back(a);
    const auto& ch = forest.children[static_cast<std::size_t>(a)];
    if (ch.empty()) out.push_back({ball, slot, chain});
    for (int c : ch) walk(c, chain, ball, slot);
    chain.pop_back();
  };
  const auto& hb = s.handlebody;
  for (int k = 0; k < hb.num_balls(); ++k)
    for (int x = 0; x < 3; ++x) {
      const auto ds = hb.ball(k).slots[static_cast<std::size_t>(x)];
      std::vector<int> chain;
      for (int r : forest.roots[static_cast<std::size_t>(ds.disk)]) walk(r, chain, k, x);
    }
  return out;
}

/// (|S∩𝒟|, |f⁻¹(L)|, …, |f⁻¹(2)|, |𝒟_ms|), compared lexicographically with
/// histograms aligned at f = 2 and padded at the high end.
struct ComplexityTuple {
  int intersections = 0;
  std::vector<int> by_f;  // by_f[f] for f >= 2; entries 0 and 1 unused
  int movable_saddles = 0;

  int largest_f() const {
    for (int f = static_cast<int>(by_f.size()) - 1; f >= 2; --f)
      if (by_f[static_cast<std::size_t>(f)] > 0) return f;
    return 1;
  }
  int count(int f) const {
    return f >= 0 && f < static_cast<int>(by_f.size()) ? by_f[static_cast<std::size_t>(f)] : 0;
  }
  /// Histogram in descending f order, from the largest f down to 2.
  std::vector<int> histogram() const {
    std::vector<int> out;
    for (int f = largest_f(); f >= 2; --f) out.push_back(count(f));
    return out;
  }

  friend std::strong_ordering operator<=>(const ComplexityTuple& a, const ComplexityTuple& b) {
    if (auto c = a.intersections <=> b.intersections; c != 0) return c;
    const int top = std::max(a.largest_f(), b.largest_f());
    for (int f = top; f >= 2; --f)
      if (auto c = a.count(f) <=> b.count(f); c != 0) return c;
    return a.movable_saddles <=> b.movable_saddles;
  }
  friend bool operator==(const ComplexityTuple& a, const ComplexityTuple& b) { return (a <=> b) == 0; }

  std::string str() const {
    std::ostringstream out;
    out << "(" << intersections << ", [";
    auto h = histogram();
    for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << h[i];
    out << "], " << movable_saddles << ")";
    return out.str();
  }
};

/// A saddle touching two arcs on the same disk side.
struct MovableWitness {
  int piece = -1;
  int ball = -1;
  int slot = -1;
  int outer_edge = -1, inner_edge = -1;  // positions in the piece word
  int outer_arc = -1, inner_arc = -1;
  bool nested = false;     // inner-outer pair; otherwise siblings or unrelated
  bool outermost = false;  // inner is the only child of outer
};

/// Movable saddles: a saddle with a nested pair of arcs on one disk side, or a
/// spine-avoiding saddle with n >= 6 and any two arcs on one disk side. A
/// spine-avoiding 8-disk (n = 4) whose same-side arcs are not nested cannot be
/// moved and is not reported.
inline std::vector<MovableWitness> find_movable_saddles(const SurfaceComplex& s) {
  std::vector<MovableWitness> out;
  const auto forest = NestingForest::of(s);
  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& pc = s.piece(p);
    if (pc.kind != PieceKind::Saddle) continue;
    for (int i = 0; i < pc.n(); ++i)
      for (int j = i + 1; j < pc.n(); ++j) {
        const auto& ei = pc.word[static_cast<std::size_t>(i)];
        const auto& ej = pc.word[static_cast<std::size_t>(j)];
        if (ei.free() || ej.free() || s.arc(ei.arc).internal() || s.arc(ej.arc).internal()) continue;
        if (s.arc(ei.arc).disk != s.arc(ej.arc).disk || ei.side != ej.side) continue;
        MovableWitness w;
        w.piece = p;
        w.ball = pc.ball;
        w.slot = s.handlebody.slot_of({s.arc(ei.arc).disk, ei.side});
        if (is_ancestor(s, ei.arc, ej.arc) || is_ancestor(s, ej.arc, ei.arc)) {
          bool i_outer = is_ancestor(s, ei.arc, ej.arc);
          w.outer_edge = i_outer ? i : j;
          w.inner_edge = i_outer ? j : i;
          w.outer_arc = i_outer ? ei.arc : ej.arc;
          w.inner_arc = i_outer ? ej.arc : ei.arc;
          w.nested = true;
          w.outermost = s.arc(w.inner_arc).parent == w.outer_arc &&
                        forest.children[static_cast<std::size_t>(w.outer_arc)].size() == 1;
        } else {
          if (pc.spine_crossings != 0 || pc.n() < 6) continue;
          w.outer_edge = i;
          w.inner_edge = j;
          w.outer_arc = ei.arc;
          w.inner_arc = ej.arc;
        }
        out.push_back(w);
      }
  }
  return out;
}

inline int movable_saddle_count(const SurfaceComplex& s) {
  std::set<int> pieces;
  for (const auto& w : find_movable_saddles(s)) pieces.insert(w.piece);
  return static_cast<int>(pieces.size());
}

inline ComplexityTuple complexity(const SurfaceComplex& s) {
  ComplexityTuple t;
  t.intersections = disk_intersection_count(s);
  for (const auto& set : maximal_arc_sets(s)) {
    if (set.f() < 2) continue;
    if (static_cast<int>(t.by_f.size()) <= set.f()) t.by_f.resize(static_cast<std::size_t>(set.f()) + 1, 0);
    ++t.by_f[static_cast<std::size_t>(set.f())];
  }
  t.movable_saddles = movable_saddle_count(s);
  return t;
}

namespace detail {

/// Mutable copy of a complex with deletions and explicit sibling orders;
/// finish() re-indexes everything.
struct Draft {
  SurfaceComplex s;
  std::vector<bool> arc_dead, piece_dead;
  std::map<std::pair<int, int>, std::vector<int>> sibling_order;  // (disk, parent) -> children

  explicit Draft(const SurfaceComplex& src)
      : s(src), arc_dead(src.arcs.size(), false), piece_dead(src.pieces.size(), false) {}

  int add_arc(DiskArc a) {
    s.arcs.push_back(std::move(a));
    arc_dead.push_back(false);
    return s.num_arcs() - 1;
  }
  int add_piece(DiskPiece p) {
    s.pieces.push_back(std::move(p));
    piece_dead.push_back(false);
    return s.num_pieces() - 1;
  }
  std::string fresh_arc_name(const std::string& base) const {
    std::string name = base;
    for (int k = 2; std::any_of(s.arcs.begin(), s.arcs.end(), [&](const DiskArc& a) { return a.name == name; }); ++k)
      name = base + "." + std::to_string(k);
    return name;
  }
  std::string fresh_piece_name(const std::string& base) const {
    std::string name = base;
    for (int k = 2;
         std::any_of(s.pieces.begin(), s.pieces.end(), [&](const DiskPiece& p) { return p.name == name; }); ++k)
      name = base + "." + std::to_string(k);
    return name;
  }

  /// Gives every piece a kind implied by n; odd n >= 5 is cut into a 6-disk
  /// and a saddle along a new internal arc.
  void rekind(int p) {
    auto& pc = s.pieces[static_cast<std::size_t>(p)];
    const int n = pc.n();
    if (auto k = default_kind(n)) {
      pc.kind = *k;
      return;
    }
    int i = add_arc({fresh_arc_name(pc.name + "~i"), -1, pc.ball, -1});
    auto& piece = s.pieces[static_cast<std::size_t>(p)];
    DiskPiece tri{fresh_piece_name(piece.name + "~v"), piece.ball, PieceKind::BoundaryCritical, 0,
                  {piece.word[0], piece.word[1], DEdge{i, Side::A, true}}};
    std::vector<DEdge> rest{DEdge{i, Side::A, false}};
    rest.insert(rest.end(), piece.word.begin() + 2, piece.word.end());
    piece.word = rest;
    piece.kind = PieceKind::Saddle;
    add_piece(tri);
  }

  SurfaceComplex finish() const {
    SurfaceComplex out;
    out.handlebody = s.handlebody;
    // Children lists in vector order, then explicit overrides.
    std::map<std::pair<int, int>, std::vector<int>> kids;
    for (int a = 0; a < s.num_arcs(); ++a) {
      if (arc_dead[static_cast<std::size_t>(a)] || s.arc(a).internal()) continue;
      kids[{s.arc(a).disk, s.arc(a).parent}].push_back(a);
    }
    for (const auto& [key, order] : sibling_order) kids[key] = order;
    std::vector<int> new_index(s.arcs.size(), -1);
    std::function<void(int, int)> emit = [&](int disk, int parent) {
      auto it = kids.find({disk, parent});
      if (it == kids.end()) return;
      for (int a : it->second) {
        new_index[static_cast<std::size_t>(a)] = out.num_arcs();
        DiskArc arc = s.arc(a);
        arc.parent = parent;
        out.arcs.push_back(arc);
        emit(disk, a);
      }
    };
    for (int d = 0; d < s.handlebody.num_disks(); ++d) emit(d, -1);
    for (int a = 0; a < s.num_arcs(); ++a)
      if (!arc_dead[static_cast<std::size_t>(a)] && s.arc(a).internal()) {
        new_index[static_cast<std::size_t>(a)] = out.num_arcs();
        out.arcs.push_back(s.arc(a));
      }
    for (auto& arc : out.arcs)
      if (arc.parent >= 0) arc.parent = new_index[static_cast<std::size_t>(arc.parent)];
    for (int p = 0; p < s.num_pieces(); ++p) {
      if (piece_dead[static_cast<std::size_t>(p)]) continue;
      DiskPiece pc = s.piece(p);
      for (auto& e : pc.word)
        if (!e.free()) {
          e.arc = new_index[static_cast<std::size_t>(e.arc)];
          if (e.arc < 0) throw MoveError("move left a reference to a removed arc");
        }
      out.pieces.push_back(std::move(pc));
    }
    return out;
  }
};

inline std::vector<int> children_in_order(const Draft& d, int disk, int parent) {
  auto it = d.sibling_order.find({disk, parent});
  if (it != d.sibling_order.end()) return it->second;
  std::vector<int> out;
  for (int a = 0; a < d.s.num_arcs(); ++a)
    if (!d.arc_dead[static_cast<std::size_t>(a)] && !d.s.arc(a).internal() && d.s.arc(a).disk == disk &&
        d.s.arc(a).parent == parent)
      out.push_back(a);
  return out;
}

inline int other_use(const std::vector<std::vector<ArcUse>>& uses, int arc, int piece, int index) {
  for (int k = 0; k < 2; ++k) {
    const auto& u = uses[static_cast<std::size_t>(arc)][static_cast<std::size_t>(k)];
    if (u.piece != piece || u.index != index) return k;
  }
  throw MoveError("arc glued to itself");
}

/// Word of a piece read cyclically from position `from` (inclusive) for `count` edges.
inline std::vector<DEdge> cyclic_run(const std::vector<DEdge>& w, int from, int count) {
  std::vector<DEdge> out;
  const int n = static_cast<int>(w.size());
  for (int k = 0; k < count; ++k) out.push_back(w[static_cast<std::size_t>(((from + k) % n + n) % n)]);
  return out;
}

/// The same edges traversed the other way round.
inline std::vector<DEdge> reversed(std::vector<DEdge> w) {
  std::reverse(w.begin(), w.end());
  for (auto& e : w) e.forward = !e.forward;
  return w;
}

}  // namespace detail

/// Band move at an outermost nested pair (outer arc a, its only child b) of a
/// saddle on one disk side. The saddle is cut into two pieces, the pieces on
/// the far side of a and b are joined by a band, and a, b are replaced by
/// (a.start, b.start) and (b.end, a.end), which become siblings under a's
/// parent with b's children between them.
inline SurfaceComplex boundary_compress(const SurfaceComplex& s, const MovableWitness& w) {
  if (w.piece < 0 || w.piece >= s.num_pieces()) throw MoveError("unknown piece");
  const auto& p = s.piece(w.piece);
  if (p.kind != PieceKind::Saddle) throw MoveError("piece " + p.name + " is not a saddle");
  if (!w.nested) throw MoveError("arcs " + s.arc(w.outer_arc).name + ", " + s.arc(w.inner_arc).name + " are not nested");
  const auto forest = NestingForest::of(s);
  if (s.arc(w.inner_arc).parent != w.outer_arc || forest.children[static_cast<std::size_t>(w.outer_arc)].size() != 1)
    throw MoveError("witness is not outermost: other arcs nest between " + s.arc(w.outer_arc).name + " and " +
                    s.arc(w.inner_arc).name);
  if (p.spine_crossings != 0) throw MoveError("saddle " + p.name + " crosses the spine");
  const int i = w.outer_edge, j = w.inner_edge;
  const auto& ei = p.word.at(static_cast<std::size_t>(i));
  const auto& ej = p.word.at(static_cast<std::size_t>(j));
  if (ei.arc != w.outer_arc || ej.arc != w.inner_arc || ei.side != ej.side)
    throw MoveError("witness does not match the piece word");
  if (ei.forward == ej.forward) throw MoveError("saddle runs along both arcs in the same direction");

  const auto uses = arc_uses(s);
  const int ua = detail::other_use(uses, ei.arc, w.piece, i);
  const int ub = detail::other_use(uses, ej.arc, w.piece, j);
  const auto qa_use = uses[static_cast<std::size_t>(ei.arc)][static_cast<std::size_t>(ua)];
  const auto qb_use = uses[static_cast<std::size_t>(ej.arc)][static_cast<std::size_t>(ub)];
  if (qa_use.piece == qb_use.piece) throw MoveError("band would join a piece to itself");
  if (qa_use.piece == w.piece || qb_use.piece == w.piece) throw MoveError("saddle meets itself across the disk");

  detail::Draft d(s);
  const int a = w.outer_arc, b = w.inner_arc;
  const auto& arc_a = s.arc(a);
  const Side side = ei.side, far = opposite(side);
  const int a1 = d.add_arc({d.fresh_arc_name(arc_a.name + "~" + s.arc(b).name), arc_a.disk, -1, arc_a.parent});
  const int b1 = d.add_arc({d.fresh_arc_name(s.arc(b).name + "~" + arc_a.name), arc_a.disk, -1, arc_a.parent});
  // Sibling order under a's parent: a -> a1, b's children, b1.
  auto sib = detail::children_in_order(d, arc_a.disk, arc_a.parent);
  std::vector<int> order;
  for (int x : sib) {
    if (x == a1 || x == b1) continue;
    if (x != a) {
      order.push_back(x);
      continue;
    }
    order.push_back(a1);
    for (int c : forest.children[static_cast<std::size_t>(b)]) order.push_back(c);
    order.push_back(b1);
  }
  d.sibling_order[{arc_a.disk, arc_a.parent}] = order;
  for (int c : forest.children[static_cast<std::size_t>(b)]) d.s.arcs[static_cast<std::size_t>(c)].parent = arc_a.parent;
  d.arc_dead[static_cast<std::size_t>(a)] = true;
  d.arc_dead[static_cast<std::size_t>(b)] = true;

  // Split the saddle: p1 = edges strictly after i up to j, plus the new edge N1;
  // p2 = edges strictly after j up to i, plus N2.
  const int n = p.n();
  const int len1 = ((j - i) % n + n) % n - 1;
  const int len2 = n - 2 - len1;
  const bool fi = ei.forward;
  DEdge n1 = fi ? DEdge{b1, side, true} : DEdge{a1, side, false};
  DEdge n2 = fi ? DEdge{a1, side, true} : DEdge{b1, side, false};
  auto w1 = detail::cyclic_run(p.word, i + 1, len1);
  w1.push_back(n1);
  auto w2 = detail::cyclic_run(p.word, j + 1, len2);
  w2.push_back(n2);

  // Band on the far side: [M1, rest of q_b, M2, rest of q_a]. The rest of q_b
  // runs between b's endpoints and is read backwards when q_a and q_b cross
  // their arcs in the same direction.
  const auto& qa = s.piece(qa_use.piece);
  const auto& qb = s.piece(qb_use.piece);
  const bool fwd_a = qa.word[static_cast<std::size_t>(qa_use.index)].forward;
  const bool fwd_b = qb.word[static_cast<std::size_t>(qb_use.index)].forward;
  DEdge m1 = fwd_a ? DEdge{a1, far, true} : DEdge{b1, far, false};
  DEdge m2 = fwd_a ? DEdge{b1, far, true} : DEdge{a1, far, false};
  std::vector<DEdge> wq{m1};
  auto rb = detail::cyclic_run(qb.word, qb_use.index + 1, qb.n() - 1);
  if (fwd_a == fwd_b) rb = detail::reversed(rb);
  wq.insert(wq.end(), rb.begin(), rb.end());
  wq.push_back(m2);
  auto ra = detail::cyclic_run(qa.word, qa_use.index + 1, qa.n() - 1);
  wq.insert(wq.end(), ra.begin(), ra.end());

  auto& piece_p = d.s.pieces[static_cast<std::size_t>(w.piece)];
  const std::string pname = piece_p.name;
  piece_p.word = w1;
  const int p2 = d.add_piece({d.fresh_piece_name(pname + "'"), p.ball, PieceKind::Saddle, 0, w2});
  auto& piece_q = d.s.pieces[static_cast<std::size_t>(qa_use.piece)];
  piece_q.word = wq;
  piece_q.spine_crossings = qa.spine_crossings + qb.spine_crossings;
  d.piece_dead[static_cast<std::size_t>(qb_use.piece)] = true;
  d.rekind(w.piece);
  d.rekind(p2);
  d.rekind(qa_use.piece);
  return d.finish();
}

/// Two pieces of one ps-ball joined by an internal arc, one touching an outer
/// arc and the other its only child on the same disk side.
struct MergeWitness {
  int internal_arc = -1;
  int piece_outer = -1, piece_inner = -1;
  int outer_arc = -1, inner_arc = -1;
};

inline std::vector<MergeWitness> find_merge_pairs(const SurfaceComplex& s) {
  std::vector<MergeWitness> out;
  const auto uses = arc_uses(s);
  const auto forest = NestingForest::of(s);
  for (int i = 0; i < s.num_arcs(); ++i) {
    if (!s.arc(i).internal()) continue;
    const auto& u = uses[static_cast<std::size_t>(i)];
    if (u.size() != 2 || u[0].piece == u[1].piece) continue;
    for (int flip = 0; flip < 2; ++flip) {
      int p = u[static_cast<std::size_t>(flip)].piece, q = u[static_cast<std::size_t>(1 - flip)].piece;
      for (const auto& e : s.piece(p).word) {
        if (e.free() || s.arc(e.arc).internal()) continue;
        const auto& kids = forest.children[static_cast<std::size_t>(e.arc)];
        if (kids.size() != 1) continue;
        for (const auto& f : s.piece(q).word)
          if (f.arc == kids[0] && f.side == e.side) out.push_back({i, p, q, e.arc, f.arc});
      }
    }
  }
  return out;
}

/// Joins the two pieces across the internal arc and compresses the resulting
/// saddle at the witnessed pair.
inline SurfaceComplex merge_vertices(const SurfaceComplex& s, const MergeWitness& m) {
  const auto uses = arc_uses(s);
  if (m.internal_arc < 0 || m.internal_arc >= s.num_arcs() || !s.arc(m.internal_arc).internal())
    throw MoveError("merge needs an internal arc");
  const auto& u = uses[static_cast<std::size_t>(m.internal_arc)];
  if (u.size() != 2 || u[0].piece == u[1].piece) throw MoveError("internal arc does not join two pieces");
  const auto& up = u[0].piece == m.piece_outer ? u[0] : u[1];
  const auto& uq = u[0].piece == m.piece_outer ? u[1] : u[0];
  if (up.piece != m.piece_outer || uq.piece != m.piece_inner) throw MoveError("pieces do not meet at the arc");
  const auto& p = s.piece(up.piece);
  const auto& q = s.piece(uq.piece);
  std::vector<DEdge> word = detail::cyclic_run(p.word, up.index + 1, p.n() - 1);
  auto rq = detail::cyclic_run(q.word, uq.index + 1, q.n() - 1);
  if (p.word[static_cast<std::size_t>(up.index)].forward == q.word[static_cast<std::size_t>(uq.index)].forward)
    rq = detail::reversed(rq);
  word.insert(word.end(), rq.begin(), rq.end());
  const int n = static_cast<int>(word.size());
  if (n < 4 || n % 2 != 0) throw MoveError("merged piece would not be a saddle");
  if (p.spine_crossings + q.spine_crossings != 0) throw MoveError("merged piece crosses the spine");

  detail::Draft d(s);
  auto& merged = d.s.pieces[static_cast<std::size_t>(up.piece)];
  merged.word = word;
  merged.kind = PieceKind::Saddle;
  d.piece_dead[static_cast<std::size_t>(uq.piece)] = true;
  d.arc_dead[static_cast<std::size_t>(m.internal_arc)] = true;
  SurfaceComplex mid = d.finish();

  const int piece = find_piece(mid, p.name);
  const int outer = find_arc(mid, s.arc(m.outer_arc).name), inner = find_arc(mid, s.arc(m.inner_arc).name);
  for (const auto& w : find_movable_saddles(mid))
    if (w.piece == piece && w.outer_arc == outer && w.inner_arc == inner && w.outermost) return boundary_compress(mid, w);
  throw MoveError("merged saddle has no outermost pair at the witnessed arcs");
}

/// Splits a movable saddle whose same-side arcs are siblings along a new
/// internal arc so that neither part is movable.
inline SurfaceComplex remove_movable_saddle(const SurfaceComplex& s, const MovableWitness& w) {
  if (w.piece < 0 || w.piece >= s.num_pieces()) throw MoveError("unknown piece");
  const auto& p = s.piece(w.piece);
  if (w.nested) throw MoveError("nested pair: use boundary_compress");
  if (p.kind != PieceKind::Saddle || p.n() < 6 || p.spine_crossings != 0)
    throw MoveError("only spine-avoiding saddles with n >= 6 are removable");
  const int n = p.n();
  for (int len = 2; len <= n - 2; ++len)
    for (int start = 0; start < n; ++start) {
      if (default_kind(len + 1) == std::nullopt || default_kind(n - len + 1) == std::nullopt) continue;
      detail::Draft d(s);
      int i = d.add_arc({d.fresh_arc_name(p.name + "~i"), -1, p.ball, -1});
      auto w1 = detail::cyclic_run(p.word, start, len);
      w1.push_back({i, Side::A, true});
      auto w2 = detail::cyclic_run(p.word, start + len, n - len);
      w2.push_back({i, Side::A, false});
      d.s.pieces[static_cast<std::size_t>(w.piece)].word = w1;
      int p2 = d.add_piece({d.fresh_piece_name(p.name + "'"), p.ball, PieceKind::Saddle, 0, w2});
      const std::string p2_name = d.s.pieces[static_cast<std::size_t>(p2)].name;
      d.rekind(w.piece);
      d.rekind(p2);
      SurfaceComplex out = d.finish();
      const int ia = find_piece(out, p.name), ib = find_piece(out, p2_name);
      bool clean = true;
      for (const auto& mw : find_movable_saddles(out))
        if (mw.piece == ia || mw.piece == ib) clean = false;
      if (clean) return out;
    }
  throw MoveError("no split of " + p.name + " leaves both parts immovable");
}

// ---------------------------------------------------------------------------
// Reduction driver

struct MoveRecord {
  std::string kind;  // compress | merge | remove
  std::string piece;
  std::string arc1, arc2;
  std::string internal_arc;  // merge only
  std::string other_piece;   // merge only
  ComplexityTuple before, after;
};

struct MoveLog {
  std::vector<MoveRecord> moves;

  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : moves) {
      nlohmann::json j{{"move", m.kind}, {"piece", m.piece}, {"arcs", {m.arc1, m.arc2}},
                       {"before", m.before.str()}, {"after", m.after.str()}};
      if (m.kind == "merge") {
        j["internal_arc"] = m.internal_arc;
        j["other_piece"] = m.other_piece;
      }
      out.push_back(j);
    }
    return out;
  }
  std::string str() const {
    std::ostringstream out;
    for (const auto& m : moves) {
      out << m.kind << " " << m.piece;
      if (m.kind == "merge") out << "+" << m.other_piece << " via " << m.internal_arc;
      out << " at " << m.arc1 << "," << m.arc2 << "  " << m.before.str() << " -> " << m.after.str() << "\n";
    }
    return out.str();
  }
};

/// Re-applies one logged move to a complex by names.
inline SurfaceComplex apply_move(const SurfaceComplex& s, const MoveRecord& m) {
  const int piece = find_piece(s, m.piece);
  const int a1 = find_arc(s, m.arc1), a2 = find_arc(s, m.arc2);
  if (m.kind == "merge") {
    MergeWitness w{find_arc(s, m.internal_arc), piece, find_piece(s, m.other_piece), a1, a2};
    return merge_vertices(s, w);
  }
  for (const auto& w : find_movable_saddles(s)) {
    if (w.piece != piece || w.outer_arc != a1 || w.inner_arc != a2) continue;
    return m.kind == "compress" ? boundary_compress(s, w) : remove_movable_saddle(s, w);
  }
  throw MoveError("logged move " + m.kind + " on " + m.piece + " does not apply");
}

inline SurfaceComplex replay(SurfaceComplex s, const MoveLog& log) {
  for (const auto& m : log.moves) s = apply_move(s, m);
  return s;
}

struct Reduction {
  SurfaceComplex surface;
  MoveLog log;
};

/// Applies moves greedily (compress, then merge, then remove) until none
/// lowers the complexity. Every applied move strictly lowers it.
inline Reduction reduce_to_standard(const SurfaceComplex& input, int max_moves = 10000) {
  Reduction r{input, {}};
  auto current = complexity(r.surface);
  for (int step = 0; step < max_moves; ++step) {
    std::optional<std::pair<SurfaceComplex, MoveRecord>> chosen;
    auto try_candidate = [&](const std::function<SurfaceComplex()>& move, MoveRecord rec) {
      try {
        SurfaceComplex next = move();
        if (!validate(next).ok()) return false;
        auto after = complexity(next);
        if (!(after < current)) return false;
        rec.before = current;
        rec.after = after;
        chosen.emplace(std::move(next), std::move(rec));
        return true;
      } catch (const MoveError&) {
        return false;
      }
    };
    const auto& s = r.surface;
    auto witnesses = find_movable_saddles(s);
    for (const auto& w : witnesses) {
      if (!w.nested || !w.outermost) continue;
      if (try_candidate([&] { return boundary_compress(s, w); },
                        {"compress", s.piece(w.piece).name, s.arc(w.outer_arc).name, s.arc(w.inner_arc).name, "", "", {}, {}}))
        break;
    }
    if (!chosen)
      for (const auto& m : find_merge_pairs(s))
        if (try_candidate([&] { return merge_vertices(s, m); },
                          {"merge", s.piece(m.piece_outer).name, s.arc(m.outer_arc).name, s.arc(m.inner_arc).name,
                           s.arc(m.internal_arc).name, s.piece(m.piece_inner).name, {}, {}}))
          break;
    if (!chosen)
      for (const auto& w : witnesses) {
        if (w.nested) continue;
        if (try_candidate([&] { return remove_movable_saddle(s, w); },
                          {"remove", s.piece(w.piece).name, s.arc(w.outer_arc).name, s.arc(w.inner_arc).name, "", "", {}, {}}))
          break;
      }
    if (!chosen) return r;
    r.surface = std::move(chosen->first);
    current = chosen->second.after;
    r.log.moves.push_back(std::move(chosen->second));
  }
  throw MoveError("reduction did not terminate within the move budget");
}

// ---------------------------------------------------------------------------
// Standard position properties 2-5

struct PropertyCheck {
  int property = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

struct StandardReport {
  std::vector<PropertyCheck> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass; });
  }
  const PropertyCheck& property(int k) const {
    for (const auto& c : checks)
      if (c.property == k) return c;
    throw std::out_of_range("no such property");
  }
};

/// Slot an edge of a critical piece reaches inside its ps-ball: disk arcs give
/// their slot directly; internal arcs are followed through trivial strips.
inline std::optional<int> reached_slot(const SurfaceComplex& s, const std::vector<std::vector<ArcUse>>& uses, int piece,
                                       int index) {
  int p = piece, i = index;
  for (int guard = 0; guard <= s.num_pieces(); ++guard) {
    const auto& e = s.piece(p).word[static_cast<std::size_t>(i)];
    if (e.free()) return std::nullopt;
    const auto& arc = s.arc(e.arc);
    if (!arc.internal()) return s.handlebody.slot_of({arc.disk, e.side});
    const auto& u = uses[static_cast<std::size_t>(e.arc)];
    if (u.size() != 2) return std::nullopt;
    const auto& nxt = (u[0].piece == p && u[0].index == i) ? u[1] : u[0];
    const auto& np = s.piece(nxt.piece);
    if (np.kind != PieceKind::Trivial) return std::nullopt;
    p = nxt.piece;
    i = 1 - nxt.index;
  }
  return std::nullopt;
}

inline StandardReport check_standard_properties(const SurfaceComplex& s) {
  StandardReport r;
  PropertyCheck p2{2, true, {}}, p3{3, true, {}}, p4{4, true, {}}, p5{5, true, {}};
  for (const auto& w : find_movable_saddles(s))
    p2.failures.push_back(s.piece(w.piece).name + " movable at " + s.arc(w.outer_arc).name + "," +
                          s.arc(w.inner_arc).name);
  const auto uses = arc_uses(s);
  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& pc = s.piece(p);
    if (pc.kind == PieceKind::Saddle && pc.n() >= 5 && pc.spine_crossings < 1)
      p3.failures.push_back(pc.name + " is a spine-avoiding " + std::to_string(2 * pc.n()) + "-disk");
    if (pc.n() == 1 && !pc.word[0].free() && !s.arc(pc.word[0].arc).internal())
      p4.failures.push_back(pc.name + " is a 2-disk on disk arc " + s.arc(pc.word[0].arc).name);
    if (pc.n() == 3 && pc.kind == PieceKind::BoundaryCritical) {
      std::set<int> slots;
      int reached = 0;
      for (int i = 0; i < 3; ++i)
        if (auto x = reached_slot(s, uses, p, i)) {
          slots.insert(*x);
          ++reached;
        }
      if (static_cast<int>(slots.size()) != reached)
        p5.failures.push_back(pc.name + " meets " + std::to_string(slots.size()) + " of 3 slots");
    }
  }
  for (auto* c : {&p2, &p3, &p4, &p5}) {
    c->pass = c->failures.empty();
    r.checks.push_back(*c);
  }
  return r;
}

}  // namespace hsurf

#endif  // HSURF_STANDARD_POSITION_HPP
