#ifndef HSURF_CORPUS_HPP
#define HSURF_CORPUS_HPP

// Surfaces built from diagrams, and the example families.
//
// A diagram fixes the arcs on every disk (a nesting forest) and, for each slot,
// a twist. Inside each ps-ball the arc endpoints on the three slot circles are
// joined by disjoint arcs in the pair of pants between them; such a pattern is
// determined by the endpoint counts up to one twist per circle. The closed
// curves traced on each ball's boundary sphere are the piece boundaries, so
// every diagram gives a realizable surface.

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsurf/document.hpp"
#include "hsurf/handlebody.hpp"
#include "hsurf/regions.hpp"
#include "hsurf/surface.hpp"

namespace hsurf {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Diagram {
  int genus = 2;
  /// Per disk: nesting parent of each arc (local index, -1 for outermost), in sibling order.
  std::vector<std::vector<int>> arcs;
  /// Per ball, per slot: rotation of the pants pattern against the slot's endpoint order.
  std::vector<std::array<int, 3>> twist;
};

namespace detail {

/// Pants pattern on three circles with k[i] points each: partner[i][p] = (circle, position).
inline std::array<std::vector<std::pair<int, int>>, 3> pants_matching(const std::array<int, 3>& k) {
  std::array<std::vector<std::pair<int, int>>, 3> partner;
  for (int i = 0; i < 3; ++i) partner[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(k[static_cast<std::size_t>(i)]), {-1, -1});
  int total = k[0] + k[1] + k[2];
  if (total % 2 != 0) throw DiagramError("odd number of arc endpoints in a ball");
  std::array<int, 3> y{0, 0, 0};
  std::array<std::array<int, 3>, 3> x{};
  int big = -1;
  for (int i = 0; i < 3; ++i)
    if (2 * k[static_cast<std::size_t>(i)] > total) big = i;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int l = 3 - i - j;
      int v = (k[static_cast<std::size_t>(i)] + k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(l)]) / 2;
      if (big == i) v = k[static_cast<std::size_t>(j)];
      if (big == j) v = k[static_cast<std::size_t>(i)];
      if (big == l) v = 0;
      x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  if (big >= 0) y[static_cast<std::size_t>(big)] = (2 * k[static_cast<std::size_t>(big)] - total) / 2;

  // Block layout on every circle: [S, X(i,i+1), T, X(i,i+2)], S and T of size y.
  std::array<std::map<std::string, int>, 3> block_start;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, l = (i + 2) % 3, pos = 0;
    auto& bs = block_start[static_cast<std::size_t>(i)];
    bs["S"] = pos;
    pos += y[static_cast<std::size_t>(i)];
    bs["X" + std::to_string(j)] = pos;
    pos += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    bs["T"] = pos;
    pos += y[static_cast<std::size_t>(i)];
    bs["X" + std::to_string(l)] = pos;
  }
  for (int i = 0; i < 3; ++i) {
    const int yi = y[static_cast<std::size_t>(i)];
    for (int t = 0; t < yi; ++t) {
      int a = block_start[static_cast<std::size_t>(i)]["S"] + t;
      int b = block_start[static_cast<std::size_t>(i)]["T"] + yi - 1 - t;
      partner[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = {i, b};
      partner[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] = {i, a};
    }
    for (int j = i + 1; j < 3; ++j) {
      const int n = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int t = 0; t < n; ++t) {
        int a = block_start[static_cast<std::size_t>(i)]["X" + std::to_string(j)] + t;
        int b = block_start[static_cast<std::size_t>(j)]["X" + std::to_string(i)] + n - 1 - t;
        partner[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = {j, b};
        partner[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] = {i, a};
      }
    }
  }
  return partner;
}

/// Marks spine crossings: a piece crosses the spine once when its boundary
/// curve separates the root faces of the ball's slots.
inline void mark_spine_crossings(SurfaceComplex& s) {
  for (int b = 0; b < s.handlebody.num_balls(); ++b) {
    auto br = ball_regions(s, b);
    std::vector<int> root_region;
    for (const auto& reg : br.regions)
      for (const auto& [slot, face] : reg.disk_faces)
        if (face.face == kRootFace) root_region.push_back(reg.id);
    for (int c = 0; c < static_cast<int>(br.curves.size()); ++c) {
      auto side = regions_beside(br, c);
      int here = 0;
      for (int r : root_region) here += side[static_cast<std::size_t>(r)] ? 1 : 0;
      bool separates = here > 0 && here < static_cast<int>(root_region.size());
      int piece = br.arc_sides[static_cast<std::size_t>(br.curves[static_cast<std::size_t>(c)].front())].piece;
      s.pieces[static_cast<std::size_t>(piece)].spine_crossings = separates ? 1 : 0;
    }
  }
}

}  // namespace detail

/// Builds the surface of a diagram. Throws DiagramError when a traced piece has
/// an odd number n >= 5 of D-edges, which no valid complex allows.
inline SurfaceComplex build_diagram(const Diagram& d) {
  SurfaceComplex s;
  s.handlebody = canonical_handlebody(d.genus);
  const auto& hb = s.handlebody;
  if (static_cast<int>(d.arcs.size()) != hb.num_disks()) throw DiagramError("one arc list per disk required");
  if (static_cast<int>(d.twist.size()) != hb.num_balls()) throw DiagramError("one twist triple per ball required");
  std::vector<int> first_arc;
  for (int k = 0; k < hb.num_disks(); ++k) {
    first_arc.push_back(s.num_arcs());
    const auto& list = d.arcs[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      DiskArc a;
      a.name = "d" + std::to_string(k) + "_" + std::to_string(i);
      a.disk = k;
      if (list[i] >= static_cast<int>(i)) throw DiagramError("arc parents must precede their children");
      a.parent = list[i] < 0 ? -1 : first_arc.back() + list[i];
      s.arcs.push_back(a);
    }
  }
  const auto forest = NestingForest::of(s);
  for (int b = 0; b < hb.num_balls(); ++b) {
    std::array<SlotLayout, 3> L;
    std::array<int, 3> k{};
    for (int i = 0; i < 3; ++i) {
      L[static_cast<std::size_t>(i)] = slot_layout(s, forest, hb.ball(b).slots[static_cast<std::size_t>(i)]);
      k[static_cast<std::size_t>(i)] = static_cast<int>(L[static_cast<std::size_t>(i)].order.size());
    }
    auto pm = detail::pants_matching(k);
    // Pants position p on circle i sits at layout index (twist - p) mod k.
    auto layout_of = [&](int i, int p) {
      int n = k[static_cast<std::size_t>(i)];
      int t = d.twist[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
      return (((t - p) % n) + n) % n;
    };
    auto pants_of = [&](int i, int l) {
      int n = k[static_cast<std::size_t>(i)];
      int t = d.twist[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
      return (((t - l) % n) + n) % n;
    };
    // Chord partner of a layout endpoint.
    std::array<std::map<std::pair<int, bool>, int>, 3> index_of;
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < k[static_cast<std::size_t>(i)]; ++l) {
        const auto& ep = L[static_cast<std::size_t>(i)].order[static_cast<std::size_t>(l)];
        index_of[static_cast<std::size_t>(i)][{ep.arc, ep.first}] = l;
      }
    std::set<std::pair<int, int>> visited;
    int count = 0;
    for (int i0 = 0; i0 < 3; ++i0)
      for (int l0 = 0; l0 < k[static_cast<std::size_t>(i0)]; ++l0) {
        if (visited.count({i0, l0})) continue;
        DiskPiece p;
        p.name = "p" + std::to_string(b) + "_" + std::to_string(count++);
        p.ball = b;
        int i = i0, l = l0;
        while (!visited.count({i, l})) {
          const auto& ep = L[static_cast<std::size_t>(i)].order[static_cast<std::size_t>(l)];
          int l2 = index_of[static_cast<std::size_t>(i)].at({ep.arc, !ep.first});
          visited.insert({i, l});
          visited.insert({i, l2});
          p.word.push_back({ep.arc, L[static_cast<std::size_t>(i)].side.side, ep.first});
          auto [j, q] = pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(pants_of(i, l2))];
          i = j;
          l = layout_of(j, q);
        }
        auto kind = default_kind(p.n());
        if (!kind) throw DiagramError("piece " + p.name + " has " + std::to_string(p.n()) + " D-edges");
        p.kind = *kind;
        s.pieces.push_back(std::move(p));
      }
  }
  detail::mark_spine_crossings(s);
  return s;
}


enum class QiuVariant { Original, Fig12a, Fig12b };

inline std::string variant_name(QiuVariant v) {
  switch (v) {
    case QiuVariant::Original: return "original";
    case QiuVariant::Fig12a: return "fig12a";
    case QiuVariant::Fig12b: return "fig12b";
  }
  return "original";
}

inline QiuVariant parse_variant(const std::string& name) {
  if (name == "original") return QiuVariant::Original;
  if (name == "fig12a") return QiuVariant::Fig12a;
  if (name == "fig12b") return QiuVariant::Fig12b;
  throw DiagramError("unknown variant: " + name);
}

/// Diagram of the separating family. D0 carries two outermost arcs u, v with
/// n-1 arcs nested directly inside each; D1 and D2 carry n parallel arcs.
/// Only the D0 slots are twisted in the original. The variants reroute the
/// arcs on the D1 slots of ball 0: fig12a turns D1A by two positions and
/// D1B by four, fig12b turns both by one.
inline Diagram qiu_diagram(int n, QiuVariant variant = QiuVariant::Original) {
  if (n < 1) throw DiagramError("gen_qiu needs n >= 1");
  Diagram d;
  d.arcs.assign(3, {});
  d.arcs[0] = {-1, -1};
  for (int i = 1; i < n; ++i) {
    d.arcs[0].push_back(0);
    d.arcs[0].push_back(1);
  }
  d.arcs[1].assign(static_cast<std::size_t>(n), -1);
  d.arcs[2].assign(static_cast<std::size_t>(n), -1);
  d.twist = {{0, 0, 0}, {0, 0, 2 * n - 1}};
  // The D0A rotation is the least one that leaves the original connected:
  // zero for n = 1, otherwise the least odd rotation.
  if (n > 1) {
    int t = 1;
    for (; t < 4 * n; t += 2) {
      d.twist[0][2] = t;
      if (component_count(build_diagram(d)) == 1) break;
    }
    if (t >= 4 * n) throw DiagramError("no connected rotation");
  }
  if (variant == QiuVariant::Fig12a) {
    d.twist[0][0] = 2 % (2 * n);
    d.twist[0][1] = 4 % (2 * n);
  }
  if (variant == QiuVariant::Fig12b) d.twist[0][0] = d.twist[0][1] = 1;
  return d;
}

inline SurfaceComplex gen_qiu(int n, QiuVariant variant = QiuVariant::Original) {
  return build_diagram(qiu_diagram(n, variant));
}

/// Diagram of the non-separating family: a single nested chain of arcs on
/// every disk (2n+1 on D0, 2n on D1 and D2) with the same rotations in both
/// balls, so the picture is symmetric under the swap of the balls across D0.
inline Diagram jaco_diagram(int n) {
  if (n < 1) throw DiagramError("gen_jaco needs n >= 1");
  Diagram d;
  d.arcs.assign(3, {});
  for (int i = 0; i < 2 * n + 1; ++i) d.arcs[0].push_back(i - 1);
  for (int k = 1; k <= 2; ++k)
    for (int i = 0; i < 2 * n; ++i) d.arcs[static_cast<std::size_t>(k)].push_back(i - 1);
  d.twist = {{2 * n - 1, 2 * n, 2 * n - 1}, {2 * n - 1, 2 * n, 2 * n - 1}};
  return d;
}

inline SurfaceComplex gen_jaco(int n) { return build_diagram(jaco_diagram(n)); }

/// Annulus around the handle of D1: one strip in ball 0 meeting both sides of
/// a single arc.
inline SurfaceComplex collar_annulus() {
  return parse_surface(
      "hsurf 1\n"
      "genus 2\n"
      "arc a disk 1\n"
      "piece c ball 0 kind trivial crossings 0 : a@A+ a@B-\n");
}

/// The collar cut open inside ball 0 and closed up through a second piece, so
/// the retract graph gets a cycle inside one ps-ball.
inline SurfaceComplex mutated_collar() {
  return parse_surface(
      "hsurf 1\n"
      "genus 2\n"
      "arc a disk 1\n"
      "arc i ball 0\n"
      "arc j ball 0\n"
      "piece c ball 0 kind saddle crossings 0 : a@A+ i+ a@B- j+\n"
      "piece t ball 0 kind trivial crossings 0 : i- j-\n");
}

}  // namespace hsurf

#endif  // HSURF_CORPUS_HPP
