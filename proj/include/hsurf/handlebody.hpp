#ifndef HSURF_HANDLEBODY_HPP
#define HSURF_HANDLEBODY_HPP

// Genus-g handlebody skeleton: 3-valent spine, one disk per spine edge,
// one pant-shaped ball (ps-ball) per spine vertex.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsurf {

class HandlebodyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { A = 0, B = 1 };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char side_char(Side s) { return s == Side::A ? 'A' : 'B'; }

/// One side of one disk; the unit of attachment to a ps-ball slot.
struct DiskSide {
  int disk = -1;
  Side side = Side::A;
  friend bool operator==(const DiskSide&, const DiskSide&) = default;
  friend auto operator<=>(const DiskSide&, const DiskSide&) = default;
};

struct SpineEdge {
  int u = -1;  // side A attaches here
  int v = -1;  // side B attaches here
  bool is_loop() const { return u == v; }
};

struct SpineGraph {
  int genus = 0;
  int num_vertices = 0;
  std::vector<SpineEdge> edges;
  std::vector<int> spanning_tree;  // edge indices

  bool in_tree(int e) const {
    return std::find(spanning_tree.begin(), spanning_tree.end(), e) != spanning_tree.end();
  }
};

struct PsBall {
  int id = -1;
  int spine_vertex = -1;
  std::array<DiskSide, 3> slots{};
};

/// Spine, disk system and ps-balls, fully cross-referenced. Immutable once built.
class Handlebody {
 public:
  Handlebody() = default;
  explicit Handlebody(SpineGraph spine);

  int genus() const { return spine_.genus; }
  int num_disks() const { return static_cast<int>(spine_.edges.size()); }
  int num_balls() const { return static_cast<int>(balls_.size()); }
  const SpineGraph& spine() const { return spine_; }
  const std::vector<PsBall>& balls() const { return balls_; }
  const PsBall& ball(int k) const { return balls_.at(static_cast<std::size_t>(k)); }

  /// ps-ball that the given disk side faces.
  int ball_of(DiskSide ds) const {
    const auto& e = spine_.edges.at(static_cast<std::size_t>(ds.disk));
    return ds.side == Side::A ? e.u : e.v;
  }
  /// Slot index (0..2) of the disk side inside its ps-ball.
  int slot_of(DiskSide ds) const {
    const auto& b = ball(ball_of(ds));
    for (int i = 0; i < 3; ++i)
      if (b.slots[static_cast<std::size_t>(i)] == ds) return i;
    throw HandlebodyError("disk side not attached to its ball");
  }

  /// Free-group generator index (0-based) carried by a disk, or -1 for tree disks.
  int generator_of(int disk) const { return generator_.at(static_cast<std::size_t>(disk)); }

  friend bool operator==(const Handlebody& a, const Handlebody& b) {
    if (a.spine_.genus != b.spine_.genus || a.spine_.num_vertices != b.spine_.num_vertices) return false;
    if (a.spine_.edges.size() != b.spine_.edges.size()) return false;
    for (std::size_t i = 0; i < a.spine_.edges.size(); ++i)
      if (a.spine_.edges[i].u != b.spine_.edges[i].u || a.spine_.edges[i].v != b.spine_.edges[i].v) return false;
    return a.spine_.spanning_tree == b.spine_.spanning_tree;
  }

 private:
  SpineGraph spine_;
  std::vector<PsBall> balls_;
  std::vector<int> generator_;
};

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace detail

/// Checks every spine invariant; returns a list of human readable violations.
inline std::vector<std::string> check_spine(const SpineGraph& s) {
  std::vector<std::string> out;
  if (s.genus < 2) out.push_back("genus must be >= 2");
  if (s.num_vertices != 2 * s.genus - 2) out.push_back("spine must have 2g-2 vertices");
  if (static_cast<int>(s.edges.size()) != 3 * s.genus - 3) out.push_back("spine must have 3g-3 edges");
  std::vector<int> degree(static_cast<std::size_t>(std::max(s.num_vertices, 0)), 0);
  for (const auto& e : s.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= s.num_vertices || e.v >= s.num_vertices) {
      out.push_back("spine edge references unknown vertex");
      return out;
    }
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (int v = 0; v < s.num_vertices; ++v)
    if (degree[static_cast<std::size_t>(v)] != 3)
      out.push_back("spine vertex " + std::to_string(v) + " has degree " +
                    std::to_string(degree[static_cast<std::size_t>(v)]));

  std::vector<int> parent(static_cast<std::size_t>(s.num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  int components = s.num_vertices;
  for (const auto& e : s.edges) {
    int a = detail::find_root(parent, e.u), b = detail::find_root(parent, e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) out.push_back("spine must be connected");
  else if (static_cast<int>(s.edges.size()) - s.num_vertices + 1 != s.genus)
    out.push_back("spine cycle rank differs from genus");

  if (static_cast<int>(s.spanning_tree.size()) != 2 * s.genus - 3) {
    out.push_back("spanning tree must have 2g-3 edges");
  } else {
    std::iota(parent.begin(), parent.end(), 0);
    for (int ei : s.spanning_tree) {
      if (ei < 0 || ei >= static_cast<int>(s.edges.size())) {
        out.push_back("spanning tree references unknown edge");
        break;
      }
      const auto& e = s.edges[static_cast<std::size_t>(ei)];
      int a = detail::find_root(parent, e.u), b = detail::find_root(parent, e.v);
      if (a == b) {
        out.push_back("spanning tree contains a cycle");
        break;
      }
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return out;
}

inline Handlebody::Handlebody(SpineGraph spine) : spine_(std::move(spine)) {
  auto problems = check_spine(spine_);
  if (!problems.empty()) throw HandlebodyError("invalid spine: " + problems.front());

  // Slots per vertex: non-tree disks first, then tree disks, each by index; side A before B.
  std::vector<std::vector<DiskSide>> incident(static_cast<std::size_t>(spine_.num_vertices));
  for (int pass = 0; pass < 2; ++pass) {
    for (int e = 0; e < num_disks(); ++e) {
      if (spine_.in_tree(e) != (pass == 1)) continue;
      const auto& edge = spine_.edges[static_cast<std::size_t>(e)];
      incident[static_cast<std::size_t>(edge.u)].push_back({e, Side::A});
      incident[static_cast<std::size_t>(edge.v)].push_back({e, Side::B});
    }
  }
  balls_.resize(static_cast<std::size_t>(spine_.num_vertices));
  for (int v = 0; v < spine_.num_vertices; ++v) {
    auto& b = balls_[static_cast<std::size_t>(v)];
    b.id = v;
    b.spine_vertex = v;
    for (std::size_t i = 0; i < 3; ++i) b.slots[i] = incident[static_cast<std::size_t>(v)][i];
  }

  generator_.assign(static_cast<std::size_t>(num_disks()), -1);
  int next = 0;
  for (int e = 0; e < num_disks(); ++e)
    if (!spine_.in_tree(e)) generator_[static_cast<std::size_t>(e)] = next++;
}

/// Canonical ladder spine: a chain of 2g-2 vertices with a loop at each end and
/// links alternating single and double edges. Edge 0 is the first single link,
/// edges 1 and 2 are the end loops, the remaining links follow in chain order.
inline SpineGraph build_spine(int genus) {
  if (genus < 2) throw HandlebodyError("genus must be at least 2");
  SpineGraph s;
  s.genus = genus;
  s.num_vertices = 2 * genus - 2;
  const int last = s.num_vertices - 1;
  s.edges.push_back({0, 1});
  s.edges.push_back({0, 0});
  s.edges.push_back({last, last});
  s.spanning_tree.push_back(0);
  for (int v = 1; v < last; ++v) {
    // v has one link from v-1 when (v odd) and needs a double link to v+1,
    // otherwise it already has a double link and needs a single one.
    if (v % 2 == 1) {
      s.edges.push_back({v, v + 1});
      s.spanning_tree.push_back(static_cast<int>(s.edges.size()) - 1);
      s.edges.push_back({v, v + 1});
    } else {
      s.edges.push_back({v, v + 1});
      s.spanning_tree.push_back(static_cast<int>(s.edges.size()) - 1);
    }
  }
  return s;
}

inline std::vector<PsBall> ps_balls(const SpineGraph& spine) { return Handlebody(spine).balls(); }

inline Handlebody canonical_handlebody(int genus) { return Handlebody(build_spine(genus)); }

}  // namespace hsurf

#endif  // HSURF_HANDLEBODY_HPP
