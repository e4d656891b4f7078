#ifndef HSURF_FREE_GROUP_HPP
#define HSURF_FREE_GROUP_HPP

// Free words, Stallings folding and the induced map pi1(S) -> pi1(V).
//
// Letters are signed generator numbers: +(k+1) for x_k, -(k+1) for its inverse.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsurf/surface.hpp"

namespace hsurf {

using FreeWord = std::vector<int>;

inline FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

inline FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

inline FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

inline FreeWord cyclic_reduce(const FreeWord& w) {
  FreeWord r = reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return FreeWord(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

inline std::string word_string(const FreeWord& w) {
  if (w.empty()) return "1";
  static const char* names = "abcdefghijklmnopqrstuvwxyz";
  std::string out;
  for (int x : w) {
    int k = std::abs(x) - 1;
    char c = k < 26 ? names[k] : '?';
    out += x > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

/// Core graph of a finitely generated subgroup after folding. Vertex 0 is the base.
struct FoldedGraph {
  struct Edge {
    int from, to, label;  // label > 0
  };
  int num_vertices = 1;
  std::vector<Edge> edges;

  int rank() const { return static_cast<int>(edges.size()) - num_vertices + 1; }

  /// Whether the reduced word labels a closed path at the base.
  bool contains(const FreeWord& w) const {
    int v = 0;
    for (int x : reduce(w)) {
      int next = -1;
      for (const auto& e : edges) {
        if (x > 0 && e.from == v && e.label == x) next = e.to;
        if (x < 0 && e.to == v && e.label == -x) next = e.from;
        if (next >= 0) break;
      }
      if (next < 0) return false;
      v = next;
    }
    return v == 0;
  }
};

/// Folds the bouquet of the given words. `seed` permutes the order in which
/// folds are applied; the result is independent of it up to relabelling.
inline FoldedGraph fold(const std::vector<FreeWord>& words, unsigned seed = 0) {
  int nv = 1;
  std::vector<FoldedGraph::Edge> edges;
  for (const auto& raw : words) {
    FreeWord w = reduce(raw);
    if (w.empty()) continue;
    int v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int to = i + 1 == w.size() ? 0 : nv++;
      if (w[i] > 0) edges.push_back({v, to, w[i]});
      else edges.push_back({to, v, -w[i]});
      v = to;
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  std::mt19937 rng(seed);
  std::vector<bool> dead(edges.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
    // (vertex, signed label) -> edge index
    std::map<std::pair<int, int>, std::size_t> seen;
    for (std::size_t idx : order) {
      if (dead[idx]) continue;
      auto& e = edges[idx];
      e.from = detail::find_root(parent, e.from);
      e.to = detail::find_root(parent, e.to);
      for (auto key : {std::pair<int, int>{e.from, e.label}, std::pair<int, int>{e.to, -e.label}}) {
        auto [it, fresh] = seen.try_emplace(key, idx);
        if (fresh) continue;
        auto& f = edges[it->second];
        f.from = detail::find_root(parent, f.from);
        f.to = detail::find_root(parent, f.to);
        // Same label leaving (or entering) the same vertex: identify far ends.
        int a = key.second > 0 ? e.to : e.from;
        int b = key.second > 0 ? f.to : f.from;
        if (a != b) {
          // Keep the base vertex as representative.
          if (b == 0) std::swap(a, b);
          parent[static_cast<std::size_t>(b)] = a;
        }
        dead[idx] = true;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  // Compact vertices reachable through live edges, base first.
  FoldedGraph g;
  std::map<int, int> id{{detail::find_root(parent, 0), 0}};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (dead[i]) continue;
    int a = detail::find_root(parent, edges[i].from), b = detail::find_root(parent, edges[i].to);
    int ia = id.try_emplace(a, static_cast<int>(id.size())).first->second;
    int ib = id.try_emplace(b, static_cast<int>(id.size())).first->second;
    g.edges.push_back({ia, ib, edges[i].label});
  }
  g.num_vertices = static_cast<int>(id.size());
  return g;
}

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Crossing of an arc by a path in the surface: from use `from_use` (0 or 1)
/// of the arc into the other use.
struct ArcCrossing {
  int arc = -1;
  int from_use = 0;
};

/// Image in pi1(V) of a path given by its arc crossings. Crossing a disk arc
/// from its side-A piece to its side-B piece reads the disk's generator.
inline FreeWord loop_word(const SurfaceComplex& s, const std::vector<ArcCrossing>& path) {
  FreeWord w;
  for (const auto& c : path) {
    const auto& arc = s.arc(c.arc);
    if (arc.internal()) continue;
    int gen = s.handlebody.generator_of(arc.disk);
    if (gen < 0) continue;
    w.push_back(c.from_use == 0 ? gen + 1 : -(gen + 1));
  }
  return reduce(w);
}

/// Spanning tree of the piece-adjacency multigraph and one loop per remaining arc.
struct SurfaceLoops {
  std::vector<bool> tree_arc;                      // per arc
  std::vector<std::vector<ArcCrossing>> loops;     // based at piece 0
  std::vector<int> loop_arc;                       // the non-tree arc closing each loop
};

inline SurfaceLoops surface_loops(const SurfaceComplex& s) {
  const auto uses = arc_uses(s);
  const int P = s.num_pieces();
  SurfaceLoops out;
  out.tree_arc.assign(s.arcs.size(), false);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(P));  // (arc, use index of this end)
  for (int a = 0; a < s.num_arcs(); ++a) {
    const auto& u = uses[static_cast<std::size_t>(a)];
    if (u.size() != 2) throw OracleError("arc " + s.arc(a).name + " is not two-sided");
    adj[static_cast<std::size_t>(u[0].piece)].push_back({a, 0});
    adj[static_cast<std::size_t>(u[1].piece)].push_back({a, 1});
  }
  // BFS tree from piece 0; path[p] = crossings from piece 0 to p.
  std::vector<std::vector<ArcCrossing>> path(static_cast<std::size_t>(P));
  std::vector<bool> seen(static_cast<std::size_t>(P), false);
  std::deque<int> q{0};
  if (P > 0) seen[0] = true;
  while (!q.empty()) {
    int p = q.front();
    q.pop_front();
    for (auto [a, end] : adj[static_cast<std::size_t>(p)]) {
      int other = uses[static_cast<std::size_t>(a)][static_cast<std::size_t>(1 - end)].piece;
      if (seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = true;
      out.tree_arc[static_cast<std::size_t>(a)] = true;
      path[static_cast<std::size_t>(other)] = path[static_cast<std::size_t>(p)];
      path[static_cast<std::size_t>(other)].push_back({a, end});
      q.push_back(other);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw OracleError("surface is not connected");
  for (int a = 0; a < s.num_arcs(); ++a) {
    if (out.tree_arc[static_cast<std::size_t>(a)]) continue;
    const auto& u = uses[static_cast<std::size_t>(a)];
    std::vector<ArcCrossing> loop = path[static_cast<std::size_t>(u[0].piece)];
    loop.push_back({a, 0});
    const auto& back = path[static_cast<std::size_t>(u[1].piece)];
    for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back({it->arc, 1 - it->from_use});
    out.loops.push_back(std::move(loop));
    out.loop_arc.push_back(a);
  }
  return out;
}

struct InjectivityResult {
  bool injective = false;
  int surface_rank = 0;  // 1 - χ(S)
  int image_rank = 0;
  std::vector<FreeWord> images;
};

/// pi1-injectivity of a connected two-sided surface with boundary, decided by
/// comparing the rank of the folded image with the rank of pi1(S).
inline InjectivityResult is_injective(const SurfaceComplex& s) {
  if (s.num_pieces() == 0) throw OracleError("empty surface");
  if (component_count(s) != 1) throw OracleError("surface is not connected");
  InjectivityResult r;
  auto loops = surface_loops(s);
  for (const auto& l : loops.loops) r.images.push_back(loop_word(s, l));
  r.surface_rank = static_cast<int>(loops.loops.size());
  if (r.surface_rank != 1 - euler_characteristic(s)) throw OracleError("loop count disagrees with Euler characteristic");
  r.image_rank = fold(r.images).rank();
  r.injective = r.image_rank == r.surface_rank;
  return r;
}

/// Word of a closed crossing path in pi1(S), over the non-tree arcs of `loops`.
/// Letter k+1 stands for the k-th non-tree arc crossed from use 0 to use 1.
inline FreeWord surface_word(const SurfaceLoops& loops, const std::vector<ArcCrossing>& path) {
  std::map<int, int> letter;
  for (std::size_t k = 0; k < loops.loop_arc.size(); ++k) letter[loops.loop_arc[k]] = static_cast<int>(k) + 1;
  FreeWord w;
  for (const auto& c : path) {
    auto it = letter.find(c.arc);
    if (it == letter.end()) continue;
    w.push_back(c.from_use == 0 ? it->second : -it->second);
  }
  return reduce(w);
}

}  // namespace hsurf

#endif  // HSURF_FREE_GROUP_HPP
