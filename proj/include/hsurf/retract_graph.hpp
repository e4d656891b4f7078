#ifndef HSURF_RETRACT_GRAPH_HPP
#define HSURF_RETRACT_GRAPH_HPP

// The graph a surface retracts to: one vertex per critical point, one node per
// arc crossing, strips (trivial 4-disks) as plain edges.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hsurf/surface.hpp"

namespace hsurf {

struct RetractGraph {
  enum class NodeKind { Critical, Crossing };
  struct Node {
    NodeKind kind = NodeKind::Crossing;
    int piece = -1;  // critical nodes
    int arc = -1;    // crossing nodes
    int valence = 0;
  };
  struct Edge {
    int u = -1, v = -1;
    int piece = -1;
    // Word positions of the piece at each end (-1 for the critical vertex end).
    int slot_u = -1, slot_v = -1;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<int> crossing_node;  // per arc

  /// Disk crossings an edge carries: its ends that sit on disk arcs.
  std::vector<int> disk_labels(const SurfaceComplex& s, int edge) const {
    std::vector<int> out;
    for (int n : {edges[static_cast<std::size_t>(edge)].u, edges[static_cast<std::size_t>(edge)].v}) {
      const auto& node = nodes[static_cast<std::size_t>(n)];
      if (node.kind == NodeKind::Crossing && !s.arc(node.arc).internal()) out.push_back(s.arc(node.arc).disk);
    }
    return out;
  }

  int cycle_rank() const {
    std::vector<int> parent(nodes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    int comps = static_cast<int>(nodes.size());
    for (const auto& e : edges) {
      int a = detail::find_root(parent, e.u), b = detail::find_root(parent, e.v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
    return static_cast<int>(edges.size()) - static_cast<int>(nodes.size()) + comps;
  }
};

inline RetractGraph build_graph(const SurfaceComplex& s) {
  RetractGraph g;
  g.crossing_node.resize(s.arcs.size());
  for (int a = 0; a < s.num_arcs(); ++a) {
    g.crossing_node[static_cast<std::size_t>(a)] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({RetractGraph::NodeKind::Crossing, -1, a, 0});
  }
  for (int p = 0; p < s.num_pieces(); ++p) {
    const auto& pc = s.piece(p);
    if (pc.kind == PieceKind::Trivial) {
      if (pc.n() != 2 || pc.word[0].free() || pc.word[1].free()) continue;
      g.edges.push_back({g.crossing_node[static_cast<std::size_t>(pc.word[0].arc)],
                         g.crossing_node[static_cast<std::size_t>(pc.word[1].arc)], p, 0, 1});
      continue;
    }
    int v = static_cast<int>(g.nodes.size());
    g.nodes.push_back({RetractGraph::NodeKind::Critical, p, -1, pc.n()});
    for (int i = 0; i < pc.n(); ++i) {
      const auto& e = pc.word[static_cast<std::size_t>(i)];
      if (e.free()) continue;
      g.edges.push_back({v, g.crossing_node[static_cast<std::size_t>(e.arc)], p, -1, i});
    }
  }
  return g;
}

/// One connected piece of the graph after severing it at every disk crossing.
struct GraphComponent {
  int ball = -1;
  std::vector<int> edges;      // indices into RetractGraph::edges
  int node_count = 0;          // nodes after splitting crossings
  bool cyclic() const { return static_cast<int>(edges.size()) >= node_count; }
};

struct CutGraph {
  std::vector<GraphComponent> components;
  int fragment_count = 0;  // total edges distributed over components
};

namespace detail {

/// Node id in the cut graph: disk crossings split into one copy per disk side.
struct CutNodes {
  std::map<std::pair<int, int>, int> ids;
  int get(int node, int side) {
    auto [it, fresh] = ids.try_emplace({node, side}, static_cast<int>(ids.size()));
    return it->second;
  }
};

inline std::pair<int, int> cut_end(const SurfaceComplex& s, const RetractGraph& g, int node, int piece, int slot) {
  const auto& n = g.nodes[static_cast<std::size_t>(node)];
  if (n.kind == RetractGraph::NodeKind::Critical || s.arc(n.arc).internal()) return {node, -1};
  const auto& e = s.piece(piece).word[static_cast<std::size_t>(slot)];
  return {node, static_cast<int>(e.side)};
}

}  // namespace detail

inline CutGraph cut_components(const SurfaceComplex& s, const RetractGraph& g) {
  detail::CutNodes ids;
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges) {
    auto cu = e.slot_u < 0 ? std::pair<int, int>{e.u, -1} : detail::cut_end(s, g, e.u, e.piece, e.slot_u);
    auto cv = detail::cut_end(s, g, e.v, e.piece, e.slot_v);
    ends.push_back({ids.get(cu.first, cu.second), ids.get(cv.first, cv.second)});
  }
  // Isolated critical vertices (e.g. a lone cap) are components too.
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].kind == RetractGraph::NodeKind::Critical) ids.get(static_cast<int>(i), -1);
  const int n = static_cast<int>(ids.ids.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  for (auto [a, b] : ends) {
    int ra = detail::find_root(parent, a), rb = detail::find_root(parent, b);
    if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
  }
  std::map<int, int> comp_of_root;
  CutGraph out;
  std::vector<int> ball_of_node(static_cast<std::size_t>(n), -1);
  for (auto& [key, id] : ids.ids) {
    const auto& node = g.nodes[static_cast<std::size_t>(key.first)];
    if (node.kind == RetractGraph::NodeKind::Critical) ball_of_node[static_cast<std::size_t>(id)] = s.piece(node.piece).ball;
  }
  for (int i = 0; i < n; ++i) {
    int r = detail::find_root(parent, i);
    auto [it, fresh] = comp_of_root.try_emplace(r, static_cast<int>(out.components.size()));
    if (fresh) out.components.emplace_back();
    ++out.components[static_cast<std::size_t>(it->second)].node_count;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int c = comp_of_root[detail::find_root(parent, ends[e].first)];
    auto& comp = out.components[static_cast<std::size_t>(c)];
    comp.edges.push_back(static_cast<int>(e));
    comp.ball = s.piece(g.edges[e].piece).ball;
    ++out.fragment_count;
  }
  for (int i = 0; i < n; ++i)
    if (ball_of_node[static_cast<std::size_t>(i)] >= 0)
      out.components[static_cast<std::size_t>(comp_of_root[detail::find_root(parent, i)])].ball =
          ball_of_node[static_cast<std::size_t>(i)];
  return out;
}

struct TrivialityResult {
  bool trivial = false;
  int ball = -1;
  std::vector<int> cycle_pieces;  // pieces along the witness cycle, in order
};

/// True iff some component of the cut graph contains a cycle; the witness lists
/// the pieces whose edges form that cycle.
inline TrivialityResult is_trivial(const SurfaceComplex& s, const RetractGraph& g) {
  TrivialityResult r;
  auto cut = cut_components(s, g);
  for (const auto& comp : cut.components) {
    if (!comp.cyclic()) continue;
    r.trivial = true;
    r.ball = comp.ball;
    // Find a cycle by DFS over the component's edges in the cut graph.
    detail::CutNodes ids;
    std::vector<std::pair<int, int>> ends;
    for (int ei : comp.edges) {
      const auto& e = g.edges[static_cast<std::size_t>(ei)];
      auto cu = e.slot_u < 0 ? std::pair<int, int>{e.u, -1} : detail::cut_end(s, g, e.u, e.piece, e.slot_u);
      auto cv = detail::cut_end(s, g, e.v, e.piece, e.slot_v);
      ends.push_back({ids.get(cu.first, cu.second), ids.get(cv.first, cv.second)});
    }
    const int n = static_cast<int>(ids.ids.size());
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ends.size(); ++i) {
      adj[static_cast<std::size_t>(ends[i].first)].push_back({ends[i].second, static_cast<int>(i)});
      adj[static_cast<std::size_t>(ends[i].second)].push_back({ends[i].first, static_cast<int>(i)});
    }
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -2), parent_node(static_cast<std::size_t>(n), -1),
        depth(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    parent_edge[0] = -1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, ei] : adj[static_cast<std::size_t>(u)]) {
        if (ei == parent_edge[static_cast<std::size_t>(u)]) continue;
        if (parent_edge[static_cast<std::size_t>(v)] == -2) {
          parent_edge[static_cast<std::size_t>(v)] = ei;
          parent_node[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          stack.push_back(v);
          continue;
        }
        // Non-tree edge closes a cycle: walk both ends up to their meeting point.
        std::vector<int> left{ei}, right;
        int a = u, b = v;
        while (a != b) {
          if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
            left.push_back(parent_edge[static_cast<std::size_t>(a)]);
            a = parent_node[static_cast<std::size_t>(a)];
          } else {
            right.push_back(parent_edge[static_cast<std::size_t>(b)]);
            b = parent_node[static_cast<std::size_t>(b)];
          }
        }
        left.insert(left.end(), right.rbegin(), right.rend());
        for (int local : left) {
          int piece = g.edges[static_cast<std::size_t>(comp.edges[static_cast<std::size_t>(local)])].piece;
          if (r.cycle_pieces.empty() || r.cycle_pieces.back() != piece) r.cycle_pieces.push_back(piece);
        }
        if (r.cycle_pieces.size() > 1 && r.cycle_pieces.front() == r.cycle_pieces.back()) r.cycle_pieces.pop_back();
        return r;
      }
    }
    return r;
  }
  return r;
}

/// Plain edge-list export: "node <id> <label>" then "edge <u> <v> <piece>".
inline std::string export_edge_list(const SurfaceComplex& s, const RetractGraph& g) {
  std::ostringstream out;
  out << "# retract graph: " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (n.kind == RetractGraph::NodeKind::Critical)
      out << "node " << i << " v:" << s.piece(n.piece).name << " valence=" << n.valence << "\n";
    else
      out << "node " << i << " x:" << s.arc(n.arc).name
          << (s.arc(n.arc).internal() ? " internal" : " disk=D" + std::to_string(s.arc(n.arc).disk)) << "\n";
  }
  for (const auto& e : g.edges) out << "edge " << e.u << " " << e.v << " " << s.piece(e.piece).name << "\n";
  return out.str();
}

}  // namespace hsurf

#endif  // HSURF_RETRACT_GRAPH_HPP
