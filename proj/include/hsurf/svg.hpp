#ifndef HSURF_SVG_HPP
#define HSURF_SVG_HPP

// Heegaard-style pictures: one panel per ps-ball, the three slots drawn as
// circles with the arcs as chords, the pieces as curves outside the circles.
// Strips are red, 6-disks blue, saddles black; critical pieces get a dot.
// Layout depends only on indices, so the output is byte-stable.

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hsurf/regions.hpp"
#include "hsurf/surface.hpp"

namespace hsurf {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

inline const char* piece_color(PieceKind k) {
  switch (k) {
    case PieceKind::Trivial: return "#c0392b";
    case PieceKind::BoundaryCritical: return "#2c6fbb";
    case PieceKind::Saddle: return "#222222";
  }
  return "#222222";
}

}  // namespace detail

inline std::string render_diagram(const SurfaceComplex& s) {
  constexpr double kPanel = 380, kHeight = 400, kSpread = 100, kRadius = 50;
  const auto& hb = s.handlebody;
  const auto forest = NestingForest::of(s);
  const double pi = std::acos(-1.0);
  const int balls = hb.num_balls();

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(kPanel * balls) << "\" height=\""
    << detail::num(kHeight) << "\" viewBox=\"0 0 " << detail::num(kPanel * balls) << " " << detail::num(kHeight)
    << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int b = 0; b < balls; ++b) {
    const double cx = kPanel * b + kPanel / 2, cy = kHeight / 2 + 10;
    o << "<g id=\"ball" << b << "\">\n";
    o << "<text x=\"" << detail::num(kPanel * b + 12) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">P"
      << b << "</text>\n";
    // Endpoint coordinates per (slot, arc, first).
    std::map<std::tuple<int, int, bool>, std::pair<double, double>> point;
    for (int i = 0; i < 3; ++i) {
      const double theta = -pi / 2 + 2 * pi * i / 3;
      const double sx = cx + kSpread * std::cos(theta), sy = cy + kSpread * std::sin(theta);
      const auto ds = hb.ball(b).slots[static_cast<std::size_t>(i)];
      o << "<circle cx=\"" << detail::num(sx) << "\" cy=\"" << detail::num(sy) << "\" r=\"" << detail::num(kRadius)
        << "\" fill=\"#f4f4f4\" stroke=\"#555\"/>\n";
      o << "<text x=\"" << detail::num(sx) << "\" y=\"" << detail::num(sy + 4)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#888\">D" << ds.disk
        << side_char(ds.side) << "</text>\n";
      const auto layout = slot_layout(s, forest, ds);
      const int k = static_cast<int>(layout.order.size());
      // Endpoints are spread over the half circle facing the panel centre.
      const double facing = std::atan2(cy - sy, cx - sx);
      for (int j = 0; j < k; ++j) {
        const double a = facing + pi / 2 - pi * (j + 0.5) / k;
        const auto& ep = layout.order[static_cast<std::size_t>(j)];
        point[{i, ep.arc, ep.first}] = {sx + kRadius * std::cos(a), sy + kRadius * std::sin(a)};
      }
      for (int j = 0; j < k; ++j) {
        const auto& ep = layout.order[static_cast<std::size_t>(j)];
        if (!ep.first) continue;
        auto p = point[{i, ep.arc, true}];
        auto q = point[{i, ep.arc, false}];
        o << "<line x1=\"" << detail::num(p.first) << "\" y1=\"" << detail::num(p.second) << "\" x2=\""
          << detail::num(q.first) << "\" y2=\"" << detail::num(q.second)
          << "\" stroke=\"#777\" stroke-width=\"1.2\"><title>" << detail::xml_escape(s.arc(ep.arc).name)
          << "</title></line>\n";
      }
    }
    // Pieces: exit of each disk edge to entry of the next one.
    std::map<int, std::pair<double, double>> piece_centre;
    for (int p = 0; p < s.num_pieces(); ++p) {
      const auto& pc = s.piece(p);
      if (pc.ball != b) continue;
      struct Ends {
        bool on_disk = false;
        std::pair<double, double> in, out;
      };
      std::vector<Ends> ends;
      double mx = 0, my = 0;
      int count = 0;
      for (const auto& e : pc.word) {
        Ends x;
        if (!e.free() && !s.arc(e.arc).internal()) {
          const int slot = hb.slot_of({s.arc(e.arc).disk, e.side});
          x.on_disk = true;
          x.in = point[{slot, e.arc, e.forward}];
          x.out = point[{slot, e.arc, !e.forward}];
          mx += x.in.first + x.out.first;
          my += x.in.second + x.out.second;
          count += 2;
        }
        ends.push_back(x);
      }
      std::pair<double, double> mid = count ? std::pair{mx / count, my / count} : std::pair{cx, cy};
      piece_centre[p] = mid;
      const char* color = detail::piece_color(pc.kind);
      o << "<g class=\"piece\" stroke=\"" << color << "\" fill=\"none\" stroke-width=\"2\"><title>"
        << detail::xml_escape(pc.name) << "</title>\n";
      const int n = pc.n();
      for (int i = 0; i < n; ++i) {
        const auto& u = ends[static_cast<std::size_t>(i)];
        const auto& v = ends[static_cast<std::size_t>((i + 1) % n)];
        if (!u.on_disk || !v.on_disk) continue;
        // Control point pulled toward the piece centre keeps curves off the slots.
        const double qx = (u.out.first + v.in.first) / 4 + mid.first / 2;
        const double qy = (u.out.second + v.in.second) / 4 + mid.second / 2;
        o << "<path d=\"M " << detail::num(u.out.first) << " " << detail::num(u.out.second) << " Q "
          << detail::num(qx) << " " << detail::num(qy) << " " << detail::num(v.in.first) << " "
          << detail::num(v.in.second) << "\"/>\n";
      }
      o << "</g>\n";
      if (pc.kind != PieceKind::Trivial)
        o << "<circle cx=\"" << detail::num(mid.first) << "\" cy=\"" << detail::num(mid.second) << "\" r=\"3.5\" fill=\""
          << color << "\"><title>" << detail::xml_escape(pc.name) << "</title></circle>\n";
    }
    // Internal arcs join two pieces of this ball.
    const auto uses = arc_uses(s);
    for (int a = 0; a < s.num_arcs(); ++a) {
      if (!s.arc(a).internal() || s.arc(a).ball != b) continue;
      const auto& u = uses[static_cast<std::size_t>(a)];
      if (u.size() != 2) continue;
      auto p = piece_centre[u[0].piece];
      auto q = piece_centre[u[1].piece];
      o << "<line x1=\"" << detail::num(p.first) << "\" y1=\"" << detail::num(p.second) << "\" x2=\""
        << detail::num(q.first) << "\" y2=\"" << detail::num(q.second)
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"><title>" << detail::xml_escape(s.arc(a).name)
        << "</title></line>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace hsurf

#endif  // HSURF_SVG_HPP
