#ifndef HSURF_DOCUMENT_HPP
#define HSURF_DOCUMENT_HPP

// Line-oriented surface documents, plus a JSON mirror.
//
//   hsurf 1
//   genus 2
//   spine-edge 0 1                 (optional; repeat per edge, in disk order)
//   spine-tree 0                   (required with spine-edge)
//   arc <name> disk <d> [in <parent>]
//   arc <name> ball <k>
//   piece <name> ball <k> kind <trivial|boundary_critical|saddle> crossings <c> : <d-edges>
//
// A D-edge token is <arc>@A+ / <arc>@B- for disk arcs, <arc>+ / <arc>- for
// internal arcs and a lone '-' for the free edge of a 2-disk cap. '#' starts a
// comment.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsurf/surface.hpp"

namespace hsurf {

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<std::string> problems)
      : std::runtime_error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
  }
  std::vector<std::string> problems_;
};

inline std::optional<PieceKind> parse_kind(const std::string& s) {
  if (s == "trivial") return PieceKind::Trivial;
  if (s == "boundary_critical") return PieceKind::BoundaryCritical;
  if (s == "saddle") return PieceKind::Saddle;
  return std::nullopt;
}

namespace detail {

struct RawArc {
  std::string name;
  int disk = -1, ball = -1;
  std::string parent;
  int line = 0;
};

struct RawPiece {
  std::string name;
  int ball = -1;
  std::string kind;
  int crossings = 0;
  std::vector<std::string> word;
  int line = 0;
};

struct RawDocument {
  int genus = 0;
  std::vector<SpineEdge> spine_edges;
  std::vector<int> spine_tree;
  bool has_tree = false;
  std::vector<RawArc> arcs;
  std::vector<RawPiece> pieces;
};

inline int to_int(const std::string& s, int line, std::vector<std::string>& errs) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (...) {
  }
  errs.push_back("line " + std::to_string(line) + ": expected integer, got '" + s + "'");
  return 0;
}

inline SurfaceComplex link(const RawDocument& raw, std::vector<std::string>& errs) {
  SurfaceComplex s;
  try {
    if (raw.spine_edges.empty()) {
      s.handlebody = canonical_handlebody(raw.genus);
    } else {
      SpineGraph g;
      g.genus = raw.genus;
      g.num_vertices = 2 * raw.genus - 2;
      g.edges = raw.spine_edges;
      g.spanning_tree = raw.spine_tree;
      s.handlebody = Handlebody(g);
    }
  } catch (const HandlebodyError& e) {
    errs.push_back(e.what());
    return s;
  }
  std::map<std::string, int> arc_index;
  for (const auto& a : raw.arcs) {
    if (!arc_index.emplace(a.name, static_cast<int>(s.arcs.size())).second)
      errs.push_back("line " + std::to_string(a.line) + ": duplicate arc '" + a.name + "'");
    s.arcs.push_back({a.name, a.disk, a.ball, -1});
  }
  for (std::size_t i = 0; i < raw.arcs.size(); ++i) {
    const auto& a = raw.arcs[i];
    if (a.parent.empty()) continue;
    auto it = arc_index.find(a.parent);
    if (it == arc_index.end())
      errs.push_back("line " + std::to_string(a.line) + ": unknown nesting parent '" + a.parent + "'");
    else
      s.arcs[i].parent = it->second;
  }
  std::map<std::string, int> piece_names;
  for (const auto& p : raw.pieces) {
    std::string at = "line " + std::to_string(p.line) + ": ";
    if (!piece_names.emplace(p.name, static_cast<int>(s.pieces.size())).second)
      errs.push_back(at + "duplicate piece '" + p.name + "'");
    DiskPiece piece;
    piece.name = p.name;
    piece.ball = p.ball;
    piece.spine_crossings = p.crossings;
    auto kind = parse_kind(p.kind);
    if (!kind) errs.push_back(at + "unknown kind '" + p.kind + "'");
    else piece.kind = *kind;
    for (const auto& tok : p.word) {
      if (tok == "-") {
        piece.word.push_back(DEdge{});
        continue;
      }
      if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) {
        errs.push_back(at + "bad D-edge token '" + tok + "'");
        continue;
      }
      DEdge e;
      e.forward = tok.back() == '+';
      std::string body = tok.substr(0, tok.size() - 1);
      auto atpos = body.find('@');
      std::string name = body.substr(0, atpos);
      if (atpos != std::string::npos) {
        std::string side = body.substr(atpos + 1);
        if (side != "A" && side != "B") errs.push_back(at + "bad side in '" + tok + "'");
        e.side = side == "B" ? Side::B : Side::A;
      }
      auto it = arc_index.find(name);
      if (it == arc_index.end()) {
        errs.push_back(at + "dangling arc reference '" + name + "'");
        continue;
      }
      e.arc = it->second;
      if (s.arcs[static_cast<std::size_t>(e.arc)].internal() != (atpos == std::string::npos))
        errs.push_back(at + (atpos == std::string::npos ? "disk arc '" + name + "' needs a side"
                                                        : "internal arc '" + name + "' takes no side"));
      piece.word.push_back(e);
    }
    s.pieces.push_back(std::move(piece));
  }
  return s;
}

}  // namespace detail

/// Parses a document. Throws DocumentError listing every schema problem with
/// its line; structural invariants beyond the schema are left to validate().
inline SurfaceComplex parse_surface(const std::string& text) {
  detail::RawDocument raw;
  std::vector<std::string> errs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::string at = "line " + std::to_string(lineno) + ": ";
    const auto& key = tok[0];
    if (key == "hsurf") {
      header = true;
      if (tok.size() != 2 || tok[1] != "1") errs.push_back(at + "unsupported format version");
    } else if (key == "genus" && tok.size() == 2) {
      raw.genus = detail::to_int(tok[1], lineno, errs);
    } else if (key == "spine-edge" && tok.size() == 3) {
      raw.spine_edges.push_back({detail::to_int(tok[1], lineno, errs), detail::to_int(tok[2], lineno, errs)});
    } else if (key == "spine-tree") {
      raw.has_tree = true;
      for (std::size_t i = 1; i < tok.size(); ++i) raw.spine_tree.push_back(detail::to_int(tok[i], lineno, errs));
    } else if (key == "arc" && (tok.size() == 4 || tok.size() == 6)) {
      detail::RawArc a;
      a.name = tok[1];
      a.line = lineno;
      if (tok[2] == "disk") a.disk = detail::to_int(tok[3], lineno, errs);
      else if (tok[2] == "ball" && tok.size() == 4) a.ball = detail::to_int(tok[3], lineno, errs);
      else errs.push_back(at + "arc needs 'disk <d>' or 'ball <k>'");
      if (tok.size() == 6) {
        if (tok[4] != "in" || a.disk < 0) errs.push_back(at + "expected 'in <parent>' after disk arc");
        else a.parent = tok[5];
      }
      raw.arcs.push_back(a);
    } else if (key == "piece" && tok.size() >= 10 && tok[2] == "ball" && tok[4] == "kind" && tok[6] == "crossings" &&
               tok[8] == ":") {
      detail::RawPiece p;
      p.name = tok[1];
      p.line = lineno;
      p.ball = detail::to_int(tok[3], lineno, errs);
      p.kind = tok[5];
      p.crossings = detail::to_int(tok[7], lineno, errs);
      p.word.assign(tok.begin() + 9, tok.end());
      raw.pieces.push_back(p);
    } else {
      errs.push_back(at + "unrecognised line '" + key + "'");
    }
  }
  if (!header) errs.push_back("missing 'hsurf 1' header");
  if (!raw.spine_edges.empty() && !raw.has_tree) errs.push_back("spine-edge given without spine-tree");
  if (raw.pieces.empty()) errs.push_back("empty surface");
  if (!errs.empty()) throw DocumentError(errs);
  auto s = detail::link(raw, errs);
  if (!errs.empty()) throw DocumentError(errs);
  return s;
}

inline std::string edge_token(const SurfaceComplex& s, const DEdge& e) {
  if (e.free()) return "-";
  const auto& a = s.arc(e.arc);
  std::string t = a.name;
  if (!a.internal()) t += std::string("@") + side_char(e.side);
  t += e.forward ? '+' : '-';
  return t;
}

inline bool canonical_spine(const Handlebody& hb) { return hb == canonical_handlebody(hb.genus()); }

inline std::string serialize_surface(const SurfaceComplex& s) {
  std::ostringstream out;
  out << "hsurf 1\n";
  out << "genus " << s.handlebody.genus() << "\n";
  if (!canonical_spine(s.handlebody)) {
    for (const auto& e : s.handlebody.spine().edges) out << "spine-edge " << e.u << " " << e.v << "\n";
    out << "spine-tree";
    for (int e : s.handlebody.spine().spanning_tree) out << " " << e;
    out << "\n";
  }
  for (const auto& a : s.arcs) {
    out << "arc " << a.name;
    if (a.internal()) out << " ball " << a.ball;
    else out << " disk " << a.disk;
    if (a.parent >= 0) out << " in " << s.arc(a.parent).name;
    out << "\n";
  }
  for (const auto& p : s.pieces) {
    out << "piece " << p.name << " ball " << p.ball << " kind " << kind_name(p.kind) << " crossings "
        << p.spine_crossings << " :";
    for (const auto& e : p.word) out << " " << edge_token(s, e);
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json to_json(const SurfaceComplex& s) {
  nlohmann::json j;
  j["format"] = "hsurf";
  j["version"] = 1;
  j["genus"] = s.handlebody.genus();
  if (!canonical_spine(s.handlebody)) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : s.handlebody.spine().edges) edges.push_back({e.u, e.v});
    j["spine"] = {{"edges", edges}, {"tree", s.handlebody.spine().spanning_tree}};
  }
  j["arcs"] = nlohmann::json::array();
  for (const auto& a : s.arcs) {
    nlohmann::json ja{{"name", a.name}};
    if (a.internal()) ja["ball"] = a.ball;
    else ja["disk"] = a.disk;
    if (a.parent >= 0) ja["parent"] = s.arc(a.parent).name;
    j["arcs"].push_back(ja);
  }
  j["pieces"] = nlohmann::json::array();
  for (const auto& p : s.pieces) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& e : p.word) word.push_back(edge_token(s, e));
    j["pieces"].push_back({{"name", p.name},
                           {"ball", p.ball},
                           {"kind", kind_name(p.kind)},
                           {"crossings", p.spine_crossings},
                           {"word", word}});
  }
  return j;
}

/// JSON mirror of the text format; converted through the text grammar so both
/// share one set of schema checks.
inline SurfaceComplex from_json(const nlohmann::json& j) {
  std::ostringstream out;
  try {
    out << "hsurf " << j.at("version").get<int>() << "\n";
    out << "genus " << j.at("genus").get<int>() << "\n";
    if (j.contains("spine")) {
      for (const auto& e : j["spine"].at("edges")) out << "spine-edge " << e.at(0).get<int>() << " " << e.at(1).get<int>() << "\n";
      out << "spine-tree";
      for (const auto& t : j["spine"].at("tree")) out << " " << t.get<int>();
      out << "\n";
    }
    for (const auto& a : j.at("arcs")) {
      out << "arc " << a.at("name").get<std::string>();
      if (a.contains("ball")) out << " ball " << a["ball"].get<int>();
      else out << " disk " << a.at("disk").get<int>();
      if (a.contains("parent")) out << " in " << a["parent"].get<std::string>();
      out << "\n";
    }
    for (const auto& p : j.at("pieces")) {
      out << "piece " << p.at("name").get<std::string>() << " ball " << p.at("ball").get<int>() << " kind "
          << p.at("kind").get<std::string>() << " crossings " << p.value("crossings", 0) << " :";
      for (const auto& t : p.at("word")) out << " " << t.get<std::string>();
      out << "\n";
    }
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError({std::string("json: ") + e.what()});
  }
  return parse_surface(out.str());
}

}  // namespace hsurf

#endif  // HSURF_DOCUMENT_HPP
