// Command line front end for the surface library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hsurf/corpus.hpp"
#include "hsurf/document.hpp"
#include "hsurf/free_group.hpp"
#include "hsurf/report.hpp"
#include "hsurf/retract_graph.hpp"
#include "hsurf/solver.hpp"
#include "hsurf/standard_position.hpp"
#include "hsurf/svg.hpp"

namespace {

using namespace hsurf;

struct Options {
  std::string input;
  std::string family;
  int n = 1;
  std::string variant = "original";
  std::string format = "text";
  std::string out;
  int max_n = 4;
};

SurfaceComplex load(const Options& o) {
  if (o.input.empty()) {
    if (o.family == "qiu") return gen_qiu(o.n, parse_variant(o.variant));
    if (o.family == "jaco") return gen_jaco(o.n);
    throw std::runtime_error("need --input or --family");
  }
  std::ifstream in(o.input);
  if (!in) throw std::runtime_error("cannot read " + o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(nlohmann::json::parse(text));
  return parse_surface(text);
}

void emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << body;
}

bool json_out(const Options& o) { return o.format == "json"; }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const Options& o) {
  auto s = load(o);
  auto r = validate(s);
  auto c = census(s);
  if (json_out(o)) {
    nlohmann::json j{{"ok", r.ok()},
                     {"errors", r.errors()},
                     {"arcs", s.num_arcs()},
                     {"pieces", s.num_pieces()},
                     {"chi", euler_characteristic(s)},
                     {"disk_intersections", c.disk_intersections},
                     {"components", c.components},
                     {"orientable", c.orientable}};
    emit(o, dump(j));
  } else {
    std::ostringstream out;
    out << (r.ok() ? "valid" : "invalid") << "\n";
    for (const auto& e : r.errors()) out << "  " << e << "\n";
    out << "arcs " << s.num_arcs() << " pieces " << s.num_pieces() << " chi " << euler_characteristic(s)
        << " |S.D| " << c.disk_intersections << " components " << c.components
        << (c.orientable ? " orientable" : " one-sided") << "\n";
    emit(o, out.str());
  }
  return r.ok() ? 0 : 1;
}

int cmd_reduce(const Options& o) {
  auto s = load(o);
  auto red = reduce_to_standard(s);
  if (json_out(o)) {
    nlohmann::json j{{"complexity_before", complexity(s).str()},
                     {"complexity_after", complexity(red.surface).str()},
                     {"moves", red.log.to_json()},
                     {"surface", to_json(red.surface)}};
    emit(o, dump(j));
  } else {
    std::ostringstream out;
    out << "# " << complexity(s).str() << " -> " << complexity(red.surface).str() << ", "
        << red.log.moves.size() << " moves\n";
    std::istringstream lines(red.log.str());
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
    out << serialize_surface(red.surface);
    emit(o, out.str());
  }
  return 0;
}

int cmd_graph(const Options& o) {
  auto s = load(o);
  auto g = build_graph(s);
  auto t = is_trivial(s, g);
  if (json_out(o)) {
    nlohmann::json pieces = nlohmann::json::array();
    for (int p : t.cycle_pieces) pieces.push_back(s.piece(p).name);
    nlohmann::json j{{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"trivial", t.trivial},
                     {"ball", t.ball}, {"cycle_pieces", pieces}, {"edge_list", export_edge_list(s, g)}};
    emit(o, dump(j));
  } else {
    std::ostringstream out;
    out << export_edge_list(s, g);
    out << "# " << (t.trivial ? "trivial: cycle in ps-ball " + std::to_string(t.ball) : std::string("nontrivial"))
        << "\n";
    emit(o, out.str());
  }
  return 0;
}

int cmd_polygons(const Options& o) {
  auto s = reduce_to_standard(load(o)).surface;
  auto c = polygon_census(s);
  emit(o, json_out(o) ? dump(polygon_census_json(s, c.balls, c.classes))
                      : polygon_census_text(s, c.balls, c.classes));
  return 0;
}

int cmd_decide(const Options& o) {
  auto s = load(o);
  auto v = decide(s);
  emit(o, json_out(o) ? dump(verdict_json(s, v)) : verdict_text(s, v));
  return 0;
}

int cmd_oracle(const Options& o) {
  auto s = load(o);
  auto r = is_injective(s);
  if (json_out(o)) {
    emit(o, dump(oracle_json(r)));
  } else {
    std::ostringstream out;
    out << (r.injective ? "injective" : "not injective") << " rank " << r.image_rank << " of " << r.surface_rank
        << "\n";
    for (const auto& w : r.images) out << "  " << word_string(w) << "\n";
    emit(o, out.str());
  }
  return 0;
}

int cmd_render(const Options& o) {
  emit(o, render_diagram(load(o)));
  return 0;
}

int cmd_gen(const Options& o) {
  if (o.family.empty()) throw std::runtime_error("gen needs --family");
  Options g = o;
  g.input.clear();
  auto s = load(g);
  emit(o, json_out(o) ? dump(to_json(s)) : serialize_surface(s));
  return 0;
}

// One row per n: verdict, timing and the oracle's opinion.
int cmd_report(const Options& o) {
  std::vector<std::string> families;
  if (o.family.empty()) families = {"qiu", "jaco"};
  else families = {o.family};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& fam : families)
    for (int n = 1; n <= o.max_n; ++n) {
      Options g = o;
      g.input.clear();
      g.family = fam;
      g.n = n;
      auto s = load(g);
      auto t0 = std::chrono::steady_clock::now();
      auto v = decide(s);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      bool inj = is_injective(s).injective;
      rows.push_back({{"family", fam},
                      {"variant", fam == "qiu" ? o.variant : ""},
                      {"n", n},
                      {"arcs", s.num_arcs()},
                      {"chi", euler_characteristic(s)},
                      {"verdict", verdict_name(v.kind)},
                      {"stage", v.stage},
                      {"bigon_classes", v.census ? v.census->classes.bigon_classes() : 0},
                      {"injective", inj},
                      {"ms", ms}});
    }
  if (json_out(o)) {
    emit(o, dump(rows));
    return 0;
  }
  std::ostringstream out;
  out << "family   n  arcs  chi  verdict         stage     bigons  injective  ms\n";
  for (const auto& r : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-2d %-5d %-4d %-15s %-9s %-7d %-10s %.1f\n",
                  (r["family"].get<std::string>() + (r["variant"] == "" || r["variant"] == "original"
                                                         ? ""
                                                         : "/" + r["variant"].get<std::string>()))
                      .c_str(),
                  r["n"].get<int>(), r["arcs"].get<int>(), r["chi"].get<int>(),
                  r["verdict"].get<std::string>().c_str(), r["stage"].get<std::string>().c_str(),
                  r["bigon_classes"].get<int>(), r["injective"].get<bool>() ? "yes" : "no", r["ms"].get<double>());
    out << line;
  }
  emit(o, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incompressibility of surfaces in a genus-2 handlebody"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool source) {
    if (source) {
      sub->add_option("--input,-i", o.input, "surface file (text or JSON)");
      sub->add_option("--family", o.family, "generated family instead of a file")->check(CLI::IsMember({"qiu", "jaco"}));
      sub->add_option("--n", o.n, "family parameter")->check(CLI::Range(1, 100000));
      sub->add_option("--variant", o.variant, "qiu variant")->check(CLI::IsMember({"original", "fig12a", "fig12b"}));
    }
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out,-o", o.out, "write output to a file");
  };
  std::map<std::string, std::function<int(const Options&)>> run = {
      {"validate", cmd_validate}, {"reduce", cmd_reduce}, {"graph", cmd_graph},
      {"polygons", cmd_polygons}, {"decide", cmd_decide}, {"oracle", cmd_oracle},
      {"render", cmd_render},     {"gen", cmd_gen},       {"report", cmd_report}};
  const std::map<std::string, std::string> help = {
      {"validate", "check structural invariants"},
      {"reduce", "reduce to standard position and print the move log"},
      {"graph", "retract graph edge list and triviality"},
      {"polygons", "polygon census of the reduced surface"},
      {"decide", "incompressibility verdict"},
      {"oracle", "pi1-injectivity by folding"},
      {"render", "SVG diagram"},
      {"gen", "emit a family member"},
      {"report", "verdict table over a family"}};
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    add_common(sub, name != "report");
    if (name == "report") {
      sub->add_option("--family", o.family, "qiu or jaco (default both)")->check(CLI::IsMember({"qiu", "jaco"}));
      sub->add_option("--variant", o.variant, "qiu variant")->check(CLI::IsMember({"original", "fig12a", "fig12b"}));
      sub->add_option("--max-n", o.max_n, "largest n")->check(CLI::Range(1, 100000));
    }
  }
  CLI11_PARSE(app, argc, argv);
  try {
    for (auto* sub : app.get_subcommands()) return run.at(sub->get_name())(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
