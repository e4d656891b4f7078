#ifndef HSURF_REPORT_HPP
#define HSURF_REPORT_HPP

// Verdict reports in JSON and plain text.

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hsurf/free_group.hpp"
#include "hsurf/solver.hpp"
#include "hsurf/standard_position.hpp"

namespace hsurf {

inline nlohmann::json verdict_json(const SurfaceComplex& input, const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind);
  j["stage"] = v.stage;
  j["reason"] = v.reason;
  j["complexity_before"] = complexity(input).str();
  j["complexity_after"] = complexity(v.reduction.surface).str();
  j["moves"] = v.reduction.log.to_json();
  j["chi"] = euler_characteristic(input);
  if (v.census) {
    j["bigon_classes"] = v.census->classes.bigon_classes();
    j["saddle_bound"] = v.census->saddle_bound;
    j["polygon_types"] = v.census->classes.types.size();
  }
  if (v.cycle && v.cycle->trivial) {
    nlohmann::json pieces = nlohmann::json::array();
    for (int p : v.cycle->cycle_pieces) pieces.push_back(v.reduction.surface.piece(p).name);
    j["witness"] = {{"ball", v.cycle->ball}, {"cycle_pieces", pieces}};
  }
  if (v.standard) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& c : v.standard->checks) props.push_back({{"property", c.property}, {"pass", c.pass}, {"failures", c.failures}});
    j["standard_properties"] = props;
  }
  if (v.solve) {
    j["solve"] = {{"status", status_name(v.solve->status)},
                  {"nodes", v.solve->nodes},
                  {"max_polygons", v.solve->max_polygons}};
    if (v.solve->certificate) j["certificate"] = certificate_json(v.reduction.surface, *v.census, *v.solve->certificate);
  }
  return j;
}

inline std::string verdict_text(const SurfaceComplex& input, const Verdict& v) {
  auto j = verdict_json(input, v);
  std::ostringstream out;
  out << "verdict " << j["verdict"].get<std::string>() << "\n";
  out << "stage " << j["stage"].get<std::string>() << "\n";
  out << "reason " << j["reason"].get<std::string>() << "\n";
  out << "complexity " << j["complexity_before"].get<std::string>() << " -> "
      << j["complexity_after"].get<std::string>() << "\n";
  out << "moves " << v.reduction.log.moves.size() << "\n" << v.reduction.log.str();
  if (j.contains("bigon_classes"))
    out << "bigon_classes " << j["bigon_classes"] << "\nsaddle_bound " << j["saddle_bound"] << "\n";
  if (j.contains("witness")) {
    out << "witness ball " << j["witness"]["ball"] << " cycle";
    for (const auto& p : j["witness"]["cycle_pieces"]) out << " " << p.get<std::string>();
    out << "\n";
  }
  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    out << "certificate " << c["instances"].size() << " polygons, E_D " << c["E_D"] << ", E_S " << c["E_S"] << "\n";
    for (const auto& inst : c["instances"]) {
      out << "  class " << inst["class"] << " ball " << inst["ball"] << " size " << inst["size"] << " corners";
      for (const auto& x : inst["corners"]) out << " " << x.get<std::string>();
      out << "\n";
    }
    out << "  boundary in S: " << c["boundary_in_surface"].get<std::string>() << "\n";
  }
  return out.str();
}

inline nlohmann::json oracle_json(const InjectivityResult& r) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& w : r.images) images.push_back(word_string(w));
  return {{"injective", r.injective}, {"surface_rank", r.surface_rank}, {"image_rank", r.image_rank}, {"images", images}};
}

}  // namespace hsurf

#endif  // HSURF_REPORT_HPP
