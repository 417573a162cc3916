#include "slidecam/io.hpp"

#include <algorithm>
#include <sstream>

namespace slidecam {

namespace {

Ring ring_from_json(const json& arr) {
  if (!arr.is_array()) throw FormatError("ring must be an array of [x, y] pairs");
  Ring ring;
  for (const json& pt : arr) {
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer() || !pt[1].is_number_integer()) {
      throw FormatError("vertex must be a pair of integers");
    }
    ring.push_back({pt[0].get<Coord>(), pt[1].get<Coord>()});
  }
  return ring;
}

json ring_to_json(const Ring& ring) {
  json arr = json::array();
  for (Point p : ring) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

std::vector<Ring> rings_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("outer")) throw FormatError("polygon needs an \"outer\" ring");
  std::vector<Ring> rings{ring_from_json(doc.at("outer"))};
  if (doc.contains("holes")) {
    if (!doc.at("holes").is_array()) throw FormatError("\"holes\" must be an array of rings");
    for (const json& h : doc.at("holes")) rings.push_back(ring_from_json(h));
  }
  return rings;
}

OrthoPolygon polygon_from_json(const json& doc) { return validate_polygon(rings_from_json(doc)); }

OrthoPolygon parse_polygon(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("polygon JSON: ") + e.what());
  }
  return polygon_from_json(doc);
}

json polygon_to_json(const OrthoPolygon& polygon) {
  json doc;
  doc["outer"] = ring_to_json(polygon.outer);
  doc["holes"] = json::array();
  for (const Ring& h : polygon.holes) doc["holes"].push_back(ring_to_json(h));
  return doc;
}

std::string dump_polygon(const OrthoPolygon& polygon) { return polygon_to_json(polygon).dump(); }

json camera_to_json(const Camera& camera) {
  return {{"orientation", std::string(1, orientation_char(camera.orientation))},
          {"anchor", camera.anchor},
          {"span", {camera.span.lo, camera.span.hi}}};
}

Camera camera_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("orientation") || !doc.contains("anchor") || !doc.contains("span")) {
    throw FormatError("camera needs orientation, anchor and span");
  }
  const std::string o = doc.at("orientation").get<std::string>();
  if (o != "H" && o != "V") throw FormatError("camera orientation must be \"H\" or \"V\"");
  const json& span = doc.at("span");
  if (!doc.at("anchor").is_number_integer() || !span.is_array() || span.size() != 2 || !span[0].is_number_integer() ||
      !span[1].is_number_integer()) {
    throw FormatError("camera anchor and span must be integers");
  }
  Camera c{o == "H" ? Orientation::kHorizontal : Orientation::kVertical, doc.at("anchor").get<Coord>(),
           {span[0].get<Coord>(), span[1].get<Coord>()}};
  if (c.span.lo > c.span.hi) throw FormatError("camera span is reversed");
  return c;
}

json solution_to_json(const Pixelation& pix, const Solution& solution) {
  json doc;
  doc["size"] = solution.size();
  doc["method"] = solution.method;
  doc["cameras"] = json::array();
  for (std::size_t id : solution.guards) {
    const GuardSegment& g = pix.guards.at(id);
    json cam = camera_to_json({g.orientation, g.anchor, g.span});
    cam["guard"] = id;
    doc["cameras"].push_back(std::move(cam));
  }
  doc["certificate"] = json::array();
  for (const CoverageWitness& w : solution.certificate) {
    doc["certificate"].push_back({{"cross", w.cross}, {"guard", w.guard}, {"sigma", w.sigma}});
  }
  return doc;
}

std::vector<Camera> cameras_from_solution_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("cameras") || !doc.at("cameras").is_array()) {
    throw FormatError("solution needs a \"cameras\" array");
  }
  std::vector<Camera> out;
  for (const json& c : doc.at("cameras")) out.push_back(camera_from_json(c));
  return out;
}

json instance_to_json(const HittingInstance& inst) {
  json doc;
  doc["universe"] = inst.universe;
  doc["crosses"] = inst.cross_ids;
  doc["weights"] = inst.weights;
  doc["sets"] = json::array();
  for (const auto& s : inst.sets) doc["sets"].push_back(inst.to_guard_ids(s));
  return doc;
}

json approx_report_to_json(const ApproxReport& report) {
  return {{"status", to_string(report.result.status)},
          {"size", report.result.solution.size()},
          {"opt_guess_history", report.guesses},
          {"iterations", report.iterations},
          {"net_sizes", report.net_sizes},
          {"final_guess", report.final_guess},
          {"final_budget", report.final_budget},
          {"ratio_bound", report.ratio_bound}};
}

json bound_report_to_json(const BoundReport& report) {
  return {{"status", to_string(report.status)},
          {"n", report.n},
          {"simple", report.simple},
          {"msc", report.msc},
          {"mhsc", report.mhsc},
          {"msc_bound", report.msc_bound},
          {"mhsc_bound", report.mhsc_bound},
          {"msc_ok", report.msc_ok},
          {"mhsc_ok", report.mhsc_ok}};
}

json pixelation_summary(const Pixelation& pix) {
  return {{"n", pix.polygon.vertex_count()},
          {"pixels", pix.pixels.size()},
          {"slices_h", pix.slices_h.size()},
          {"slices_v", pix.slices_v.size()},
          {"crosses", pix.crosses.size()},
          {"guards", pix.guards.size()},
          {"guards_h", pix.guard_ids(true, false).size()},
          {"guards_v", pix.guard_ids(false, true).size()},
          {"dual_edges", pix.dual_edges.size()},
          {"thin", is_thin(pix)}};
}

std::string decomposition_to_td(const TreeDecomposition& td, std::size_t vertex_count) {
  std::size_t largest = 0;
  for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
  std::ostringstream os;
  os << "s td " << td.node_count() << ' ' << largest << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (std::size_t v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (std::size_t i = 0; i < td.parent.size(); ++i) {
    if (td.parent[i] != npos) os << td.parent[i] + 1 << ' ' << i + 1 << '\n';
  }
  return os.str();
}

}  // namespace slidecam
