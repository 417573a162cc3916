#pragma once

// JSON and text formats: polygons, solutions, hitting-set instances, reports,
// and tree decompositions in the PACE .td layout.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slidecam/approx.hpp"
#include "slidecam/exact.hpp"
#include "slidecam/gallery.hpp"
#include "slidecam/geometry.hpp"
#include "slidecam/hitset.hpp"
#include "slidecam/pixelation.hpp"
#include "slidecam/treewidth.hpp"

namespace slidecam {

using nlohmann::json;

// Malformed documents (as opposed to well-formed but invalid polygons).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Ring> rings_from_json(const json& doc);
OrthoPolygon polygon_from_json(const json& doc);  // validates
OrthoPolygon parse_polygon(std::string_view text);
json polygon_to_json(const OrthoPolygon& polygon);
// One line, no spaces; stable for identical polygons.
std::string dump_polygon(const OrthoPolygon& polygon);

json camera_to_json(const Camera& camera);
Camera camera_from_json(const json& doc);
json solution_to_json(const Pixelation& pix, const Solution& solution);
std::vector<Camera> cameras_from_solution_json(const json& doc);

json instance_to_json(const HittingInstance& inst);
json approx_report_to_json(const ApproxReport& report);
json bound_report_to_json(const BoundReport& report);
json pixelation_summary(const Pixelation& pix);

// "s td <bags> <max bag size> <vertices>", then "b <i> <v...>" and tree edges,
// all 1-based.
std::string decomposition_to_td(const TreeDecomposition& td, std::size_t vertex_count);

}  // namespace slidecam
