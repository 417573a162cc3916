#pragma once

// SVG overlay of a pixelation: outline, pixel grid, dashed slice-segments,
// crosses, candidate guards, and cameras with the pixels they see shaded.
// Output depends only on the inputs, element order included.

#include <string>
#include <vector>

#include "slidecam/gallery.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam {

struct RenderOptions {
  bool pixels = true;
  bool slice_segments = true;
  bool crosses = true;
  bool guards = true;
  bool visibility = true;
  int scale = 20;  // SVG units per polygon unit
};

std::string render_svg(const Pixelation& pix, const std::vector<Camera>& cameras = {}, const RenderOptions& options = {});

}  // namespace slidecam
