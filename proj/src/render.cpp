#include "slidecam/render.hpp"

#include <algorithm>
#include <sstream>

namespace slidecam {

namespace {

class Canvas {
 public:
  // The scale is rounded up to an even number so half-integer points land on integers.
  Canvas(const Pixelation& pix, int scale) : scale_(std::max<Coord>(2, scale + (scale & 1))) {
    min_x_ = pix.x_cuts.front();
    max_y_ = pix.y_cuts.back();
    width_ = (pix.x_cuts.back() - min_x_) * scale_ + 2 * kMargin;
    height_ = (max_y_ - pix.y_cuts.front()) * scale_ + 2 * kMargin;
  }

  // Doubled coordinates in, SVG units out; y grows downwards.
  Coord x2(Coord twice) const { return (twice - 2 * min_x_) * scale_ / 2 + kMargin; }
  Coord y2(Coord twice) const { return (2 * max_y_ - twice) * scale_ / 2 + kMargin; }
  Coord x(Coord v) const { return x2(2 * v); }
  Coord y(Coord v) const { return y2(2 * v); }
  Coord width() const { return width_; }
  Coord height() const { return height_; }

 private:
  static constexpr Coord kMargin = 10;
  Coord scale_;
  Coord min_x_ = 0;
  Coord max_y_ = 0;
  Coord width_ = 0;
  Coord height_ = 0;
};

void rect(std::ostream& os, const Canvas& cv, const Rect& r, const char* cls, std::size_t id) {
  os << "<rect class=\"" << cls << "\" data-id=\"" << id << "\" x=\"" << cv.x(r.x1) << "\" y=\"" << cv.y(r.y2)
     << "\" width=\"" << cv.x(r.x2) - cv.x(r.x1) << "\" height=\"" << cv.y(r.y1) - cv.y(r.y2) << "\"/>\n";
}

void line2(std::ostream& os, const Canvas& cv, Coord ax2, Coord ay2, Coord bx2, Coord by2, const char* cls,
           std::size_t id) {
  os << "<line class=\"" << cls << "\" data-id=\"" << id << "\" x1=\"" << cv.x2(ax2) << "\" y1=\"" << cv.y2(ay2)
     << "\" x2=\"" << cv.x2(bx2) << "\" y2=\"" << cv.y2(by2) << "\"/>\n";
}

void segment(std::ostream& os, const Canvas& cv, Orientation o, Coord anchor2, Interval span, const char* cls,
             std::size_t id) {
  if (o == Orientation::kHorizontal) line2(os, cv, 2 * span.lo, anchor2, 2 * span.hi, anchor2, cls, id);
  else line2(os, cv, anchor2, 2 * span.lo, anchor2, 2 * span.hi, cls, id);
}

void ring_path(std::ostream& os, const Canvas& cv, const Ring& ring) {
  for (std::size_t i = 0; i < ring.size(); ++i) os << (i == 0 ? "M" : " L") << cv.x(ring[i].x) << ' ' << cv.y(ring[i].y);
  os << " Z";
}

}  // namespace

std::string render_svg(const Pixelation& pix, const std::vector<Camera>& cameras, const RenderOptions& options) {
  const Canvas cv(pix, options.scale);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width() << "\" height=\""
     << cv.height() << "\" viewBox=\"0 0 " << cv.width() << ' ' << cv.height() << "\">\n";
  os << "<style>"
        ".polygon{fill:#f4f4f4;stroke:#000;stroke-width:2;fill-rule:evenodd}"
        ".pixel{fill:none;stroke:#bbb;stroke-width:0.5}"
        ".visible{fill:#9ecae1;fill-opacity:0.6;stroke:none}"
        ".slice-segment{stroke:#888;stroke-width:1;stroke-dasharray:4 3}"
        ".cross{fill:#000}"
        ".guard{stroke:#d95f02;stroke-width:0.75;stroke-opacity:0.5}"
        ".camera{stroke:#b30000;stroke-width:4;stroke-linecap:round}"
        "</style>\n";

  os << "<g id=\"outline\"><path class=\"polygon\" d=\"";
  ring_path(os, cv, pix.polygon.outer);
  for (const Ring& h : pix.polygon.holes) {
    os << ' ';
    ring_path(os, cv, h);
  }
  os << "\"/></g>\n";

  if (options.visibility && !cameras.empty()) {
    std::vector<std::size_t> seen;
    for (const Camera& c : cameras) {
      const std::vector<std::size_t> v = visible_region(pix, c.orientation, c.anchor, c.span);
      seen.insert(seen.end(), v.begin(), v.end());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    os << "<g id=\"visible\">\n";
    for (std::size_t p : seen) rect(os, cv, pix.pixels[p].rect, "visible", p);
    os << "</g>\n";
  }
  if (options.pixels) {
    os << "<g id=\"pixels\">\n";
    for (std::size_t p = 0; p < pix.pixels.size(); ++p) rect(os, cv, pix.pixels[p].rect, "pixel", p);
    os << "</g>\n";
  }
  if (options.slice_segments) {
    os << "<g id=\"slice-segments\">\n";
    for (std::size_t s = 0; s < pix.sigma_count(); ++s) {
      const SliceSegment& sg = pix.sigma(s);
      segment(os, cv, sg.orientation, sg.anchor.twice, sg.span, "slice-segment", s);
    }
    os << "</g>\n";
  }
  if (options.guards) {
    os << "<g id=\"guards\">\n";
    for (const GuardSegment& g : pix.guards) segment(os, cv, g.orientation, 2 * g.anchor, g.span, "guard", g.id);
    os << "</g>\n";
  }
  if (options.crosses) {
    os << "<g id=\"crosses\">\n";
    for (std::size_t c = 0; c < pix.crosses.size(); ++c) {
      os << "<circle class=\"cross\" data-id=\"" << c << "\" cx=\"" << cv.x2(pix.crosses[c].x.twice) << "\" cy=\""
         << cv.y2(pix.crosses[c].y.twice) << "\" r=\"2\"/>\n";
    }
    os << "</g>\n";
  }
  if (!cameras.empty()) {
    os << "<g id=\"cameras\">\n";
    for (std::size_t i = 0; i < cameras.size(); ++i) {
      segment(os, cv, cameras[i].orientation, 2 * cameras[i].anchor, cameras[i].span, "camera", i);
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace slidecam
